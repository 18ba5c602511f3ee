#include "grit/text.hpp"

#include "grit/error.hpp"

#include <cctype>

namespace grit::text {

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::size_t pos() const { return pos_; }

    std::string digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected digits", pos_);
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected variable name", pos_);
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

RawTerm parse_term(Lexer& lx, bool negative) {
    RawTerm term;
    term.coeff = Rational(negative ? -1 : 1);
    bool first = true;
    do {
        const char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(lx.digits(), 10);
            Integer den(1);
            if (lx.accept('/')) {
                const std::size_t at = lx.pos();
                den = Integer(lx.digits(), 10);
                if (den == 0) throw ParseError("zero denominator", at);
            }
            term.coeff *= Rational(num, den);
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t at = lx.pos();
            std::string name = lx.identifier();
            int exp = 1;
            if (lx.accept('^')) {
                const bool braces = lx.accept('{');
                const bool neg = lx.accept('-');
                const std::size_t eat = lx.pos();
                const std::string d = lx.digits();
                if (d.size() > 6) throw ParseError("exponent too large", eat);
                exp = std::stoi(d) * (neg ? -1 : 1);
                if (braces && !lx.accept('}')) throw ParseError("expected '}'", lx.pos());
            }
            term.factors.emplace_back(std::move(name), exp);
            term.factor_positions.push_back(at);
        } else if (lx.at_end()) {
            throw ParseError(first ? "expected a term" : "expected a factor after '*'", lx.pos());
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", lx.pos());
        }
        first = false;
    } while (lx.accept('*'));
    return term;
}

}  // namespace

std::vector<RawTerm> parse_terms(std::string_view input) {
    Lexer lx(input);
    std::vector<RawTerm> out;
    if (lx.at_end()) throw ParseError("empty polynomial", 0);
    bool negative = false;
    if (lx.accept('-'))
        negative = true;
    else
        lx.accept('+');
    out.push_back(parse_term(lx, negative));
    while (!lx.at_end()) {
        if (lx.accept('+'))
            negative = false;
        else if (lx.accept('-'))
            negative = true;
        else
            throw ParseError(std::string("unexpected character '") + lx.peek() + "'", lx.pos());
        out.push_back(parse_term(lx, negative));
    }
    return out;
}

}  // namespace grit::text
