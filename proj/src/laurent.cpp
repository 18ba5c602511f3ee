#include "grit/laurent.hpp"

#include "grit/error.hpp"
#include "grit/text.hpp"

#include <sstream>

namespace grit {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int exp, const Rational& c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.emplace(exp, c);
    return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    LaurentPoly out;
    for (const auto& term : text::parse_terms(text)) {
        int e = 0;
        for (std::size_t k = 0; k < term.factors.size(); ++k) {
            if (term.factors[k].first != "t")
                throw ParseError("unexpected variable " + term.factors[k].first +
                                     " in a Laurent entry",
                                 term.factor_positions[k]);
            e += term.factors[k].second;
        }
        out.add_term(e, term.coeff);
    }
    return out;
}

Rational LaurentPoly::coefficient(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_order() const {
    if (terms_.empty()) throw DomainError("order of the zero Laurent polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_order() const {
    if (terms_.empty()) throw DomainError("order of the zero Laurent polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Rational LaurentPoly::evaluate(const Rational& t) const {
    if (t.is_zero() && !terms_.empty() && terms_.begin()->first < 0)
        throw DomainError("Laurent polynomial has a pole at t = 0");
    Rational acc;
    for (const auto& [e, c] : terms_) acc += c * t.pow(e);
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest order first, matching the polynomial printer
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag.to_string();
            continue;
        }
        if (!mag.is_one()) os << mag.to_string() << '*';
        os << 't';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

int laurent_min_order(const std::vector<LaurentPoly>& v) {
    bool found = false;
    int best = 0;
    for (const auto& p : v) {
        if (p.is_zero()) continue;
        const int m = p.min_order();
        if (!found || m < best) best = m;
        found = true;
    }
    if (!found) throw DomainError("all entries are zero");
    return best;
}

}  // namespace grit
