#include "grit/polynomial.hpp"

#include "grit/error.hpp"
#include "grit/text.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace grit {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

std::pair<std::string, std::vector<long>> split_name(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    std::vector<long> nums;
    std::size_t j = i;
    while (j < s.size()) {
        if (std::isdigit(static_cast<unsigned char>(s[j]))) {
            std::size_t k = j;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            nums.push_back(std::stol(s.substr(j, std::min<std::size_t>(k - j, 15))));
            j = k;
        } else {
            nums.push_back(-1 - static_cast<unsigned char>(s[j]));
            ++j;
        }
    }
    return {s.substr(0, i), nums};
}

}  // namespace

bool canonical_variable_less(const std::string& a, const std::string& b) {
    if (a == b) return false;
    // the Laurent parameter sorts after everything else
    if (a == "t") return false;
    if (b == "t") return true;
    auto [pa, na] = split_name(a);
    auto [pb, nb] = split_name(b);
    if (pa != pb) return pa < pb;
    if (na != nb) return na < nb;
    return a < b;
}

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, Exponents exps, Rational coeff) {
    if (vars.size() != exps.size()) throw DomainError("exponent vector length mismatch");
    Polynomial p;
    p.vars_ = std::move(vars);
    if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
}

Polynomial Polynomial::parse(std::string_view text) {
    const auto raw = text::parse_terms(text);
    Polynomial out;
    for (const auto& t : raw) {
        Polynomial term(t.coeff);
        for (std::size_t k = 0; k < t.factors.size(); ++k) {
            const auto& [name, e] = t.factors[k];
            if (e < 0) throw ParseError("negative exponent on " + name, t.factor_positions[k]);
            term *= variable(name).pow(static_cast<unsigned>(e));
        }
        out += term;
    }
    return out;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                              terms_.begin()->first.end(),
                                              [](int e) { return e == 0; }));
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

int Polynomial::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    const auto idx = static_cast<std::size_t>(it - vars_.begin());
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

std::vector<std::string> Polynomial::used_variables() const {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < vars_.size(); ++v)
        for (const auto& [e, c] : terms_)
            if (e[v] > 0) {
                out.push_back(vars_[v]);
                break;
            }
    return out;
}

WeightedDegree Polynomial::weighted_degree(const std::vector<int>& weights) const {
    if (is_zero()) throw DomainError("weighted degree of the zero polynomial is undefined");
    if (weights.size() != vars_.size()) throw DomainError("weight vector length mismatch");
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (std::size_t v = 0; v < e.size(); ++v) d += e[v] * weights[v];
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return WeightedDegree{false, std::nullopt};
        }
    }
    return WeightedDegree{true, deg};
}

WeightedDegree Polynomial::weighted_degree(const std::map<std::string, int>& weights) const {
    std::vector<int> w(vars_.size(), 0);
    for (std::size_t v = 0; v < vars_.size(); ++v) {
        auto it = weights.find(vars_[v]);
        if (it != weights.end()) w[v] = it->second;
    }
    return weighted_degree(w);
}

std::vector<std::string> Polynomial::merge_vars(const std::vector<std::string>& a,
                                                const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

Polynomial Polynomial::aligned(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<int> where(vars_.size(), -1);
    for (std::size_t v = 0; v < vars_.size(); ++v) {
        auto it = std::find(vars.begin(), vars.end(), vars_[v]);
        if (it != vars.end()) where[v] = static_cast<int>(it - vars.begin());
    }
    Polynomial out;
    out.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (where[v] < 0) throw DomainError("cannot drop used variable " + vars_[v]);
            ne[static_cast<std::size_t>(where[v])] = e[v];
        }
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

Polynomial Polynomial::compact() const {
    auto used = used_variables();
    std::sort(used.begin(), used.end(), canonical_variable_less);
    return aligned(used);
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.vars_ != vars_) {
        const auto vars = merge_vars(vars_, o.vars_);
        *this = aligned(vars);
        const Polynomial b = o.aligned(vars);
        for (const auto& [e, c] : b.terms_) add_term(e, c);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        Polynomial z;
        z.vars_ = Polynomial::merge_vars(a.vars_, b.vars_);
        return z;
    }
    if (a.vars_ != b.vars_) {
        const auto vars = Polynomial::merge_vars(a.vars_, b.vars_);
        return a.aligned(vars) * b.aligned(vars);
    }
    Polynomial out;
    out.vars_ = a.vars_;
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(Rational(1));
    result = result.aligned(vars_);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) { return (a - b).is_zero(); }

namespace {

Polynomial substitute_impl(const Polynomial& f, const std::map<std::string, Polynomial>& bindings,
                           bool strict) {
    std::vector<Polynomial> values;
    values.reserve(f.variables().size());
    for (const auto& v : f.variables()) {
        auto it = bindings.find(v);
        if (it != bindings.end()) {
            values.push_back(it->second);
        } else if (strict && f.uses(v)) {
            throw DomainError("unbound variable " + v);
        } else {
            values.push_back(Polynomial::variable(v));
        }
    }
    return evaluate_in<Polynomial>(f, values);
}

}  // namespace

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
    return substitute_impl(*this, bindings, true);
}

Polynomial Polynomial::substitute_partial(const std::map<std::string, Polynomial>& bindings) const {
    return substitute_impl(*this, bindings, false);
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& values) const {
    std::vector<Rational> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = values.find(v);
        if (it != values.end()) {
            vals.push_back(it->second);
        } else if (uses(v)) {
            throw DomainError("unbound variable " + v);
        } else {
            vals.emplace_back(0);
        }
    }
    return evaluate_in<Rational>(*this, vals);
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    const Polynomial c = compact();
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, coeff] : c.terms_) {
        const bool neg = coeff.sign() < 0;
        const Rational mag = neg ? -coeff : coeff;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        bool need_star = false;
        if (constant || !mag.is_one()) {
            os << mag.to_string();
            need_star = true;
        }
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (need_star) os << '*';
            os << c.vars_[v];
            if (e[v] != 1) os << '^' << e[v];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace grit
