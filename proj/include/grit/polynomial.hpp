#pragma once

#include "grit/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grit {

using Exponents = std::vector<int>;

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken lexicographically with the first variable most significant.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Orders variable names by alphabetic prefix, then by numeric suffix
/// (a2 < a10, x12 < x21). Used to print polynomials canonically.
bool canonical_variable_less(const std::string& a, const std::string& b);

struct WeightedDegree {
    bool homogeneous = false;
    std::optional<int> degree;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Every polynomial carries its own ordered variable list; binary operations
/// on polynomials with different lists first align both onto the union of the
/// two lists. Exponent vectors are stored densely in that order.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
    Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static Polynomial variable(const std::string& name);
    static Polynomial monomial(std::vector<std::string> vars, Exponents exps, Rational coeff);

    /// Parses the text grammar `c*v^k*... +/- ...`; negative exponents are
    /// rejected.
    static Polynomial parse(std::string_view text);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    /// Coefficient of the monomial with the given exponents (in this
    /// polynomial's variable order).
    Rational coefficient(const Exponents& e) const;

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(const std::string& var) const;
    bool uses(const std::string& var) const { return degree_in(var) > 0; }
    std::vector<std::string> used_variables() const;

    /// Homogeneity with respect to per-variable integer weights. Variables
    /// missing from the map get weight 0. Throws DomainError on zero.
    WeightedDegree weighted_degree(const std::map<std::string, int>& weights) const;
    /// Same, with weights aligned to variables().
    WeightedDegree weighted_degree(const std::vector<int>& weights) const;

    /// Re-expresses over `vars`, which must contain every used variable.
    Polynomial aligned(const std::vector<std::string>& vars) const;
    /// Drops variables that do not occur and sorts the rest canonically.
    Polynomial compact() const;

    /// Substitutes every variable that occurs in the polynomial; throws
    /// DomainError if one of them is unbound.
    Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;
    /// Substitutes the bound variables and leaves the others in place.
    Polynomial substitute_partial(const std::map<std::string, Polynomial>& bindings) const;
    Rational evaluate(const std::map<std::string, Rational>& values) const;

    Polynomial pow(unsigned e) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(int c, Polynomial a) { return a *= Rational(c); }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

    /// Adds `c * x^e` where `e` is in this polynomial's variable order.
    void add_term(const Exponents& e, const Rational& c);

private:
    static std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b);

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }
inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// Evaluates `f` with its i-th variable replaced by `values[i]` in any
/// commutative ring `R` that supports `R * R`, `R + R`, `R * Rational` and
/// construction from a Rational.
template <class R>
R evaluate_in(const Polynomial& f, const std::vector<R>& values) {
    const std::size_t nv = f.variables().size();
    std::vector<std::vector<R>> powers(nv);
    auto power = [&](std::size_t v, int e) -> const R& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(R(Rational(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * values[v]);
        return cache[static_cast<std::size_t>(e)];
    };
    R acc = R(Rational(0));
    for (const auto& [exps, c] : f.terms()) {
        R term = R(c);
        for (std::size_t v = 0; v < nv; ++v)
            if (exps[v] > 0) term = term * power(v, exps[v]);
        acc = acc + term;
    }
    return acc;
}

}  // namespace grit
