#pragma once

#include "grit/rational.hpp"

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace grit {

/// Laurent polynomial in the single parameter t, exact rational coefficients.
class LaurentPoly {
public:
    using TermMap = std::map<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(int exp, const Rational& c = Rational(1));
    /// Accepts the polynomial grammar in the variable t only; negative
    /// exponents are allowed (t^-5 or t^{-5}).
    static LaurentPoly parse(std::string_view text);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(int exp) const;
    /// Smallest exponent with nonzero coefficient; throws on zero.
    int min_order() const;
    int max_order() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    friend LaurentPoly operator*(int c, LaurentPoly a) { return a *= Rational(c); }
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Value at a nonzero rational t.
    Rational evaluate(const Rational& t) const;

    std::string to_string() const;

private:
    void add_term(int e, const Rational& c);
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }
inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

/// Minimum t-order over all nonzero entries. Throws DomainError if every
/// entry is zero.
int laurent_min_order(const std::vector<LaurentPoly>& v);

}  // namespace grit
