#pragma once

#include "grit/groups.hpp"
#include "grit/laurent.hpp"
#include "grit/matrix.hpp"
#include "grit/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace grit {

/// Seeded generator of small exact test objects. Same seed, same sequence.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    Rational rational(int span = 5) {
        const int num = integer(-span, span);  // sequenced: argument order is unspecified
        const int den = integer(1, 3);
        return Rational(num, den);
    }

    Rational nonzero(int span = 5) {
        Rational r;
        while (r.is_zero()) r = rational(span);
        return r;
    }

    /// Integer entries in [-span, span], resampled until invertible.
    QMatrix invertible(std::size_t n, int span = 3);

    /// First-row parameters; the first is nonzero.
    std::vector<Rational> params(int n);

    /// A random element of the group presented by p.
    QMatrix group_element(const GroupPresentation& p) { return element_matrix(p, params(p.n)); }

    /// Invertible and outside the group: alternately a generic matrix and a
    /// group element with one entry pushed off the presentation.
    QMatrix non_member(const GroupPresentation& p);

    /// Upper triangular Laurent curve that leaves GL(n) as t -> 0. Three kinds
    /// in turn: random monomial/binomial entries with a moving diagonal;
    /// B0 u(alpha(t)) with B0 upper triangular and Laurent alpha (limit in the
    /// orbit); and the latter times a random torus curve diag(t^m).
    Matrix<LaurentPoly> borel_curve(const GroupPresentation& p);

    std::mt19937_64 rng;

private:
    LaurentPoly laurent_entry(bool nonzero_lead);
    bool flip_ = false;
    int curve_kind_ = 0;
};

/// Membership in the group presented by p.
bool in_group(const GroupPresentation& p, const QMatrix& g);

}  // namespace grit
