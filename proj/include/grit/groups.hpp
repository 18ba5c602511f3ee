#pragma once

#include "grit/matrix.hpp"
#include "grit/polynomial.hpp"
#include "grit/rational.hpp"
#include "grit/symwedge.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace grit {

/// Name of the k-th first-row parameter (1-based): a1, a2, ...
std::string alpha_name(int k);

/// Upper triangular group whose entries are fixed polynomials in the first
/// row a1..an. Row 1 is (a1, ..., an) and the diagonal is a1^{w_i}; `p`
/// holds the entries strictly above the diagonal below row 1, keyed by
/// 1-based (i, j). Missing entries are zero. A diagonal entry may be given
/// explicitly, in which case it overrides a1^{w_i} (validate checks it).
struct GroupPresentation {
    int n = 1;
    std::vector<int> weights{1};
    std::map<std::pair<int, int>, Polynomial> p;
    /// Free-form notes attached by constructions (reparametrisations etc.).
    std::vector<std::pair<std::string, std::string>> metadata;

    /// Entry (i, j), 1-based, as a polynomial in a1..an.
    Polynomial entry(int i, int j) const;
    std::shared_ptr<const SymSpace> space() const { return SymSpace::make(n, weights); }
};

/// Checks n >= 1, w_1 = 1, w_1 < w_2 <= ... <= w_n and that every key of p
/// satisfies 1 < i <= j <= n. Throws DomainError otherwise.
void check_shape(const GroupPresentation& p);

/// Substitutes a_k -> values[k-1] into f over any coefficient ring.
template <class C>
C eval_alpha(const Polynomial& f, const std::vector<C>& values);

/// The matrix u(values) with entry (i,j) = entry(i,j)(values).
template <class C>
Matrix<C> u_matrix(const GroupPresentation& p, const std::vector<C>& values);

/// u(x1, ..., xn) for fresh variables named prefix1..prefixn.
Matrix<Polynomial> symbolic_u(const GroupPresentation& p, const std::string& prefix);

/// Jet group: weights (1, ..., n), p_{i,j} the sum over compositions of j
/// into i positive parts of the products a_{l1} ... a_{li}.
GroupPresentation make_jet_group(int n);

/// Graded nilpotent Lie algebra with basis x_2..x_n (stored 0-based as
/// 0..m-1) of positive weights, non-decreasing in basis order.
struct GradedLieData {
    std::vector<int> weights;
    /// [x_a, x_b] for a < b, as coefficients on the basis.
    std::map<std::pair<int, int>, std::map<int, Rational>> brackets;

    /// Bracket of two basis vectors, antisymmetry applied.
    std::map<int, Rational> bracket(int a, int b) const;
};

/// Checks positivity, ordering, the grading of every structure constant and
/// the Jacobi identity. Throws DomainError with the first violation.
void check_lie_data(const GradedLieData& l);

/// Adjoint form: the transpose of Ad(exp(sum s_l x_l)) on C z + u, with z the
/// grading element, re-parametrised so that the first row is (1, a2, ..., an)
/// and made homogeneous in a1. The substitution s -> a is recorded in
/// metadata.
GroupPresentation make_adjoint_form(const GradedLieData& l);

/// Three-dimensional Heisenberg algebra, weights (1, 1, 2), [x_2, x_3] = x_4.
GradedLieData heisenberg_lie_data();

struct CheckFailure {
    int i = 0, j = 0;
    std::string witness;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::vector<CheckFailure> failures;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Homogeneity in a (degree w_i), weighted homogeneity (deg a_s = w_s,
/// degree w_j), dependence on a1..a_{j-1} only, and the symbolic closure
/// identity u(b) u(a) = u(first row of u(b) u(a)).
ValidationReport validate_presentation(const GroupPresentation& p);

/// Throws DomainError if values[0] == 0.
QMatrix element_matrix(const GroupPresentation& p, const std::vector<Rational>& values);

/// chi evaluated on the torus element of tilde_torus_matrix(w, t): t^r.
Rational character_weight(const std::vector<int>& w, long r_chi, const Rational& t);
/// diag(t^{n w_i - sum w}); determinant one.
QMatrix tilde_torus_matrix(const std::vector<int>& w, const Rational& t);
/// The exponents n w_i - sum w.
std::vector<long> tilde_torus_exponents(const std::vector<int>& w);

/// Presentation of g^-1 U g for g block diagonal over C* and the equal-weight
/// groups of indices 2..n. Throws DomainError if g is singular or mixes
/// blocks.
GroupPresentation conjugate_presentation(const GroupPresentation& p, const QMatrix& g);

/// The block-mixing map on labels that accompanies conjugation by g: a label
/// in block k goes to sum_i (g^-1)_{ik} times the same monomial in block i.
std::vector<SymVector<Rational>> block_mixing_map(const SymSpace& space, const QMatrix& g);

}  // namespace grit
