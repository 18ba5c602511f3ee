#pragma once

#include "grit/groups.hpp"
#include "grit/laurent.hpp"
#include "grit/matrix.hpp"
#include "grit/symwedge.hpp"

#include <optional>
#include <vector>

namespace grit {

/// Columns of u(v_1, ..., v_n) written in the SymSpace of the presentation,
/// where v_j is column j of A.
template <class C>
std::vector<SymVector<C>> u_columns(const GroupPresentation& p, const Matrix<C>& a);

/// Wedge of the columns of u(e_1, ..., e_n).
QMultiVector base_point(const GroupPresentation& p);

/// Wedge of the columns of u(A). Throws DomainError on a zero first column.
template <class C>
MultiVector<C> plucker(const GroupPresentation& p, const Matrix<C>& a, Exec exec = default_exec());

/// Test-curve model over C^d: column j is the sum over i and over ordered
/// compositions a_1 + ... + a_i = j of v_{a_1} ... v_{a_i} in Sym^i C^d.
/// Built directly from the compositions, not from a presentation.
QMultiVector embed_jet(int d, const std::vector<std::vector<Rational>>& v);

/// Whether g fixes the base point projectively. Throws on singular g.
bool stabilizer_check(const GroupPresentation& p, const QMatrix& g);

/// The same test computed by acting on every Plucker coordinate of the base
/// point separately (no use of decomposability). Slower; kept as a
/// cross-check.
bool stabilizer_check_coordinatewise(const GroupPresentation& p, const QMatrix& g);

struct StabilizerDims {
    int projective = 0;  // {X : X.mv in Q mv}
    int affine = 0;      // {X : X.mv = 0}
};

/// Lie algebra dimensions of the stabiliser of mv in gl(d), from an exact
/// linear solve in the entries of X and a scalar. Throws on zero mv.
StabilizerDims stabilizer_lie_dim(const QMultiVector& mv);

struct CurveLimit {
    QMultiVector point;
    int order = 0;  // the t-order of the leading coefficient
};

/// Projective limit as t -> 0 of plucker(p, c(t)).
CurveLimit limit_along_curve(const GroupPresentation& p, const Matrix<LaurentPoly>& c);

struct BoundaryCertificate {
    bool in_orbit_boundary_subspaces = false;
    bool in_W_v1 = false;
    bool in_W_det = false;
};

BoundaryCertificate boundary_certificate(const QMultiVector& mv);

/// For mv with nonzero pi_wedge and pi_det, reads a matrix B with first row
/// (1, 0, ..., 0) off the coordinates of mv and returns it if
/// plucker(p, B) is projectively equal to mv.
std::optional<QMatrix> recover_orbit_matrix(const GroupPresentation& p, const QMultiVector& mv);

}  // namespace grit
