#pragma once

#include "grit/groups.hpp"
#include "grit/laurent.hpp"
#include "grit/symwedge.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grit {

/// gn1..gn8 (jet groups) and heisenberg-adjoint.
std::optional<GroupPresentation> builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

/// e1 ^ e2 ^ (e3 + e1^2) ^ (e4 + c e1e3 + e2^2 + e1^3) over the space of gn4.
/// c = 2 is the value the jet group produces; c = 1 is the plain monomial.
QMultiVector i22_point(const Rational& c);

/// Unipotent-times-torus curve diag(t^2, t^3, t^4, t^6) A0 whose limit on
/// gn4 is i22_point(2).
Matrix<LaurentPoly> i22_torus_curve();
/// The curve [[t, t^-2, -t^-5, 0], [0, 1, -2t^-3, 0], [0, 0, t^-1, 0], [0, 0, 0, 1]].
Matrix<LaurentPoly> i22_shear_curve();

}  // namespace grit
