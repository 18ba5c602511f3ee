#pragma once

#include "grit/groups.hpp"
#include "grit/matrix.hpp"
#include "grit/parallel.hpp"
#include "grit/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grit {

/// x<i><j>, the (i, j) entry of the generic matrix (1-based).
std::string x_name(int i, int j);

/// The generic n x n matrix (x_ij).
Matrix<Polynomial> generic_matrix(int n);

/// Row s holds the Sym^w coordinates (basis order of P.space()) of column s
/// of u(X) for the generic matrix X.
Matrix<Polynomial> generator_matrix(const GroupPresentation& p);

struct Minor {
    std::vector<int> rows;  // 1-based
    std::vector<int> cols;  // 1-based
    Polynomial value;
};

/// Nonzero s x s minors for s = 1..s_max with rows {1..s}, or with every row
/// subset when all_rows is set. Order: s, then rows, then columns, all
/// lexicographic.
std::vector<Minor> initial_segment_minors(const Matrix<Polynomial>& m, int s_max, bool all_rows = false,
                                          Exec exec = default_exec());

/// f(X u(1, c2, ..., cn)) == f(X) as polynomials in x and c.
bool check_U_invariance(const Polynomial& f, const GroupPresentation& p);

struct TildeWeight {
    bool weight_vector = false;
    std::optional<long> weight;  // set when weight_vector
    std::vector<long> weights;   // distinct monomial weights, ascending
};

/// Weight under x_ij -> t^{n w_j - sum w} x_ij. Variables other than x_ij
/// with 1 <= i, j <= n raise DomainError; zero f also raises.
TildeWeight check_tilde_weight(const Polynomial& f, const std::vector<int>& w);

}  // namespace grit
