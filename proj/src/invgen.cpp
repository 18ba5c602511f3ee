#include "grit/invgen.hpp"

#include "grit/embedding.hpp"
#include "grit/error.hpp"

#include <omp.h>

#include <numeric>
#include <set>

namespace grit {

std::string x_name(int i, int j) { return "x" + std::to_string(i) + std::to_string(j); }

Matrix<Polynomial> generic_matrix(int n) {
    if (n < 1 || n > 9) throw DomainError("generic matrix size must be 1..9");
    const auto sz = static_cast<std::size_t>(n);
    Matrix<Polynomial> x(sz, sz);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            x(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = Polynomial::variable(x_name(i, j));
    return x;
}

Matrix<Polynomial> generator_matrix(const GroupPresentation& p) {
    check_shape(p);
    const auto space = p.space();
    const auto cols = u_columns<Polynomial>(p, generic_matrix(p.n));
    Matrix<Polynomial> m(cols.size(), space->size());
    for (std::size_t s = 0; s < cols.size(); ++s)
        for (const auto& [lab, c] : cols[s].entries) m(s, lab) = c;
    return m;
}

namespace {

void combinations(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
        cur.push_back(v);
        combinations(n, k, v + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    combinations(n, k, 1, cur, out);
    return out;
}

Polynomial minor_of(const Matrix<Polynomial>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Matrix<Polynomial> sub(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b)
            sub(a, b) = m(static_cast<std::size_t>(rows[a] - 1), static_cast<std::size_t>(cols[b] - 1));
    return det_laplace(sub);
}

}  // namespace

std::vector<Minor> initial_segment_minors(const Matrix<Polynomial>& m, int s_max, bool all_rows, Exec exec) {
    const int nr = static_cast<int>(m.rows());
    const int nc = static_cast<int>(m.cols());
    if (s_max < 1 || s_max > nr) throw DomainError("s_max must lie in 1.." + std::to_string(nr));
    std::vector<Minor> out;
    for (int s = 1; s <= s_max && s <= nc; ++s) {
        std::vector<std::vector<int>> row_sets;
        if (all_rows) {
            row_sets = subsets(nr, s);
        } else {
            row_sets.emplace_back(static_cast<std::size_t>(s));
            std::iota(row_sets.back().begin(), row_sets.back().end(), 1);
        }
        const auto col_sets = subsets(nc, s);
        for (const auto& rows : row_sets) {
            std::vector<Polynomial> vals(col_sets.size());
            const auto count = static_cast<std::ptrdiff_t>(col_sets.size());
            if (exec == Exec::serial) {
                for (std::ptrdiff_t k = 0; k < count; ++k)
                    vals[static_cast<std::size_t>(k)] = minor_of(m, rows, col_sets[static_cast<std::size_t>(k)]);
            } else {
#pragma omp parallel for schedule(dynamic, 8)
                for (std::ptrdiff_t k = 0; k < count; ++k)
                    vals[static_cast<std::size_t>(k)] = minor_of(m, rows, col_sets[static_cast<std::size_t>(k)]);
            }
            for (std::size_t k = 0; k < col_sets.size(); ++k)
                if (!vals[k].is_zero()) out.push_back({rows, col_sets[k], std::move(vals[k])});
        }
    }
    return out;
}

bool check_U_invariance(const Polynomial& f, const GroupPresentation& p) {
    check_shape(p);
    std::vector<Polynomial> params{Polynomial(1)};
    for (int k = 2; k <= p.n; ++k) params.push_back(Polynomial::variable("c" + std::to_string(k)));
    const Matrix<Polynomial> x = generic_matrix(p.n);
    const Matrix<Polynomial> y = x * u_matrix<Polynomial>(p, params);
    std::map<std::string, Polynomial> bind;
    for (int i = 1; i <= p.n; ++i)
        for (int j = 1; j <= p.n; ++j)
            bind.emplace(x_name(i, j), y(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)));
    return f.substitute_partial(bind) == f;
}

TildeWeight check_tilde_weight(const Polynomial& f, const std::vector<int>& w) {
    if (f.is_zero()) throw DomainError("the zero polynomial has no weight");
    const auto n = static_cast<long>(w.size());
    const long sum = std::accumulate(w.begin(), w.end(), 0L);
    std::vector<long> var_weight;
    for (const auto& v : f.variables()) {
        int i = 0, j = 0;
        if (v.size() != 3 || v[0] != 'x' || !std::isdigit(static_cast<unsigned char>(v[1])) ||
            !std::isdigit(static_cast<unsigned char>(v[2])))
            throw DomainError("unexpected variable " + v);
        i = v[1] - '0';
        j = v[2] - '0';
        if (i < 1 || j < 1 || i > n || j > n) throw DomainError("variable " + v + " outside the matrix");
        var_weight.push_back(n * w[static_cast<std::size_t>(j - 1)] - sum);
    }
    std::set<long> seen;
    for (const auto& [e, c] : f.terms()) {
        long s = 0;
        for (std::size_t k = 0; k < e.size(); ++k) s += var_weight[k] * e[k];
        seen.insert(s);
    }
    TildeWeight out;
    out.weights.assign(seen.begin(), seen.end());
    out.weight_vector = seen.size() == 1;
    if (out.weight_vector) out.weight = *seen.begin();
    return out;
}

}  // namespace grit
