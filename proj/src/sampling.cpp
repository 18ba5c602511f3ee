#include "grit/sampling.hpp"

namespace grit {

QMatrix Sampler::invertible(std::size_t n, int span) {
    for (;;) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(integer(-span, span));
        if (!determinant(m).is_zero()) return m;
    }
}

std::vector<Rational> Sampler::params(int n) {
    std::vector<Rational> a{nonzero(3)};
    for (int k = 1; k < n; ++k) a.push_back(rational(3));
    return a;
}

QMatrix Sampler::non_member(const GroupPresentation& p) {
    const auto n = static_cast<std::size_t>(p.n);
    for (;;) {
        QMatrix g;
        flip_ = !flip_;
        if (flip_) {
            g = invertible(n);
        } else {
            g = group_element(p);
            const auto i = static_cast<std::size_t>(integer(0, p.n - 1));
            const auto j = static_cast<std::size_t>(integer(0, p.n - 1));
            g(i, j) += nonzero(3);
        }
        if (!determinant(g).is_zero() && !in_group(p, g)) return g;
    }
}

LaurentPoly Sampler::laurent_entry(bool nonzero_lead) {
    const int e = integer(-2, 2);
    LaurentPoly c = LaurentPoly::monomial(e, nonzero_lead ? nonzero(3) : rational(3));
    if (integer(0, 1) == 1) {
        const int e2 = integer(-2, 2);
        c += LaurentPoly::monomial(e2, rational(3));
    }
    return c;
}

Matrix<LaurentPoly> Sampler::borel_curve(const GroupPresentation& p) {
    const auto sz = static_cast<std::size_t>(p.n);
    const int kind = curve_kind_;
    curve_kind_ = (curve_kind_ + 1) % 3;
    if (kind == 0) {
        for (;;) {
            Matrix<LaurentPoly> c(sz, sz);
            bool moving = false;
            for (std::size_t i = 0; i < sz; ++i)
                for (std::size_t j = i; j < sz; ++j) {
                    if (i != j && integer(0, 2) == 0) continue;
                    c(i, j) = laurent_entry(i == j);
                    if (i == j && c(i, j).is_zero()) c(i, j) = LaurentPoly::monomial(1);
                    if (i == j && (c(i, j).min_order() != 0 || c(i, j).max_order() != 0)) moving = true;
                }
            if (moving) return c;
        }
    }
    Matrix<LaurentPoly> b0(sz, sz);
    for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = i; j < sz; ++j) b0(i, j) = LaurentPoly(i == j ? nonzero(3) : rational(3));
    std::vector<LaurentPoly> alpha;
    // alpha_1 must stay a unit: a single nonzero monomial
    const int e1 = integer(-2, 2);
    alpha.push_back(LaurentPoly::monomial(e1 == 0 ? 1 : e1, nonzero(3)));
    for (int k = 1; k < p.n; ++k) alpha.push_back(laurent_entry(false));
    Matrix<LaurentPoly> c = b0 * u_matrix<LaurentPoly>(p, alpha);
    if (kind == 2) {
        Matrix<LaurentPoly> torus(sz, sz);
        for (std::size_t i = 0; i < sz; ++i) torus(i, i) = LaurentPoly::monomial(integer(-2, 2));
        c = c * torus;
    }
    return c;
}

bool in_group(const GroupPresentation& p, const QMatrix& g) {
    return !g(0, 0).is_zero() && g == element_matrix(p, g.row(0));
}

}  // namespace grit
