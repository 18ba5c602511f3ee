#include "grit/embedding.hpp"

#include "grit/error.hpp"

#include <map>

namespace grit {

namespace {

template <class C>
bool column_is_zero(const Matrix<C>& a, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r)
        if (!is_zero(a(r, j))) return false;
    return true;
}

void check_square(const GroupPresentation& p, std::size_t rows, std::size_t cols) {
    const auto n = static_cast<std::size_t>(p.n);
    if (rows != n || cols != n) throw DomainError("matrix must be " + std::to_string(n) + "x" + std::to_string(n));
}

using Form = std::map<Exponents, Rational>;

Form form_times_linear(const Form& f, const std::vector<Rational>& v) {
    Form out;
    for (const auto& [m, c] : f)
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k].is_zero()) continue;
            Exponents e = m;
            ++e[k];
            auto [it, fresh] = out.try_emplace(e, c * v[k]);
            if (!fresh) it->second += c * v[k];
        }
    return out;
}

// Ordered compositions of `total` into `parts` positive parts.
void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int a = 1; a <= total - (parts - 1); ++a) {
        cur.push_back(a);
        compositions(total - a, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

template <class C>
std::vector<SymVector<C>> u_columns(const GroupPresentation& p, const Matrix<C>& a) {
    check_square(p, a.rows(), a.cols());
    const auto space = p.space();
    const auto n = static_cast<std::size_t>(p.n);
    std::vector<std::vector<C>> alpha(n);
    for (std::size_t k = 0; k < n; ++k) alpha[k] = a.column(k);
    std::vector<SymVector<C>> cols(n);
    for (int j = 1; j <= p.n; ++j)
        for (int i = 1; i <= j; ++i) {
            const Polynomial f = p.entry(i, j);
            if (f.is_zero()) continue;
            for (const auto& [lab, c] : eval_sym(*space, i - 1, f, alpha).entries)
                cols[static_cast<std::size_t>(j - 1)].add(lab, c);
        }
    return cols;
}

QMultiVector base_point(const GroupPresentation& p) {
    check_shape(p);
    const auto n = static_cast<std::size_t>(p.n);
    return plucker<Rational>(p, QMatrix::identity(n));
}

template <class C>
MultiVector<C> plucker(const GroupPresentation& p, const Matrix<C>& a, Exec exec) {
    check_square(p, a.rows(), a.cols());
    if (column_is_zero(a, 0)) throw DomainError("first column is zero");
    return wedge(p.space(), u_columns(p, a), exec);
}

QMultiVector embed_jet(int d, const std::vector<std::vector<Rational>>& v) {
    if (d < 1) throw DomainError("dimension must be positive");
    if (v.empty()) throw DomainError("need at least one vector");
    if (v.size() > kMaxWedge) throw DomainError("too many vectors");
    for (const auto& x : v)
        if (static_cast<int>(x.size()) != d) throw DomainError("vector of the wrong length");
    bool zero = true;
    for (const auto& c : v[0]) zero = zero && c.is_zero();
    if (zero) throw DomainError("first vector is zero");

    const int n = static_cast<int>(v.size());
    std::vector<int> w;
    for (int i = 1; i <= n; ++i) w.push_back(i);
    const auto space = SymSpace::make(d, w);

    std::vector<SymVector<Rational>> cols(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= j; ++i) {
            std::vector<std::vector<int>> comps;
            std::vector<int> cur;
            compositions(j, i, cur, comps);
            for (const auto& comp : comps) {
                Form f{{Exponents(static_cast<std::size_t>(d), 0), Rational(1)}};
                for (int a : comp) f = form_times_linear(f, v[static_cast<std::size_t>(a - 1)]);
                for (const auto& [m, c] : f)
                    cols[static_cast<std::size_t>(j - 1)].add(space->index(i - 1, m), c);
            }
        }
    return wedge(space, cols);
}

bool stabilizer_check(const GroupPresentation& p, const QMatrix& g) {
    check_square(p, g.rows(), g.cols());
    if (determinant(g).is_zero()) throw DomainError("matrix is singular");
    const auto space = p.space();
    const auto n = static_cast<std::size_t>(p.n);
    auto cols = u_columns<Rational>(p, QMatrix::identity(n));
    const QMultiVector base = wedge(space, cols);
    for (auto& c : cols) c = apply_to_vector(*space, g, c);
    const QMultiVector moved = wedge(space, cols);
    if (moved.is_zero()) return false;
    return proj_equal(moved, base);
}

bool stabilizer_check_coordinatewise(const GroupPresentation& p, const QMatrix& g) {
    check_square(p, g.rows(), g.cols());
    if (determinant(g).is_zero()) throw DomainError("matrix is singular");
    const QMultiVector base = base_point(p);
    const QMultiVector moved = gl_action(g, base);
    if (moved.is_zero()) return false;
    return proj_equal(moved, base);
}

StabilizerDims stabilizer_lie_dim(const QMultiVector& mv) {
    if (mv.is_zero()) throw DomainError("zero point has no stabiliser");
    const auto d = static_cast<std::size_t>(mv.space().dim());
    std::vector<QMultiVector> images;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) {
            QMatrix e(d, d);
            e(r, s) = Rational(1);
            images.push_back(lie_action(e, mv));
        }
    images.push_back(Rational(-1) * mv);

    std::map<Tuple, std::size_t> row_of;
    for (const auto& im : images)
        for (const auto& [t, c] : im.terms()) row_of.try_emplace(t, row_of.size());
    const std::size_t unknowns = images.size();
    QMatrix sys(std::max<std::size_t>(row_of.size(), 1), unknowns);
    for (std::size_t col = 0; col < unknowns; ++col)
        for (const auto& [t, c] : images[col].terms()) sys(row_of.at(t), col) = c;

    QMatrix lin(sys.rows(), unknowns - 1);
    for (std::size_t r = 0; r < sys.rows(); ++r)
        for (std::size_t c = 0; c + 1 < unknowns; ++c) lin(r, c) = sys(r, c);

    StabilizerDims out;
    out.projective = static_cast<int>(unknowns - rank(sys));
    out.affine = static_cast<int>(unknowns - 1 - rank(lin));
    return out;
}

CurveLimit limit_along_curve(const GroupPresentation& p, const Matrix<LaurentPoly>& c) {
    const MultiVector<LaurentPoly> mv = plucker<LaurentPoly>(p, c);
    if (mv.is_zero()) throw DomainError("Plucker vector of the curve vanishes identically");
    std::vector<LaurentPoly> coeffs;
    for (const auto& [t, x] : mv.terms()) coeffs.push_back(x);
    const int order = laurent_min_order(coeffs);
    CurveLimit out;
    out.order = order;
    out.point = mv.map<Rational>([order](const LaurentPoly& x) { return x.coefficient(order); });
    return out;
}

BoundaryCertificate boundary_certificate(const QMultiVector& mv) {
    const auto pr = project_boundary(mv);
    BoundaryCertificate out;
    out.in_W_v1 = pr.pi_wedge.is_zero();
    out.in_W_det = pr.pi_det.is_zero();
    out.in_orbit_boundary_subspaces = out.in_W_v1 || out.in_W_det;
    return out;
}

std::optional<QMatrix> recover_orbit_matrix(const GroupPresentation& p, const QMultiVector& mv) {
    check_shape(p);
    const SymSpace& s = mv.space();
    if (!(s == *p.space())) throw DomainError("point lives in a different space");
    const auto pr = project_boundary(mv);
    if (pr.pi_wedge.is_zero() || pr.pi_det.is_zero()) return std::nullopt;
    const QMultiVector x = pr.pi_wedge.inverse() * mv;

    const auto n = static_cast<std::size_t>(p.n);
    const auto d = static_cast<std::size_t>(s.dim());
    auto e = [&](std::size_t k) {
        Exponents m(d, 0);
        m[k] = 1;
        return static_cast<std::uint16_t>(s.index(0, m));
    };
    auto pure = [&](std::size_t block) {
        Exponents m(d, 0);
        m[0] = s.weights()[block];
        return static_cast<std::uint16_t>(s.index(static_cast<int>(block), m));
    };

    QMatrix b(n, n);
    b(0, 0) = Rational(1);
    for (std::size_t j = 1; j < n; ++j) {
        Tuple t;
        t.push_back(e(j));
        for (std::size_t k = 1; k < n; ++k) t.push_back(pure(k));
        b(j, 0) = x.coefficient(t);
    }
    for (std::size_t i = 1; i < n; ++i) {
        const Rational sign = (i - 1) % 2 == 0 ? Rational(1) : Rational(-1);
        for (std::size_t j = 1; j < n; ++j) {
            Tuple t;
            t.push_back(e(0));
            t.push_back(e(j));
            for (std::size_t k = 1; k < n; ++k)
                if (k != i) t.push_back(pure(k));
            b(j, i) = sign * x.coefficient(t);
        }
    }
    if (determinant(b).is_zero()) return std::nullopt;
    if (!proj_equal(plucker<Rational>(p, b), mv)) return std::nullopt;
    return b;
}

template std::vector<SymVector<Rational>> u_columns<Rational>(const GroupPresentation&, const QMatrix&);
template std::vector<SymVector<LaurentPoly>> u_columns<LaurentPoly>(const GroupPresentation&,
                                                                   const Matrix<LaurentPoly>&);
template std::vector<SymVector<Polynomial>> u_columns<Polynomial>(const GroupPresentation&,
                                                                 const Matrix<Polynomial>&);
template QMultiVector plucker<Rational>(const GroupPresentation&, const QMatrix&, Exec);
template MultiVector<LaurentPoly> plucker<LaurentPoly>(const GroupPresentation&, const Matrix<LaurentPoly>&,
                                                       Exec);
template MultiVector<Polynomial> plucker<Polynomial>(const GroupPresentation&, const Matrix<Polynomial>&, Exec);

}  // namespace grit
