#include "support.hpp"

#include "grit/embedding.hpp"
#include "grit/error.hpp"

#include <doctest.h>

using namespace grit;
using testsupport::Gen;

namespace {

struct Term {
    int block;
    Exponents mono;
    long c;
};

SymVector<Rational> vec(const SymSpace& s, const std::vector<Term>& terms) {
    SymVector<Rational> v;
    for (const auto& t : terms) v.add(s.index(t.block, t.mono), Rational(t.c));
    return v;
}

// e1 ^ e2 ^ (e3 + e1^2) ^ (e4 + c e1e3 + e2^2 + e1^3) over the jet space of G4.
QMultiVector i22_point(long c) {
    const auto s = make_jet_group(4).space();
    return wedge<Rational>(s, {vec(*s, {{0, {1, 0, 0, 0}, 1}}), vec(*s, {{0, {0, 1, 0, 0}, 1}}),
                               vec(*s, {{0, {0, 0, 1, 0}, 1}, {1, {2, 0, 0, 0}, 1}}),
                               vec(*s, {{0, {0, 0, 0, 1}, 1},
                                        {1, {1, 0, 1, 0}, c},
                                        {1, {0, 2, 0, 0}, 1},
                                        {2, {3, 0, 0, 0}, 1}})});
}

Matrix<LaurentPoly> laurent(const std::vector<std::vector<const char*>>& rows) {
    Matrix<LaurentPoly> m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = LaurentPoly::parse(rows[i][j]);
    return m;
}

Matrix<LaurentPoly> lift(const QMatrix& a) {
    return a.map<LaurentPoly>([](const Rational& x) { return LaurentPoly::monomial(0, x); });
}

GroupPresentation heisenberg_adjoint() {
    GradedLieData l;
    l.weights = {1, 1, 2};
    l.brackets[{0, 1}] = {{2, Rational(1)}};
    return make_adjoint_form(l);
}

}  // namespace

TEST_CASE("base_point") {
    const auto b2 = base_point(make_jet_group(2));
    CHECK(b2.size() == 2);
    for (const auto& [t, c] : b2.terms()) CHECK(c == Rational(1));
    CHECK(to_text(b2) == "(1)*(1:e1, 1:e2) + (1)*(1:e1, 2:e1^2)");

    const auto b4 = base_point(make_jet_group(4));
    CHECK(b4.coefficient(pure_power_tuple(b4.space())) == Rational(1));
    const auto pr = project_boundary(b4);
    CHECK(pr.pi_wedge == Rational(1));
    CHECK(pr.pi_det == Rational(1));

    const auto b1 = base_point(make_jet_group(1));
    CHECK(b1.size() == 1);
    CHECK(to_text(b1) == "(1)*(1:e1)");
}

TEST_CASE("plucker basics") {
    const auto p = make_jet_group(3);
    CHECK(plucker<Rational>(p, QMatrix::identity(3)) == base_point(p));
    QMatrix z = QMatrix::identity(3);
    z(0, 0) = Rational(0);
    CHECK_THROWS_AS(plucker<Rational>(p, z), DomainError);
    CHECK_THROWS_AS(plucker<Rational>(p, QMatrix::identity(2)), DomainError);

    Gen gen(11);
    const QMatrix a = gen.invertible(3);
    CHECK(plucker<Rational>(p, a, Exec::serial) == plucker<Rational>(p, a, Exec::parallel));
}

TEST_CASE("plucker equivariance and right invariance") {
    Gen gen(21);
    for (int n = 2; n <= 4; ++n) {
        const auto p = make_jet_group(n);
        const auto sz = static_cast<std::size_t>(n);
        for (int k = 0; k < 4; ++k) {
            const QMatrix g = gen.invertible(sz);
            const QMatrix a = gen.invertible(sz);
            CHECK(plucker<Rational>(p, g * a) == gl_action(g, plucker<Rational>(p, a)));
            const QMatrix u = element_matrix(p, gen.params(n));
            CHECK(proj_equal(plucker<Rational>(p, a * u), plucker<Rational>(p, a)));
        }
    }
    // a presentation other than the jet group
    const auto h = heisenberg_adjoint();
    for (int k = 0; k < 3; ++k) {
        const QMatrix a = gen.invertible(4);
        const QMatrix u = element_matrix(h, gen.params(4));
        CHECK(proj_equal(plucker<Rational>(h, a * u), plucker<Rational>(h, a)));
    }
}

TEST_CASE("embed_jet") {
    const auto e1 = embed_jet(1, {{Rational(1)}, {Rational(0)}});
    CHECK(e1.size() == 1);
    CHECK(to_text(e1) == "(1)*(1:e1, 2:e1^2)");

    CHECK(embed_jet(3, {{Rational(1), Rational(0), Rational(0)},
                        {Rational(0), Rational(1), Rational(0)},
                        {Rational(0), Rational(0), Rational(1)}}) == base_point(make_jet_group(3)));
    CHECK_THROWS_AS(embed_jet(2, {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}), DomainError);

    Gen gen(31);
    const auto g3 = make_jet_group(3);
    for (int k = 0; k < 5; ++k) {
        const QMatrix a = gen.invertible(3);
        std::vector<std::vector<Rational>> cols{a.column(0), a.column(1), a.column(2)};
        CHECK(embed_jet(3, cols) == plucker<Rational>(g3, a));
    }

    // d = 2 < n = 3: reparametrising the jet leaves the point fixed
    for (int k = 0; k < 5; ++k) {
        QMatrix v(2, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) v(i, j) = gen.rational(3);
        if (v(0, 0).is_zero() && v(1, 0).is_zero()) v(0, 0) = Rational(1);
        const QMatrix vu = v * element_matrix(g3, gen.params(3));
        const auto x = embed_jet(2, {v.column(0), v.column(1), v.column(2)});
        const auto y = embed_jet(2, {vu.column(0), vu.column(1), vu.column(2)});
        if (x.is_zero()) {
            CHECK(y.is_zero());
            continue;
        }
        CHECK(proj_equal(x, y));
    }
}

TEST_CASE("stabilizer_check") {
    const auto g3 = make_jet_group(3);
    CHECK(stabilizer_check(g3, element_matrix(g3, {Rational(2), Rational(1), Rational(-1)})));
    QMatrix l = QMatrix::identity(3);
    l(1, 0) = Rational(1);
    CHECK_FALSE(stabilizer_check(g3, l));
    CHECK(stabilizer_check(g3, QMatrix::identity(3)));
    CHECK_THROWS_AS(stabilizer_check(g3, QMatrix(3, 3)), DomainError);

    Gen gen(41);
    for (int k = 0; k < 6; ++k) {
        const QMatrix u = element_matrix(g3, gen.params(3));
        const QMatrix g = gen.invertible(3);
        CHECK(stabilizer_check(g3, u) == stabilizer_check_coordinatewise(g3, u));
        CHECK(stabilizer_check(g3, g) == stabilizer_check_coordinatewise(g3, g));
        CHECK(stabilizer_check(g3, g) == proj_equal(plucker<Rational>(g3, g), base_point(g3)));
    }
}

TEST_CASE("stabiliser is exactly the group at small n") {
    Gen gen(51);
    for (int n = 2; n <= 4; ++n) {
        const auto p = make_jet_group(n);
        const auto sz = static_cast<std::size_t>(n);
        for (int k = 0; k < 10; ++k) {
            QMatrix g;
            switch (k % 3) {
                case 0: g = gen.invertible(sz); break;
                case 1: g = element_matrix(p, gen.params(n)); break;
                default: {
                    g = element_matrix(p, gen.params(n));
                    const auto i = static_cast<std::size_t>(gen.integer(1, n - 1));
                    const auto j = static_cast<std::size_t>(gen.integer(0, n - 1));
                    g(i, j) += Rational(1);
                    if (determinant(g).is_zero()) g(i, j) -= Rational(1);
                }
            }
            const bool in_group = !g(0, 0).is_zero() && g == element_matrix(p, g.row(0));
            CHECK(stabilizer_check(p, g) == in_group);
        }
    }
}

TEST_CASE("stabilizer_lie_dim") {
    CHECK(stabilizer_lie_dim(base_point(make_jet_group(2))).projective == 2);
    CHECK(stabilizer_lie_dim(base_point(make_jet_group(3))).projective == 3);
    const auto d4 = stabilizer_lie_dim(base_point(make_jet_group(4)));
    CHECK(d4.projective == 4);
    CHECK(d4.affine == 3);
    CHECK(stabilizer_lie_dim(i22_point(1)).projective == 5);
    CHECK(stabilizer_lie_dim(i22_point(2)).projective == 5);
    CHECK_THROWS_AS(stabilizer_lie_dim(QMultiVector(make_jet_group(2).space())), DomainError);
}

TEST_CASE("limit_along_curve") {
    const auto g2 = make_jet_group(2);
    const auto id = limit_along_curve(g2, lift(QMatrix::identity(2)));
    CHECK(id.point == base_point(g2));
    CHECK(id.order == 0);

    const auto l = limit_along_curve(g2, laurent({{"t", "0"}, {"0", "t^-1"}}));
    CHECK(to_text(l.point) == "(1)*(1:e1, 1:e2)");
    CHECK(l.order == 0);

    CHECK_THROWS_AS(limit_along_curve(g2, laurent({{"0", "1"}, {"0", "t"}})), DomainError);
}

TEST_CASE("the I22 curve") {
    const auto g4 = make_jet_group(4);
    // The shear curve degenerates past the I22 point.
    const auto shown = limit_along_curve(g4, laurent({{"t", "t^-2", "-t^-5", "0"},
                                                      {"0", "1", "-2*t^-3", "0"},
                                                      {"0", "0", "t^-1", "0"},
                                                      {"0", "0", "0", "1"}}));
    CHECK(shown.order == -4);
    CHECK(to_text(shown.point) == "(-1)*(1:e1, 1:e2, 1:e3, 2:e1^2)");
    CHECK_FALSE(proj_equal(shown.point, i22_point(1)));
    CHECK_FALSE(proj_equal(shown.point, i22_point(2)));

    // diag(t^2, t^3, t^4, t^6) A0 lands on the point with the jet-group
    // coefficient 2 on e1e3.
    const auto curve = laurent({{"t^2", "1/3*t^2", "-1/18*t^2", "0"},
                                {"0", "t^3", "-1/3*t^3", "0"},
                                {"0", "0", "t^4", "0"},
                                {"0", "0", "0", "t^6"}});
    const auto fixed = limit_along_curve(g4, curve);
    CHECK(fixed.order == 15);
    CHECK(proj_equal(fixed.point, i22_point(2)));
    CHECK_FALSE(proj_equal(fixed.point, i22_point(1)));

    const auto cert = boundary_certificate(i22_point(2));
    CHECK(cert.in_W_v1);
    CHECK_FALSE(cert.in_W_det);
    CHECK(cert.in_orbit_boundary_subspaces);
}

TEST_CASE("boundary_certificate") {
    const auto b = boundary_certificate(base_point(make_jet_group(3)));
    CHECK_FALSE(b.in_W_v1);
    CHECK_FALSE(b.in_W_det);
    CHECK_FALSE(b.in_orbit_boundary_subspaces);

    const auto l = limit_along_curve(make_jet_group(2), laurent({{"t", "0"}, {"0", "t^-1"}}));
    CHECK(boundary_certificate(l.point).in_W_v1);
}

TEST_CASE("orbit recovery") {
    Gen gen(61);
    for (int n = 2; n <= 4; ++n) {
        const auto p = make_jet_group(n);
        for (int k = 0; k < 5; ++k) {
            const QMatrix a = gen.invertible(static_cast<std::size_t>(n));
            const auto mv = plucker<Rational>(p, a);
            const auto pr = project_boundary(mv);
            if (pr.pi_wedge.is_zero() || pr.pi_det.is_zero()) continue;
            const auto b = recover_orbit_matrix(p, mv);
            REQUIRE(b.has_value());
            for (std::size_t j = 1; j < static_cast<std::size_t>(n); ++j) CHECK((*b)(0, j).is_zero());
            CHECK(proj_equal(plucker<Rational>(p, *b), mv));
        }
    }
    // not an orbit point: pi_wedge and pi_det nonzero but a stray coordinate
    const auto p3 = make_jet_group(3);
    QMultiVector mv = base_point(p3);
    Tuple t;
    t.push_back(0);
    t.push_back(1);
    t.push_back(static_cast<std::uint16_t>(p3.space()->size() - 1));
    mv.add(t, Rational(7));
    CHECK_FALSE(recover_orbit_matrix(p3, mv).has_value());
}

TEST_CASE("boundary property on Borel curves") {
    Gen gen(71);
    const auto p = make_jet_group(3);
    int recovered = 0, boundary = 0;
    for (int k = 0; k < 25; ++k) {
        Matrix<LaurentPoly> c(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j) {
                if (i != j && gen.integer(0, 2) == 0) continue;
                Rational coeff = i == j ? gen.nonzero(3) : gen.rational(3);
                c(i, j) = LaurentPoly::monomial(gen.integer(-2, 2), coeff);
                if (gen.integer(0, 1) == 1)
                    c(i, j) += LaurentPoly::monomial(gen.integer(-2, 2), gen.rational(3));
                if (i == j && c(i, j).is_zero()) c(i, j) = LaurentPoly::monomial(1, Rational(1));
            }
        const auto lim = limit_along_curve(p, c);
        const auto cert = boundary_certificate(lim.point);
        if (cert.in_orbit_boundary_subspaces) {
            ++boundary;
            continue;
        }
        CHECK(recover_orbit_matrix(p, lim.point).has_value());
        ++recovered;
    }
    CHECK(recovered + boundary == 25);
}

TEST_CASE("conjugation commutes with the embedding") {
    const auto h = heisenberg_adjoint();
    QMatrix g = QMatrix::identity(4);
    g(0, 0) = Rational(3);
    g(1, 1) = Rational(1);
    g(1, 2) = Rational(2);
    g(2, 1) = Rational(-1);
    g(2, 2) = Rational(1);
    g(3, 3) = Rational(5);
    const auto hc = conjugate_presentation(h, g);
    const QMatrix gi = inverse(g);
    const auto mix = block_mixing_map(*h.space(), g);

    Gen gen(81);
    for (int k = 0; k < 3; ++k) {
        const QMatrix a = gen.invertible(4);
        const auto lhs = plucker<Rational>(hc, gi * a * g);
        const auto rhs = apply_label_map(gl_action(g(0, 0) * gi, plucker<Rational>(h, a)), mix);
        CHECK(proj_equal(lhs, rhs));
    }
}

TEST_CASE("sampler objects") {
    Gen gen(91);
    const auto p = make_jet_group(3);
    for (int k = 0; k < 20; ++k) {
        CHECK(in_group(p, gen.group_element(p)));
        const QMatrix g = gen.non_member(p);
        CHECK_FALSE(in_group(p, g));
        CHECK_FALSE(determinant(g).is_zero());
    }
    for (int k = 0; k < 9; ++k) {
        const auto c = gen.borel_curve(p);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK_FALSE(c(i, i).is_zero());
            for (std::size_t j = 0; j < i; ++j) CHECK(c(i, j).is_zero());
        }
    }
}
