#include "support.hpp"

#include "grit/error.hpp"
#include "grit/symwedge.hpp"

#include <doctest.h>

using namespace grit;

namespace {

using V = SymVector<Rational>;

V vec(const SymSpace& s, std::initializer_list<std::tuple<int, Exponents, int>> entries) {
    V v;
    for (const auto& [b, m, c] : entries) v.add(s.index(b, m), Rational(c));
    return v;
}

QMatrix random_matrix(testsupport::Gen& g, std::size_t n, int span = 3) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(g.integer(-span, span));
    return m;
}

V random_vector(testsupport::Gen& g, const SymSpace& s, int nonzeros) {
    V v;
    for (int k = 0; k < nonzeros; ++k)
        v.add(static_cast<std::size_t>(g.integer(0, static_cast<int>(s.size()) - 1)), g.rational());
    return v;
}

QMultiVector random_mv(testsupport::Gen& g, const std::shared_ptr<const SymSpace>& s) {
    std::vector<V> cols;
    for (int b = 0; b < s->blocks(); ++b) cols.push_back(random_vector(g, *s, 3));
    return wedge(s, cols, Exec::serial);
}

// The base point for the jet group on C^2: e1 ^ (e2 + e1^2).
QMultiVector p2(const std::shared_ptr<const SymSpace>& s) {
    return wedge<Rational>(s, {vec(*s, {{0, {1, 0}, 1}}), vec(*s, {{0, {0, 1}, 1}, {1, {2, 0}, 1}})});
}

Tuple tup(std::initializer_list<std::size_t> xs) {
    Tuple t;
    for (auto x : xs) t.push_back(static_cast<std::uint16_t>(x));
    return t;
}

}  // namespace

TEST_CASE("basis_order") {
    const auto labels = basis_order(2, {1, 2});
    REQUIRE(labels.size() == 5);
    const std::vector<Exponents> want{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(labels[i].mono == want[i]);
        CHECK(labels[i].block == (i < 2 ? 0 : 1));
    }
    CHECK(basis_order(1, {1}).size() == 1);
    CHECK(basis_order(4, {1, 2, 3, 4}).size() == 69);
    // repeated weights stay separate blocks
    const SymSpace rep(2, {1, 2, 2});
    CHECK(rep.size() == 2 + 3 + 3);
    CHECK(rep.index(1, {2, 0}) != rep.index(2, {2, 0}));
    CHECK_THROWS_AS(basis_order(2, {2, 1}), DomainError);
}

TEST_CASE("eval_sym") {
    const SymSpace s(4, {1, 2, 3, 4});
    const std::vector<std::vector<Rational>> e{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    const V sq = eval_sym(s, 1, Polynomial::parse("a1^2"), e);
    CHECK(sq.entries.size() == 1);
    CHECK(sq.entries.at(s.index(1, {2, 0, 0, 0})) == 1);
    const V mixed = eval_sym(s, 1, Polynomial::parse("2*a1*a2"), e);
    CHECK(mixed.entries.at(s.index(1, {1, 1, 0, 0})) == 2);
    const V p24 = eval_sym(s, 1, Polynomial::parse("2*a1*a3 + a2^2"), e);
    CHECK(p24.entries.size() == 2);
    CHECK(p24.entries.at(s.index(1, {1, 0, 1, 0})) == 2);
    CHECK(p24.entries.at(s.index(1, {0, 2, 0, 0})) == 1);
    CHECK_THROWS_AS(eval_sym(s, 1, Polynomial::parse("a1^2 + a2"), e), DomainError);
    CHECK(eval_sym(s, 2, Polynomial(), e).is_zero());
    // products of sums expand in the symmetric algebra: (e1 + e2)^2
    const V sum = eval_sym(s, 1, Polynomial::parse("a1^2"), std::vector<std::vector<Rational>>{{1, 1, 0, 0}});
    CHECK(sum.entries.at(s.index(1, {1, 1, 0, 0})) == 2);
}

TEST_CASE("wedge examples") {
    const auto s = SymSpace::make(2, {1, 2});
    const QMultiVector p = p2(s);
    CHECK(p.size() == 2);
    CHECK(p.coefficient(tup({0, 1})) == 1);
    CHECK(p.coefficient(tup({0, 2})) == 1);
    const V e1 = vec(*s, {{0, {1, 0}, 1}});
    CHECK(wedge<Rational>(s, {e1, e1}).is_zero());
    const V a = vec(*s, {{0, {1, 0}, 2}, {1, {1, 1}, -1}});
    const V b = vec(*s, {{0, {0, 1}, 3}, {1, {2, 0}, 5}});
    CHECK(wedge<Rational>(s, {a, b}) == Rational(-1) * wedge<Rational>(s, {b, a}));
    CHECK_THROWS_AS(wedge<Rational>(s, {a}), DomainError);
}

TEST_CASE("wedge is multilinear and alternating") {
    testsupport::Gen g(21);
    const auto s = SymSpace::make(3, {1, 2, 2});
    for (int k = 0; k < 30; ++k) {
        const V a = random_vector(g, *s, 4), b = random_vector(g, *s, 4), c = random_vector(g, *s, 4),
                d = random_vector(g, *s, 4);
        const Rational lam = g.rational();
        V comb = a;
        for (const auto& [l, x] : d.entries) comb.add(l, lam * x);
        CHECK(wedge<Rational>(s, {comb, b, c}) == wedge<Rational>(s, {a, b, c}) + lam * wedge<Rational>(s, {d, b, c}));
        CHECK(wedge<Rational>(s, {a, b, c}) == Rational(-1) * wedge<Rational>(s, {c, b, a}));
        CHECK(wedge<Rational>(s, {a, b, a}).is_zero());
    }
}

TEST_CASE("serial and parallel kernels agree") {
    testsupport::Gen g(22);
    const auto s = SymSpace::make(4, {1, 2, 3, 4});
    for (int k = 0; k < 5; ++k) {
        std::vector<V> cols;
        for (int b = 0; b < 4; ++b) cols.push_back(random_vector(g, *s, 8));
        const QMultiVector w = wedge(s, cols, Exec::serial);
        CHECK(w == wedge(s, cols, Exec::parallel));
        const QMatrix m = random_matrix(g, 4, 2);
        CHECK(lie_action(m, w, Exec::serial) == lie_action(m, w, Exec::parallel));
    }
    const auto s3 = SymSpace::make(3, {1, 2, 3});
    for (int k = 0; k < 5; ++k) {
        const QMultiVector mv = random_mv(g, s3);
        const QMatrix m = random_matrix(g, 3, 2);
        CHECK(gl_action(m, mv, Exec::serial) == gl_action(m, mv, Exec::parallel));
        // block-at-a-time action against the per-term label map
        std::vector<V> images;
        for (std::size_t i = 0; i < s3->size(); ++i) images.push_back(label_image(*s3, i, m));
        CHECK(gl_action(m, mv) == apply_label_map(mv, images, Exec::serial));
    }
    // dense n = 4, which the per-term route is too slow for
    for (int k = 0; k < 2; ++k) {
        std::vector<V> cols;
        for (int b = 0; b < 4; ++b) cols.push_back(random_vector(g, *s, 5));
        const QMultiVector w = wedge(s, cols);
        const QMatrix m = random_matrix(g, 4, 2);
        CHECK(gl_action(m, w, Exec::serial) == gl_action(m, w, Exec::parallel));
    }
}

TEST_CASE("gl_action is a monoid action") {
    testsupport::Gen g(23);
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> w{1};
        for (int b = 1; b < n; ++b) w.push_back(b + 1);
        const auto s = SymSpace::make(n, w);
        for (int k = 0; k < 10; ++k) {
            const QMultiVector mv = random_mv(g, s);
            CHECK(gl_action(QMatrix::identity(static_cast<std::size_t>(n)), mv) == mv);
            const QMatrix a = random_matrix(g, static_cast<std::size_t>(n), 2);
            const QMatrix b = random_matrix(g, static_cast<std::size_t>(n), 2);
            CHECK(gl_action(a, gl_action(b, mv)) == gl_action(a * b, mv));
        }
    }
}

TEST_CASE("diagonal action on the n=2 base point") {
    const auto s = SymSpace::make(2, {1, 2});
    const Rational t(3);
    QMatrix g(2, 2);
    g(0, 0) = t;
    g(1, 1) = t.inverse();
    const QMultiVector out = gl_action(g, p2(s));
    // t e1 ^ (t^-1 e2 + t^2 e1^2)
    CHECK(out.coefficient(tup({0, 1})) == 1);
    CHECK(out.coefficient(tup({0, 2})) == t.pow(3));
    CHECK(out.size() == 2);
}

TEST_CASE("lie_action") {
    testsupport::Gen g(24);
    const auto s = SymSpace::make(2, {1, 2});
    const QMultiVector p = p2(s);
    CHECK(lie_action(QMatrix(2, 2), p).is_zero());
    // the identity acts by the total degree of each tuple
    const QMultiVector euler = lie_action(QMatrix::identity(2), p);
    CHECK(euler.coefficient(tup({0, 1})) == 2);
    CHECK(euler.coefficient(tup({0, 2})) == 3);

    const auto s3 = SymSpace::make(3, {1, 2, 3});
    for (int k = 0; k < 20; ++k) {
        const QMultiVector mv = random_mv(g, s3);
        const QMatrix x = random_matrix(g, 3), y = random_matrix(g, 3);
        CHECK(lie_action(x + y, mv) == lie_action(x, mv) + lie_action(y, mv));

        // first-order term of gl_action(I + tX) over Q[t]
        Matrix<LaurentPoly> gt(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                gt(i, j) = LaurentPoly::monomial(1, x(i, j)) + LaurentPoly(i == j ? 1 : 0);
        const auto lifted = mv.map<LaurentPoly>([](const Rational& c) { return LaurentPoly(c); });
        const auto moved = gl_action(gt, lifted);
        const auto first = moved.map<Rational>([](const LaurentPoly& c) { return c.coefficient(1); });
        const auto zeroth = moved.map<Rational>([](const LaurentPoly& c) { return c.coefficient(0); });
        CHECK(first == lie_action(x, mv));
        CHECK(zeroth == mv);
    }
}

TEST_CASE("project_boundary and torus equivariance") {
    const auto s = SymSpace::make(2, {1, 2});
    const auto pb = project_boundary(p2(s));
    CHECK(pb.pi_wedge == 1);
    CHECK(pb.pi_det == 1);
    const QMultiVector e12 = wedge<Rational>(s, {vec(*s, {{0, {1, 0}, 1}}), vec(*s, {{0, {0, 1}, 1}})});
    CHECK(project_boundary(e12).pi_wedge == 0);
    CHECK(project_boundary(e12).pi_det == 1);

    testsupport::Gen g(25);
    const auto s3 = SymSpace::make(3, {1, 2, 3});
    for (int k = 0; k < 20; ++k) {
        const QMultiVector mv = random_mv(g, s3);
        QMatrix d(3, 3);
        for (std::size_t i = 0; i < 3; ++i) d(i, i) = g.nonzero();
        const auto before = project_boundary(mv), after = project_boundary(gl_action(d, mv));
        CHECK(after.pi_det == d(0, 0) * d(1, 1) * d(2, 2) * before.pi_det);
        CHECK(after.pi_wedge == d(0, 0).pow(1 + 2 + 3) * before.pi_wedge);
    }
}

TEST_CASE("proj_equal") {
    testsupport::Gen g(26);
    const auto s = SymSpace::make(3, {1, 2, 3});
    const QMultiVector mv = random_mv(g, s);
    REQUIRE_FALSE(mv.is_zero());
    CHECK(proj_equal(mv, Rational(3) * mv));
    CHECK(proj_equal(mv, Rational(-1) * mv));
    const auto s2 = SymSpace::make(2, {1, 2});
    const QMultiVector e12 = wedge<Rational>(s2, {vec(*s2, {{0, {1, 0}, 1}}), vec(*s2, {{0, {0, 1}, 1}})});
    CHECK_FALSE(proj_equal(p2(s2), e12));
    CHECK_THROWS_AS(proj_equal(QMultiVector(s2), e12), DomainError);
}
