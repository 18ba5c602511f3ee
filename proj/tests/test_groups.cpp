#include "support.hpp"

#include "grit/error.hpp"
#include "grit/groups.hpp"

#include <doctest.h>

using namespace grit;
using P = Polynomial;

namespace {

// [z^j] (a1 z + a2 z^2 + ... + an z^n)^i, by truncated series multiplication.
P series_coefficient(int n, int i, int j) {
    std::vector<P> base(static_cast<std::size_t>(n + 1));
    for (int k = 1; k <= n; ++k) base[static_cast<std::size_t>(k)] = P::variable("a" + std::to_string(k));
    std::vector<P> acc(static_cast<std::size_t>(n + 1));
    acc[0] = P(1);
    for (int r = 0; r < i; ++r) {
        std::vector<P> next(static_cast<std::size_t>(n + 1));
        for (int x = 0; x <= n; ++x)
            for (int y = 1; x + y <= n; ++y)
                next[static_cast<std::size_t>(x + y)] += acc[static_cast<std::size_t>(x)] * base[static_cast<std::size_t>(y)];
        acc = next;
    }
    return acc[static_cast<std::size_t>(j)];
}

const CheckResult& check(const ValidationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c;
    throw std::runtime_error("no check " + name);
}

GradedLieData heisenberg() {
    GradedLieData l;
    l.weights = {1, 1, 2};
    l.brackets[{0, 1}] = {{2, Rational(1)}};
    return l;
}

}  // namespace

TEST_CASE("make_jet_group") {
    CHECK(make_jet_group(2).entry(2, 2) == P::parse("a1^2"));
    CHECK(make_jet_group(3).entry(2, 3) == P::parse("2*a1*a2"));
    CHECK(make_jet_group(4).entry(2, 4) == P::parse("2*a1*a3 + a2^2"));
    for (int n = 1; n <= 6; ++n) {
        const auto g = make_jet_group(n);
        for (int i = 2; i <= n; ++i)
            for (int j = i; j <= n; ++j) CHECK(g.entry(i, j) == series_coefficient(n, i, j));
    }
}

TEST_CASE("validate_presentation on jet groups") {
    for (int n = 1; n <= 5; ++n) {
        const auto r = validate_presentation(make_jet_group(n));
        CHECK(r.passed());
        CHECK(r.checks.size() == 4);
    }
}

TEST_CASE("validate_presentation catches corruption") {
    // in n=3 rescaling p23 is conjugation by diag(1,1,c), so it stays a group
    auto g3 = make_jet_group(3);
    g3.p[{2, 3}] = P::parse("a1*a2");
    CHECK(validate_presentation(g3).passed());
    QMatrix half = QMatrix::identity(3);
    half(2, 2) = Rational(1, 2);
    CHECK(conjugate_presentation(make_jet_group(3), half).entry(2, 3) == P::parse("a1*a2"));

    auto g = make_jet_group(4);
    g.p[{2, 3}] = P::parse("a1*a2");
    auto r = validate_presentation(g);
    CHECK_FALSE(r.passed());
    CHECK(check(r, "homogeneous_degree").passed);
    CHECK(check(r, "weighted_degree").passed);
    const auto& clo = check(r, "closure");
    REQUIRE_FALSE(clo.passed);
    CHECK(clo.failures[0].i == 2);
    CHECK(clo.failures[0].j == 4);
    CHECK_FALSE(clo.failures[0].witness.empty());

    GroupPresentation bad;
    bad.n = 2;
    bad.weights = {1, 2};
    bad.p[{2, 2}] = P::parse("a1^3");
    r = validate_presentation(bad);
    CHECK_FALSE(check(r, "weighted_degree").passed);
    CHECK(check(r, "weighted_degree").failures[0].i == 2);

    auto dep = make_jet_group(3);
    dep.p[{2, 3}] = P::parse("2*a1*a3");
    r = validate_presentation(dep);
    CHECK_FALSE(check(r, "dependence").passed);

    auto shape = make_jet_group(3);
    shape.p[{3, 2}] = P(1);
    CHECK_THROWS_AS(validate_presentation(shape), DomainError);
}

TEST_CASE("adjoint forms") {
    GradedLieData line;
    line.weights = {1};
    const auto g2 = make_adjoint_form(line);
    CHECK(g2.weights == std::vector<int>{1, 2});
    CHECK(g2.entry(2, 2) == P::parse("a1^2"));
    CHECK(validate_presentation(g2).passed());

    const auto h = make_adjoint_form(heisenberg());
    CHECK(h.weights == std::vector<int>{1, 2, 2, 3});
    CHECK(validate_presentation(h).passed());
    CHECK(h.entry(2, 3).is_zero());
    // bracket structure shows up in the last column, one a1 restored
    CHECK(h.entry(2, 4) == P::parse("a1*a3"));
    CHECK(h.entry(3, 4) == P::parse("-a1*a2"));
    CHECK_FALSE(h.metadata.empty());

    GradedLieData flat;
    flat.weights = {1, 1};
    const auto f = make_adjoint_form(flat);
    CHECK(validate_presentation(f).passed());
    for (const auto& [key, poly] : f.p) CHECK(poly.size() <= 1);

    GradedLieData wrong = heisenberg();
    wrong.brackets[{0, 1}] = {{1, Rational(1)}};
    CHECK_THROWS_AS(make_adjoint_form(wrong), DomainError);

    // filiform-type algebra: [x2,x3]=x4, [x2,x4]=x5 with weights 1,1,2,3
    GradedLieData fil;
    fil.weights = {1, 1, 2, 3};
    fil.brackets[{0, 1}] = {{2, Rational(1)}};
    fil.brackets[{0, 2}] = {{3, Rational(1)}};
    const auto ff = make_adjoint_form(fil);
    CHECK(validate_presentation(ff).passed());
}

TEST_CASE("element_matrix") {
    const auto g2 = make_jet_group(2);
    QMatrix want(2, 2);
    want(0, 0) = 1, want(0, 1) = 5, want(1, 1) = 1;
    CHECK(element_matrix(g2, {Rational(1), Rational(5)}) == want);
    CHECK(element_matrix(make_jet_group(3), {Rational(2), Rational(1), Rational(0)})(1, 2) == 4);
    for (int n = 1; n <= 4; ++n) {
        std::vector<Rational> e(static_cast<std::size_t>(n));
        e[0] = 1;
        CHECK(element_matrix(make_jet_group(n), e) == QMatrix::identity(static_cast<std::size_t>(n)));
    }
    CHECK_THROWS_AS(element_matrix(g2, {Rational(0), Rational(1)}), DomainError);
}

TEST_CASE("group properties on samples") {
    testsupport::Gen gen(31);
    for (const auto& pres : {make_jet_group(3), make_jet_group(4), make_adjoint_form(heisenberg())}) {
        int sum = 0;
        for (int w : pres.weights) sum += w;
        for (int k = 0; k < 20; ++k) {
            std::vector<Rational> a, b;
            for (int i = 0; i < pres.n; ++i) a.push_back(i == 0 ? gen.nonzero() : gen.rational());
            for (int i = 0; i < pres.n; ++i) b.push_back(i == 0 ? gen.nonzero() : gen.rational());
            const QMatrix ma = element_matrix(pres, a), mb = element_matrix(pres, b);
            CHECK(determinant(ma) == a[0].pow(sum));
            const QMatrix prod = ma * mb;
            CHECK(element_matrix(pres, prod.row(0)) == prod);
            a[0] = 1;
            const QMatrix u = element_matrix(pres, a);
            for (std::size_t i = 0; i < u.rows(); ++i) CHECK(u(i, i) == 1);
        }
    }
}

TEST_CASE("characters and the tilde torus") {
    CHECK(tilde_torus_exponents({1, 2}) == std::vector<long>{-1, 1});
    CHECK(tilde_torus_exponents({1, 2, 3, 4}) == std::vector<long>{-6, -2, 2, 6});
    testsupport::Gen gen(32);
    for (int k = 0; k < 20; ++k) {
        std::vector<int> w{1};
        for (int i = 1; i < 5; ++i) w.push_back(w.back() + gen.integer(i == 1 ? 1 : 0, 2));
        CHECK(determinant(tilde_torus_matrix(w, gen.nonzero())) == 1);
    }
    CHECK(character_weight({1, 2}, 0, Rational(7)) == 1);
    CHECK(character_weight({1, 2}, 3, Rational(2)) == 8);
    CHECK_THROWS_AS(tilde_torus_matrix({1, 2}, Rational(0)), DomainError);
}

TEST_CASE("conjugate_presentation") {
    const auto g4 = make_jet_group(4);
    const auto same = conjugate_presentation(g4, QMatrix::identity(4));
    for (int i = 2; i <= 4; ++i)
        for (int j = i; j <= 4; ++j) CHECK(same.entry(i, j) == g4.entry(i, j));

    QMatrix c(2, 2);
    c(0, 0) = 1;
    c(1, 1) = 3;
    const auto g2 = conjugate_presentation(make_jet_group(2), c);
    CHECK(g2.entry(2, 2) == P::parse("a1^2"));
    CHECK(validate_presentation(g2).passed());

    // Heisenberg form has a two-dimensional weight space to mix
    const auto h = make_adjoint_form(heisenberg());
    QMatrix mix = QMatrix::identity(4);
    mix(0, 0) = 2;
    mix(1, 2) = 1;
    mix(2, 1) = -1;
    mix(3, 3) = 5;
    CHECK(validate_presentation(conjugate_presentation(h, mix)).passed());

    QMatrix sing(2, 2);
    sing(0, 0) = 1;
    CHECK_THROWS_AS(conjugate_presentation(make_jet_group(2), sing), DomainError);
    QMatrix off = QMatrix::identity(3);
    off(1, 2) = 1;
    CHECK_THROWS_AS(conjugate_presentation(make_jet_group(3), off), DomainError);
}
