#include "support.hpp"

#include "grit/error.hpp"
#include "grit/invgen.hpp"

#include <doctest.h>

#include <algorithm>

using namespace grit;
using P = Polynomial;

namespace {

// Coordinates of u(X) column s computed by plain polynomial substitution in
// formal variables e1..en, then collected by monomial in e.
std::map<Exponents, P> column_by_substitution(const GroupPresentation& g, int s, int block) {
    const int n = g.n;
    std::map<std::string, P> bind;
    for (int k = 1; k <= n; ++k) {
        P v;
        for (int r = 1; r <= n; ++r) v += P::variable(x_name(r, k)) * P::variable("e" + std::to_string(r));
        bind.emplace("a" + std::to_string(k), v);
    }
    const P f = g.entry(block, s).substitute_partial(bind);
    std::vector<std::string> evars;
    for (int r = 1; r <= n; ++r) evars.push_back("e" + std::to_string(r));
    std::map<Exponents, P> out;
    for (const auto& [e, c] : f.terms()) {
        Exponents em;
        P rest(c);
        for (std::size_t k = 0; k < e.size(); ++k) {
            const auto& v = f.variables()[k];
            if (v[0] == 'e') continue;
            rest = rest * P::variable(v).pow(static_cast<unsigned>(e[k]));
        }
        for (const auto& ev : evars) {
            const auto it = std::find(f.variables().begin(), f.variables().end(), ev);
            em.push_back(it == f.variables().end() ? 0 : e[static_cast<std::size_t>(it - f.variables().begin())]);
        }
        out[em] += rest;
    }
    return out;
}

// Normal form modulo x11*x22 - x12*x21 - 1 (a one-element Groebner basis
// for any order with x11*x22 leading).
P reduce_mod_det(P f) {
    const P repl = P::parse("x12*x21 + 1");
    for (;;) {
        bool changed = false;
        P next;
        for (const auto& [e, c] : f.terms()) {
            P term = P::monomial(f.variables(), e, c);
            const int d11 = term.degree_in("x11"), d22 = term.degree_in("x22");
            if (d11 > 0 && d22 > 0) {
                std::map<std::string, P> b{{"x11", P(1)}, {"x22", P(1)}};
                term = term.substitute_partial(b) * P::parse("x11").pow(static_cast<unsigned>(d11 - 1)) *
                       P::parse("x22").pow(static_cast<unsigned>(d22 - 1)) * repl;
                changed = true;
            }
            next += term;
        }
        f = next;
        if (!changed) return f;
    }
}

}  // namespace

TEST_CASE("generator_matrix of G2") {
    const auto m = generator_matrix(make_jet_group(2));
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 5);
    const char* shown[2][5] = {{"x11", "x21", "0", "0", "0"}, {"x12", "x22", "x11^2", "2*x11*x21", "x21^2"}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 5; ++j) CHECK(m(i, j) == P::parse(shown[i][j]));
    const auto one = generator_matrix(make_jet_group(1));
    CHECK(one.rows() == 1);
    CHECK(one.cols() == 1);
    CHECK(one(0, 0) == P::parse("x11"));
}

TEST_CASE("generator_matrix of G3") {
    const auto g = make_jet_group(3);
    const auto m = generator_matrix(g);
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 19);
    const auto space = g.space();
    CHECK(m(2, space->index(2, {3, 0, 0})) == P::parse("x11^3"));
    // entries of rows 1 and 2
    const char* row1[3] = {"x11", "x21", "x31"};
    for (std::size_t j = 0; j < 3; ++j) CHECK(m(0, j) == P::parse(row1[j]));
    for (std::size_t j = 3; j < 19; ++j) CHECK(m(0, j).is_zero());
    CHECK(m(1, 0) == P::parse("x12"));
    CHECK(m(1, 3) == P::parse("x11^2"));
    CHECK(m(1, 4) == P::parse("2*x11*x21"));
    CHECK(m(2, 0) == P::parse("x13"));
    // multinomial factors kept: p23 = 2 a1 a2 gives 2*x11*x12 on e1^2
    CHECK(m(2, 3) == P::parse("2*x11*x12"));
    CHECK(m(2, 4) == P::parse("2*x11*x22 + 2*x12*x21"));
    CHECK(m(2, space->index(2, {2, 1, 0})) == P::parse("3*x11^2*x21"));

    // every block coordinate against direct substitution
    for (int s = 1; s <= 3; ++s)
        for (int b = 1; b <= s; ++b)
            for (const auto& [e, c] : column_by_substitution(g, s, b))
                CHECK(m(static_cast<std::size_t>(s - 1), space->index(b - 1, e)) == c);
}

TEST_CASE("initial_segment_minors") {
    const auto m2 = generator_matrix(make_jet_group(2));
    const auto s1 = initial_segment_minors(m2, 1);
    REQUIRE(s1.size() == 2);
    CHECK(s1[0].value == P::parse("x11"));
    CHECK(s1[1].value == P::parse("x21"));

    const auto s2 = initial_segment_minors(m2, 2);
    bool found = false;
    for (const auto& mi : s2)
        if (mi.rows == std::vector<int>{1, 2} && mi.cols == std::vector<int>{1, 2}) {
            CHECK(mi.value == P::parse("x11*x22 - x21*x12"));
            found = true;
        }
    CHECK(found);
    for (const auto& mi : s2) CHECK_FALSE(mi.value.is_zero());

    const auto all = initial_segment_minors(m2, 2, true);
    CHECK(all.size() > s2.size());

    const auto one = initial_segment_minors(generator_matrix(make_jet_group(1)), 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].value == P::parse("x11"));
    CHECK_THROWS_AS(initial_segment_minors(m2, 3), DomainError);

    const auto m3 = generator_matrix(make_jet_group(3));
    const auto a = initial_segment_minors(m3, 3, false, Exec::serial);
    const auto b = initial_segment_minors(m3, 3, false, Exec::parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].cols == b[k].cols);
        CHECK(a[k].value == b[k].value);
    }
}

TEST_CASE("check_U_invariance") {
    const auto g2 = make_jet_group(2);
    CHECK(check_U_invariance(P::parse("x11"), g2));
    CHECK_FALSE(check_U_invariance(P::parse("x12"), g2));
    CHECK(check_U_invariance(P::parse("x11*x22 - x12*x21"), g2));
    CHECK(check_U_invariance(det_laplace(generic_matrix(3)), make_jet_group(3)));

    for (int n = 2; n <= 3; ++n) {
        const auto g = make_jet_group(n);
        const auto minors = initial_segment_minors(generator_matrix(g), n);
        for (const auto& mi : minors) CHECK(check_U_invariance(mi.value, g));
    }
    // minors on a non-initial row set are not invariant in general
    const auto m2 = generator_matrix(g2);
    const auto all = initial_segment_minors(m2, 1, true);
    int failing = 0;
    for (const auto& mi : all)
        if (mi.rows == std::vector<int>{2} && !check_U_invariance(mi.value, g2)) ++failing;
    CHECK(failing > 0);
}

TEST_CASE("check_tilde_weight") {
    CHECK(check_tilde_weight(P::parse("x11"), {1, 2}).weight == -1);
    CHECK(check_tilde_weight(P::parse("x12"), {1, 2}).weight == 1);
    CHECK(check_tilde_weight(P::parse("x11*x22 - x12*x21"), {1, 2}).weight == 0);
    CHECK(check_tilde_weight(det_laplace(generic_matrix(4)), {1, 2, 3, 4}).weight == 0);
    const auto mixed = check_tilde_weight(P::parse("x11 + x12"), {1, 2});
    CHECK_FALSE(mixed.weight_vector);
    CHECK(mixed.weights == std::vector<long>{-1, 1});
    CHECK_THROWS_AS(check_tilde_weight(P(0), {1, 2}), DomainError);
    CHECK_THROWS_AS(check_tilde_weight(P::parse("y1"), {1, 2}), DomainError);

    for (int n = 2; n <= 3; ++n) {
        const auto g = make_jet_group(n);
        for (const auto& mi : initial_segment_minors(generator_matrix(g), n)) {
            const auto tw = check_tilde_weight(mi.value, g.weights);
            CHECK(tw.weight_vector);
            CHECK(*tw.weight <= 0);
        }
    }
}

TEST_CASE("SL(2): minors reduce to x11, x21") {
    for (const auto& mi : initial_segment_minors(generator_matrix(make_jet_group(2)), 2)) {
        const P r = reduce_mod_det(mi.value);
        for (const auto& v : r.used_variables()) CHECK((v == "x11" || v == "x21"));
    }
}
