#include "grit/groups.hpp"

#include "grit/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace grit {

std::string alpha_name(int k) { return "a" + std::to_string(k); }

Polynomial GroupPresentation::entry(int i, int j) const {
    if (i < 1 || j < 1 || i > n || j > n) throw DomainError("entry index out of range");
    if (i > j) return Polynomial();
    if (i == 1) return Polynomial::variable(alpha_name(j));
    auto it = p.find({i, j});
    if (it != p.end()) return it->second;
    if (i == j) return Polynomial::variable(alpha_name(1)).pow(static_cast<unsigned>(weights[static_cast<std::size_t>(i - 1)]));
    return Polynomial();
}

void check_shape(const GroupPresentation& p) {
    if (p.n < 1) throw DomainError("n must be at least 1");
    if (static_cast<int>(p.weights.size()) != p.n)
        throw DomainError("expected " + std::to_string(p.n) + " weights, got " + std::to_string(p.weights.size()));
    if (p.weights[0] != 1) throw DomainError("the first weight must be 1");
    if (p.n >= 2 && p.weights[1] <= 1) throw DomainError("the second weight must exceed the first");
    for (std::size_t i = 2; i < p.weights.size(); ++i)
        if (p.weights[i] < p.weights[i - 1]) throw DomainError("weights must be non-decreasing");
    if (static_cast<std::size_t>(p.n) > kMaxWedge) throw DomainError("n is too large");
    for (const auto& [key, f] : p.p) {
        const auto [i, j] = key;
        if (!(1 < i && i <= j && j <= p.n))
            throw DomainError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") is not an entry with 1 < i <= j <= n");
    }
}

namespace {

int parse_alpha(const std::string& name) {
    if (name.size() < 2 || name[0] != 'a') return -1;
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
    return std::stoi(name.substr(1));
}

std::string term_text(const Polynomial& f, const Exponents& e, const Rational& c) {
    return Polynomial::monomial(f.variables(), e, c).to_string();
}

std::string ij(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

template <class C>
C eval_alpha(const Polynomial& f, const std::vector<C>& values) {
    std::vector<C> aligned;
    aligned.reserve(f.variables().size());
    for (const auto& v : f.variables()) {
        const int k = parse_alpha(v);
        if (k >= 1 && static_cast<std::size_t>(k) <= values.size()) {
            aligned.push_back(values[static_cast<std::size_t>(k - 1)]);
        } else if (f.uses(v)) {
            throw DomainError("no value bound to " + v);
        } else {
            aligned.push_back(C(Rational(0)));
        }
    }
    return evaluate_in<C>(f, aligned);
}

template <class C>
Matrix<C> u_matrix(const GroupPresentation& p, const std::vector<C>& values) {
    if (static_cast<int>(values.size()) != p.n) throw DomainError("expected " + std::to_string(p.n) + " parameters");
    const auto n = static_cast<std::size_t>(p.n);
    Matrix<C> m(n, n);
    for (int i = 1; i <= p.n; ++i)
        for (int j = i; j <= p.n; ++j)
            m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = eval_alpha<C>(p.entry(i, j), values);
    return m;
}

template Rational eval_alpha<Rational>(const Polynomial&, const std::vector<Rational>&);
template Polynomial eval_alpha<Polynomial>(const Polynomial&, const std::vector<Polynomial>&);
template LaurentPoly eval_alpha<LaurentPoly>(const Polynomial&, const std::vector<LaurentPoly>&);
template QMatrix u_matrix<Rational>(const GroupPresentation&, const std::vector<Rational>&);
template Matrix<Polynomial> u_matrix<Polynomial>(const GroupPresentation&, const std::vector<Polynomial>&);
template Matrix<LaurentPoly> u_matrix<LaurentPoly>(const GroupPresentation&, const std::vector<LaurentPoly>&);

Matrix<Polynomial> symbolic_u(const GroupPresentation& p, const std::string& prefix) {
    std::vector<Polynomial> vars;
    for (int k = 1; k <= p.n; ++k) vars.push_back(Polynomial::variable(prefix + std::to_string(k)));
    return u_matrix<Polynomial>(p, vars);
}

namespace {

void compositions(int remaining, int parts, Exponents& counts, std::vector<Exponents>& out) {
    if (parts == 0) {
        if (remaining == 0) out.push_back(counts);
        return;
    }
    for (int first = 1; first <= remaining - (parts - 1); ++first) {
        ++counts[static_cast<std::size_t>(first - 1)];
        compositions(remaining - first, parts - 1, counts, out);
        --counts[static_cast<std::size_t>(first - 1)];
    }
}

}  // namespace

GroupPresentation make_jet_group(int n) {
    if (n < 1) throw DomainError("n must be at least 1");
    GroupPresentation g;
    g.n = n;
    g.weights.resize(static_cast<std::size_t>(n));
    std::iota(g.weights.begin(), g.weights.end(), 1);
    std::vector<std::string> vars;
    for (int k = 1; k <= n; ++k) vars.push_back(alpha_name(k));
    for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::vector<Exponents> comps;
            Exponents counts(static_cast<std::size_t>(n), 0);
            compositions(j, i, counts, comps);
            Polynomial f = Polynomial().aligned(vars);
            // each ordered composition contributes one product a_{l1}...a_{li}
            for (const auto& e : comps) f.add_term(e, Rational(1));
            g.p[{i, j}] = f.compact();
        }
    return g;
}

std::map<int, Rational> GradedLieData::bracket(int a, int b) const {
    if (a == b) return {};
    const bool swap = a > b;
    auto it = brackets.find(swap ? std::make_pair(b, a) : std::make_pair(a, b));
    if (it == brackets.end()) return {};
    if (!swap) return it->second;
    std::map<int, Rational> out;
    for (const auto& [k, c] : it->second) out[k] = -c;
    return out;
}

void check_lie_data(const GradedLieData& l) {
    const int m = static_cast<int>(l.weights.size());
    for (int a = 0; a < m; ++a) {
        if (l.weights[static_cast<std::size_t>(a)] <= 0) throw DomainError("Lie algebra weights must be positive");
        if (a > 0 && l.weights[static_cast<std::size_t>(a)] < l.weights[static_cast<std::size_t>(a - 1)])
            throw DomainError("basis must be ordered by non-decreasing weight");
    }
    for (const auto& [key, coeffs] : l.brackets) {
        const auto [a, b] = key;
        if (a < 0 || b >= m || a >= b) throw DomainError("bracket keys must satisfy 0 <= a < b < dim");
        for (const auto& [c, v] : coeffs) {
            if (c < 0 || c >= m) throw DomainError("bracket target out of range");
            if (!v.is_zero() && l.weights[static_cast<std::size_t>(a)] + l.weights[static_cast<std::size_t>(b)] !=
                                    l.weights[static_cast<std::size_t>(c)])
                throw DomainError("bracket [x" + std::to_string(a + 2) + ", x" + std::to_string(b + 2) +
                                  "] has a component of the wrong weight");
        }
    }
    auto br_vec = [&](int a, const std::map<int, Rational>& v) {
        std::map<int, Rational> out;
        for (const auto& [k, c] : v)
            for (const auto& [t, d] : l.bracket(a, k)) out[t] += c * d;
        return out;
    };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                std::map<int, Rational> sum;
                for (const auto& [k, v] : br_vec(a, l.bracket(b, c))) sum[k] += v;
                for (const auto& [k, v] : br_vec(b, l.bracket(c, a))) sum[k] += v;
                for (const auto& [k, v] : br_vec(c, l.bracket(a, b))) sum[k] += v;
                for (const auto& [k, v] : sum)
                    if (!v.is_zero())
                        throw DomainError("Jacobi identity fails for x" + std::to_string(a + 2) + ", x" +
                                          std::to_string(b + 2) + ", x" + std::to_string(c + 2));
            }
}

GroupPresentation make_adjoint_form(const GradedLieData& l) {
    check_lie_data(l);
    const int m = static_cast<int>(l.weights.size());
    const int n = m + 1;
    const auto un = static_cast<std::size_t>(n);
    auto wt = [&](int a) { return l.weights[static_cast<std::size_t>(a)]; };
    auto s = [](int a) { return Polynomial::variable("s" + std::to_string(a + 2)); };

    // Y = sum s_l ad(x_l) on the basis (z, x_2, ..., x_n).
    Matrix<Polynomial> y(un, un);
    for (int a = 0; a < m; ++a) {
        const auto ua = static_cast<std::size_t>(a + 1);
        y(ua, 0) += s(a) * Rational(-wt(a));
        for (int b = 0; b < m; ++b)
            for (const auto& [c, v] : l.bracket(a, b))
                y(static_cast<std::size_t>(c + 1), static_cast<std::size_t>(b + 1)) += s(a) * v;
    }
    Matrix<Polynomial> e = Matrix<Polynomial>::identity(un);
    Matrix<Polynomial> power = Matrix<Polynomial>::identity(un);
    Rational fact(1);
    for (int k = 1;; ++k) {
        power = power * y;
        if (power.is_zero_matrix()) break;
        if (k >= n) throw DomainError("ad matrices are not nilpotent: the exponential series does not terminate");
        fact *= Rational(k);
        e = e + fact.inverse() * power;
    }
    const Matrix<Polynomial> mt = e.transpose();

    // Solve a_j = mt(0, j) for s_j, lowest weight first.
    GroupPresentation g;
    g.n = n;
    g.weights = {1};
    for (int a = 0; a < m; ++a) g.weights.push_back(1 + wt(a));
    std::map<std::string, Polynomial> solved;
    for (int a = 0; a < m; ++a) {
        const Polynomial c = mt(0, static_cast<std::size_t>(a + 1));
        const Polynomial sa = s(a);
        const std::string sname = "s" + std::to_string(a + 2);
        const auto sidx = std::find(c.variables().begin(), c.variables().end(), sname) - c.variables().begin();
        Exponents lin(c.variables().size(), 0);
        if (static_cast<std::size_t>(sidx) < lin.size()) lin[static_cast<std::size_t>(sidx)] = 1;
        const Rational lead = static_cast<std::size_t>(sidx) < lin.size() ? c.coefficient(lin) : Rational(0);
        if (lead.is_zero())
            throw DomainError("first-row entry " + std::to_string(a + 2) + " (" + c.to_string() +
                              ") does not determine s" + std::to_string(a + 2) + " linearly");
        const Polynomial rest = c - lead * sa;
        if (rest.uses(sname) || rest.degree_in(sname) > 0)
            throw DomainError("first-row entry " + std::to_string(a + 2) + " is not triangular in s");
        for (int b = a; b < m; ++b)
            if (rest.uses("s" + std::to_string(b + 2)))
                throw DomainError("first-row entry " + std::to_string(a + 2) + " (" + c.to_string() +
                                  ") depends on a parameter that is not yet solved");
        const Polynomial sol = (Polynomial::variable(alpha_name(a + 2)) - rest.substitute_partial(solved)) *
                               lead.inverse();
        solved[sname] = sol;
        g.metadata.emplace_back(sname, sol.to_string());
    }
    g.metadata.emplace_back("coordinates", "first-row entries in the ordered basis x2..xn");

    const Polynomial a1 = Polynomial::variable(alpha_name(1));
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const Polynomial f = mt(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)).substitute_partial(solved);
            const int wi = g.weights[static_cast<std::size_t>(i - 1)];
            // restore the a1 powers so the entry is homogeneous of degree w_i
            Polynomial h;
            for (const auto& [ex, c] : f.terms()) {
                const int d = std::accumulate(ex.begin(), ex.end(), 0);
                if (d > wi) throw DomainError("entry " + ij(i, j) + " has degree above " + std::to_string(wi));
                h += Polynomial::monomial(f.variables(), ex, c) * a1.pow(static_cast<unsigned>(wi - d));
            }
            if (i == j) {
                if (!(h == a1.pow(static_cast<unsigned>(wi))))
                    throw DomainError("diagonal entry " + ij(i, j) + " is " + h.to_string());
                continue;
            }
            if (!h.is_zero()) g.p[{i, j}] = h.compact();
        }
    for (int j = 2; j <= n; ++j) {
        const Polynomial f = mt(0, static_cast<std::size_t>(j - 1)).substitute_partial(solved);
        if (!(f == Polynomial::variable(alpha_name(j))))
            throw DomainError("re-parametrised first row entry " + std::to_string(j) + " is " + f.to_string());
    }
    return g;
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ValidationReport validate_presentation(const GroupPresentation& pres) {
    check_shape(pres);
    const int n = pres.n;
    CheckResult hom{"homogeneous_degree", true, {}};
    CheckResult whom{"weighted_degree", true, {}};
    CheckResult dep{"dependence", true, {}};
    CheckResult clo{"closure", true, {}};
    auto fail = [](CheckResult& r, int i, int j, std::string w) {
        r.passed = false;
        r.failures.push_back({i, j, std::move(w)});
    };

    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const Polynomial f = pres.entry(i, j);
            const int wi = pres.weights[static_cast<std::size_t>(i - 1)];
            const int wj = pres.weights[static_cast<std::size_t>(j - 1)];
            bool dep_ok = true;
            for (const auto& v : f.used_variables()) {
                const int k = parse_alpha(v);
                if (k < 1 || k > n || (k >= j && !(i == j && k == 1))) {
                    dep_ok = false;
                    for (const auto& [e, c] : f.terms()) {
                        const auto idx = std::find(f.variables().begin(), f.variables().end(), v) - f.variables().begin();
                        if (e[static_cast<std::size_t>(idx)] > 0) {
                            fail(dep, i, j, "term " + term_text(f, e, c) + " uses " + v);
                            break;
                        }
                    }
                    break;
                }
            }
            if (f.is_zero() || !dep_ok) continue;
            for (const auto& [e, c] : f.terms()) {
                const int d = std::accumulate(e.begin(), e.end(), 0);
                if (d != wi) {
                    fail(hom, i, j, "term " + term_text(f, e, c) + " has degree " + std::to_string(d) +
                                        ", expected " + std::to_string(wi));
                    break;
                }
            }
            for (const auto& [e, c] : f.terms()) {
                int d = 0;
                for (std::size_t v = 0; v < e.size(); ++v)
                    d += e[v] * pres.weights[static_cast<std::size_t>(parse_alpha(f.variables()[v]) - 1)];
                if (d != wj) {
                    fail(whom, i, j, "term " + term_text(f, e, c) + " has weighted degree " + std::to_string(d) +
                                         ", expected " + std::to_string(wj));
                    break;
                }
            }
        }

    if (dep.passed) {
        const Matrix<Polynomial> prod = symbolic_u(pres, "b") * symbolic_u(pres, "a");
        const std::vector<Polynomial> first = prod.row(0);
        for (int i = 2; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                const Polynomial want = eval_alpha<Polynomial>(pres.entry(i, j), first);
                const Polynomial diff = prod(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) - want;
                if (!diff.is_zero()) {
                    const auto& [e, c] = *diff.terms().begin();
                    fail(clo, i, j, "product minus composed entry has leading term " + term_text(diff, e, c));
                }
            }
    } else {
        clo.passed = false;
        clo.failures.push_back({0, 0, "skipped: entries use variables outside a1..a_{j-1}"});
    }
    return ValidationReport{{hom, whom, dep, clo}};
}

QMatrix element_matrix(const GroupPresentation& p, const std::vector<Rational>& values) {
    if (values.empty() || values[0].is_zero()) throw DomainError("the first parameter must be nonzero");
    return u_matrix<Rational>(p, values);
}

std::vector<long> tilde_torus_exponents(const std::vector<int>& w) {
    const long n = static_cast<long>(w.size());
    const long sum = std::accumulate(w.begin(), w.end(), 0L);
    std::vector<long> out;
    for (int x : w) out.push_back(n * x - sum);
    return out;
}

QMatrix tilde_torus_matrix(const std::vector<int>& w, const Rational& t) {
    if (t.is_zero()) throw DomainError("torus parameter must be nonzero");
    const auto ex = tilde_torus_exponents(w);
    QMatrix m(w.size(), w.size());
    for (std::size_t i = 0; i < w.size(); ++i) m(i, i) = t.pow(ex[i]);
    return m;
}

Rational character_weight(const std::vector<int>& w, long r_chi, const Rational& t) {
    (void)tilde_torus_matrix(w, t);
    return t.pow(r_chi);
}

namespace {

void check_block_compatible(const GroupPresentation& p, const QMatrix& g) {
    const auto n = static_cast<std::size_t>(p.n);
    if (g.rows() != n || g.cols() != n) throw DomainError("conjugating matrix has the wrong size");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || g(i, j).is_zero()) continue;
            if (i == 0 || j == 0 || p.weights[i] != p.weights[j])
                throw DomainError("conjugating matrix is not block compatible at entry " +
                                  ij(static_cast<int>(i + 1), static_cast<int>(j + 1)));
        }
    if (determinant(g).is_zero()) throw DomainError("conjugating matrix is singular");
}

}  // namespace

GroupPresentation conjugate_presentation(const GroupPresentation& p, const QMatrix& g) {
    check_shape(p);
    check_block_compatible(p, g);
    const auto n = static_cast<std::size_t>(p.n);
    const QMatrix gi = inverse(g);
    const Rational g11 = g(0, 0);
    // new first row b relates to the old one by a = g11 * b * g^-1
    std::vector<Polynomial> old(n);
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial v;
        for (std::size_t m = 0; m < n; ++m)
            if (!gi(m, k).is_zero()) v += Polynomial::variable(alpha_name(static_cast<int>(m + 1))) * (g11 * gi(m, k));
        old[k] = v;
    }
    const Matrix<Polynomial> conj =
        gi.map<Polynomial>([](const Rational& x) { return Polynomial(x); }) * u_matrix<Polynomial>(p, old) *
        g.map<Polynomial>([](const Rational& x) { return Polynomial(x); });

    GroupPresentation out;
    out.n = p.n;
    out.weights = p.weights;
    for (int j = 1; j <= p.n; ++j)
        if (!(conj(0, static_cast<std::size_t>(j - 1)) == Polynomial::variable(alpha_name(j))))
            throw DomainError("conjugated first row is not the identity in the new parameters");
    for (int i = 2; i <= p.n; ++i)
        for (int j = i; j <= p.n; ++j) {
            const Polynomial f = conj(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)).compact();
            if (i == j) {
                if (!(f == out.entry(i, i))) out.p[{i, i}] = f;
                continue;
            }
            if (!f.is_zero()) out.p[{i, j}] = f;
        }
    out.metadata = p.metadata;
    out.metadata.emplace_back("conjugated", "g^-1 U g re-expressed in the first row of the conjugate");
    return out;
}

std::vector<SymVector<Rational>> block_mixing_map(const SymSpace& space, const QMatrix& g) {
    const QMatrix gi = inverse(g);
    std::vector<SymVector<Rational>> images(space.size());
    for (std::size_t l = 0; l < space.size(); ++l) {
        const SymLabel& lab = space.label(l);
        for (int i = 0; i < space.blocks(); ++i) {
            const Rational c = gi(static_cast<std::size_t>(i), static_cast<std::size_t>(lab.block));
            if (c.is_zero()) continue;
            images[l].add(space.index(i, lab.mono), c);
        }
    }
    return images;
}

}  // namespace grit

namespace grit {

GradedLieData heisenberg_lie_data() {
    GradedLieData l;
    l.weights = {1, 1, 2};
    l.brackets[{0, 1}] = {{2, Rational(1)}};
    return l;
}

}  // namespace grit
