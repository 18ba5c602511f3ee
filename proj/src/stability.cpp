#include "grit/stability.hpp"

#include "grit/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace grit {

void check_weights(const std::vector<int>& w) {
    if (w.empty()) throw DomainError("weight vector is empty");
    if (w[0] != 1) throw DomainError("the first weight must be 1");
    if (w.size() >= 2 && w[1] <= 1) throw DomainError("the second weight must exceed 1");
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] < w[i - 1]) throw DomainError("weights must be non-decreasing");
}

namespace {

long weight_sum(const std::vector<int>& w) { return std::accumulate(w.begin(), w.end(), 0L); }

void exponents(int n, int pos, int left, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (pos == n - 1) {
        cur[static_cast<std::size_t>(pos)] = left;
        out.push_back(cur);
        return;
    }
    for (int v = left; v >= 0; --v) {
        cur[static_cast<std::size_t>(pos)] = v;
        exponents(n, pos + 1, left - v, cur, out);
    }
}

bool tails_ok(const std::vector<int>& k) {
    const int n = static_cast<int>(k.size());
    int tail = 0;
    for (int j = n; j >= 1; --j) {
        tail += k[static_cast<std::size_t>(j - 1)];
        if (tail > n - j + 1) return false;
    }
    return true;
}

void multisets(int l, int start, long budget, const std::vector<int>& w, Partition& cur,
               std::vector<Partition>& out) {
    if (!cur.empty()) out.push_back(cur);
    for (int t = start; t <= l; ++t) {
        const long c = w[static_cast<std::size_t>(t - 1)];
        if (c > budget) break;
        cur.push_back(t);
        multisets(l, t, budget - c, w, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<SummandExponents> enumerate_exponents(const std::vector<int>& w) {
    check_weights(w);
    const int n = static_cast<int>(w.size());
    std::vector<std::vector<int>> all;
    std::vector<int> cur(w.size(), 0);
    exponents(n, 0, n, cur, all);
    std::vector<SummandExponents> out;
    for (auto& k : all) {
        if (!tails_ok(k)) continue;
        long s = 0;
        for (std::size_t i = 0; i < k.size(); ++i) s += static_cast<long>(k[i]) * w[i];
        out.push_back({std::move(k), s});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const SummandExponents& a, const SummandExponents& b) { return a.weight < b.weight; });
    return out;
}

OmegaExtremes omega_extremes(const std::vector<int>& w) {
    const auto ks = enumerate_exponents(w);
    OmegaExtremes out;
    out.omega_min = ks.front().weight;
    out.omega_max = ks.back().weight;
    const std::size_t n = w.size();
    if (n < 2) return out;

    const long sum = weight_sum(w);
    for (std::size_t i = 1; i <= n - 1; ++i) {
        // 1-based i; w_{i-1} < w_i is vacuous at i = 1
        if (i > 1 && !(w[i - 2] < w[i - 1])) continue;
        const long v = sum - w[i] + w[i - 1];
        if (!out.formula || v > *out.formula) out.formula = v;
    }
    for (auto it = ks.rbegin(); it != ks.rend(); ++it)
        if (it->weight < out.omega_max) {
            out.bruteforce = it->weight;
            break;
        }
    out.mismatch = out.formula != out.bruteforce;
    return out;
}

Window well_adapted_window(const std::vector<int>& w, long p) {
    if (w.size() < 2) throw DomainError("the window needs n >= 2");
    if (p < 1) throw DomainError("p must be positive");
    const auto ex = omega_extremes(w);
    const long n = static_cast<long>(w.size());
    const long sum = weight_sum(w);
    return {Rational((*ex.bruteforce - n) * p * sum), Rational((sum - n) * p * sum)};
}

long twisted_weight(const std::vector<int>& w, const std::vector<int>& k, long p, long chi) {
    if (k.size() != w.size()) throw DomainError("exponent vector has the wrong length");
    long kw = 0;
    for (std::size_t i = 0; i < w.size(); ++i) kw += static_cast<long>(k[i]) * w[i];
    return p * (kw - static_cast<long>(w.size())) * weight_sum(w) - chi;
}

long central_vs_tilde_weight(const std::vector<int>& w, long v) {
    return weight_sum(w) * (v - static_cast<long>(w.size()));
}

std::vector<Partition> slot_partitions(const std::vector<int>& w, int l) {
    if (l < 1 || static_cast<std::size_t>(l) > w.size()) throw DomainError("slot index out of range");
    std::vector<Partition> out;
    Partition cur;
    multisets(l, 1, w[static_cast<std::size_t>(l - 1)], w, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_admissible(const std::vector<int>& w, const std::function<void(const AdmissibleSequence&)>& f) {
    check_weights(w);
    const int n = static_cast<int>(w.size());
    std::vector<std::vector<Partition>> choices;
    for (int l = 1; l <= n; ++l) choices.push_back(slot_partitions(w, l));
    AdmissibleSequence cur;
    std::function<void(int)> rec = [&](int l) {
        if (l == n) {
            f(cur);
            return;
        }
        for (const auto& pi : choices[static_cast<std::size_t>(l)]) {
            if (std::find(cur.begin(), cur.end(), pi) != cur.end()) continue;
            cur.push_back(pi);
            rec(l + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

std::vector<AdmissibleSequence> enumerate_admissible(const std::vector<int>& w) {
    std::vector<AdmissibleSequence> out;
    for_each_admissible(w, [&](const AdmissibleSequence& s) { out.push_back(s); });
    return out;
}

std::string partition_text(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ')';
    return os.str();
}

std::string sequence_text(const AdmissibleSequence& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + partition_text(s[i]);
    return out + ")";
}

std::vector<Integer> default_rho(int n, const Integer& base) {
    if (n < 1) throw DomainError("n must be positive");
    std::vector<Integer> rho(static_cast<std::size_t>(n));
    Integer sum = 0;
    for (int i = 1; i < n; ++i) {
        Integer v;
        mpz_pow_ui(v.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n - i));
        rho[static_cast<std::size_t>(i - 1)] = v;
        sum += v;
    }
    rho.back() = -sum;
    return rho;
}

Integer rho_weight(const std::vector<Integer>& rho, const AdmissibleSequence& pi) {
    Integer s = 0;
    for (const auto& part : pi)
        for (int j : part) {
            if (j < 1 || static_cast<std::size_t>(j) > rho.size()) throw DomainError("index outside rho");
            s += rho[static_cast<std::size_t>(j - 1)];
        }
    return s;
}

RhoLemmaReport check_rho_lemma(const std::vector<int>& w, const Integer& base) {
    const int n = static_cast<int>(w.size());
    const auto rho = default_rho(n, base);
    AdmissibleSequence identity;
    for (int l = 1; l <= n; ++l) identity.push_back({l});
    RhoLemmaReport rep;
    rep.identity_weight = rho_weight(rho, identity);
    for_each_admissible(w, [&](const AdmissibleSequence& s) {
        ++rep.sequences;
        if (s == identity) return;
        const Integer x = rho_weight(rho, s);
        if (!rep.min_other_weight || x < *rep.min_other_weight) rep.min_other_weight = x;
        if (x <= 0) rep.violations.push_back(s);
    });
    return rep;
}

Partition label_partition(const SymSpace& space, std::size_t label) {
    Partition p;
    const auto& m = space.label(label).mono;
    for (std::size_t k = 0; k < m.size(); ++k)
        for (int e = 0; e < m[k]; ++e) p.push_back(static_cast<int>(k) + 1);
    return p;
}

bool tuple_is_admissible(const SymSpace& space, const Tuple& t) {
    const auto& w = space.weights();
    if (space.dim() != static_cast<int>(w.size()) || t.size() != w.size()) return false;
    std::set<Partition> seen;
    std::vector<int> lowest;
    for (std::size_t s = 0; s < t.size(); ++s) {
        const Partition p = label_partition(space, t[s]);
        if (!seen.insert(p).second) return false;
        long cost = 0;
        for (int j : p) cost += w[static_cast<std::size_t>(j - 1)];
        // both conditions are monotone in the slot since w is non-decreasing
        int l = p.back();
        while (l <= static_cast<int>(w.size()) && cost > w[static_cast<std::size_t>(l - 1)]) ++l;
        lowest.push_back(l);
    }
    std::sort(lowest.begin(), lowest.end());
    for (std::size_t i = 0; i < lowest.size(); ++i)
        if (lowest[i] > static_cast<int>(i) + 1) return false;
    return true;
}

bool support_is_admissible(const QMultiVector& mv) {
    for (const auto& [t, c] : mv.terms())
        if (!tuple_is_admissible(mv.space(), t)) return false;
    return true;
}

InstabilityPredicates instability_predicates(const LinearisationParams& l, const std::vector<int>& w) {
    if (l.p < 1 || l.q < 1) throw DomainError("p and q must be positive");
    const long n = static_cast<long>(w.size());
    InstabilityPredicates out;
    out.det_boundary_unstable = Rational(l.p) > Rational(-l.q * l.eta_min, n);
    out.infinity_section_unstable = l.r > -l.q * l.eta_min;
    out.chi_well_adapted = n >= 2 && well_adapted_window(w, l.p).contains(Rational(l.chi));
    return out;
}

HmMu hm_mu(const QMultiVector& mv, const std::vector<long>& lambda) {
    if (mv.is_zero()) throw DomainError("zero point");
    const SymSpace& s = mv.space();
    if (lambda.size() != static_cast<std::size_t>(s.dim())) throw DomainError("weight vector has the wrong length");
    std::vector<long> lw(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& m = s.label(i).mono;
        long v = 0;
        for (std::size_t k = 0; k < m.size(); ++k) v += lambda[k] * m[k];
        lw[i] = v;
    }
    HmMu out;
    bool first = true;
    for (const auto& [t, c] : mv.terms()) {
        long v = 0;
        for (std::size_t k = 0; k < t.size(); ++k) v += lw[t[k]];
        if (first || v < out.mu_min) out.mu_min = v;
        if (first || v > out.mu_max) out.mu_max = v;
        first = false;
    }
    out.definitely_unstable = out.mu_min > 0 || out.mu_max < 0;
    return out;
}

}  // namespace grit
