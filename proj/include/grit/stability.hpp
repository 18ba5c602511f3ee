#pragma once

#include "grit/rational.hpp"
#include "grit/symwedge.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace grit {

/// Throws DomainError unless w_1 = 1, w_2 > 1 (when n >= 2) and w is
/// non-decreasing.
void check_weights(const std::vector<int>& w);

struct SummandExponents {
    std::vector<int> k;
    long weight = 0;  // sum k_i w_i
};

/// All k >= 0 with sum n and k_j + ... + k_n <= n - j + 1, sorted by weight
/// (ties: k lexicographically descending).
std::vector<SummandExponents> enumerate_exponents(const std::vector<int>& w);

struct OmegaExtremes {
    long omega_min = 0;
    long omega_max = 0;
    /// max over 1 <= i <= n-1 with w_{i-1} < w_i (no condition at i = 1)
    /// of sum(w) - w_{i+1} + w_i. Empty when n = 1.
    std::optional<long> formula;
    /// Second highest distinct weight of enumerate_exponents. Empty when n = 1.
    std::optional<long> bruteforce;
    bool mismatch = false;
};

OmegaExtremes omega_extremes(const std::vector<int>& w);

/// Open interval lo < chi < hi.
struct Window {
    Rational lo, hi;
    bool contains(const Rational& x) const { return lo < x && x < hi; }
};

/// ((w_{max-1} - n) p sum(w), (sum(w) - n) p sum(w)) with the brute-force
/// w_{max-1}. Requires n >= 2 and p >= 1.
Window well_adapted_window(const std::vector<int>& w, long p);

/// p (k.w - n) sum(w) - chi.
long twisted_weight(const std::vector<int>& w, const std::vector<int>& k, long p, long chi);

/// sum(w) (v - n).
long central_vs_tilde_weight(const std::vector<int>& w, long v);

/// Multiset over {1..l}, kept sorted ascending.
using Partition = std::vector<int>;
using AdmissibleSequence = std::vector<Partition>;

/// Nonempty partitions pi with supp(pi) in {1..l} and sum_{t in pi} w_t <= w_l,
/// in lexicographic order.
std::vector<Partition> slot_partitions(const std::vector<int>& w, int l);

/// Calls f on every admissible sequence, slot 1 varying slowest.
void for_each_admissible(const std::vector<int>& w, const std::function<void(const AdmissibleSequence&)>& f);
std::vector<AdmissibleSequence> enumerate_admissible(const std::vector<int>& w);

std::string partition_text(const Partition& p);
std::string sequence_text(const AdmissibleSequence& s);

/// rho_i = B^{n-i} for i < n and rho_n = -(rho_1 + ... + rho_{n-1}).
std::vector<Integer> default_rho(int n, const Integer& base);

Integer rho_weight(const std::vector<Integer>& rho, const AdmissibleSequence& pi);

struct RhoLemmaReport {
    std::size_t sequences = 0;
    Integer identity_weight;
    std::optional<Integer> min_other_weight;
    std::vector<AdmissibleSequence> violations;  // non-identity with weight <= 0
    bool holds() const { return identity_weight == 0 && violations.empty(); }
};

RhoLemmaReport check_rho_lemma(const std::vector<int>& w, const Integer& base);

/// The multiset of e-indices of a basis label, e.g. e1^2*e3 -> (1,1,3).
Partition label_partition(const SymSpace& space, std::size_t label);

/// Whether the labels of t can be ordered into an admissible sequence.
bool tuple_is_admissible(const SymSpace& space, const Tuple& t);

/// Every coordinate of mv is admissible.
bool support_is_admissible(const QMultiVector& mv);

struct LinearisationParams {
    long p = 1, q = 1, r = 1;
    long chi = 0;
    long eta_min = 0;
};

struct InstabilityPredicates {
    bool det_boundary_unstable = false;
    bool infinity_section_unstable = false;
    bool chi_well_adapted = false;
};

/// p > -q eta_min / n, r > -q eta_min, and chi in the well-adapted window.
InstabilityPredicates instability_predicates(const LinearisationParams& l, const std::vector<int>& w);

struct HmMu {
    long mu_min = 0;
    long mu_max = 0;
    bool definitely_unstable = false;
};

/// Extreme torus weights over the nonzero coordinates of mv, where e_k has
/// weight lambda_k. Throws on zero mv or a length mismatch.
HmMu hm_mu(const QMultiVector& mv, const std::vector<long>& lambda);

}  // namespace grit
