#pragma once

#include "grit/matrix.hpp"
#include "grit/polynomial.hpp"
#include "grit/rational.hpp"
#include "grit/sampling.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace testsupport {

inline constexpr std::uint64_t kSeed = 20240611;

struct Gen : grit::Sampler {
    explicit Gen(std::uint64_t seed = kSeed) : Sampler(seed) {}

    grit::Polynomial polynomial(const std::vector<std::string>& vars, int terms, int max_deg) {
        grit::Polynomial p;
        for (int k = 0; k < terms; ++k) {
            grit::Exponents e(vars.size());
            for (auto& x : e) x = integer(0, max_deg);
            p += grit::Polynomial::monomial(vars, e, rational());
        }
        return p;
    }
};

}  // namespace testsupport
