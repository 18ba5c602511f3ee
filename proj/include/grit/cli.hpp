#pragma once

#include "grit/groups.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace grit::cli {

inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

/// Runs one command line (program name excluded). Reports go to `out`,
/// diagnostics to `err`. GRIT_SEED, when set, replaces --seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Group from a JSON file, falling back to a built-in name.
GroupPresentation resolve_group(const std::string& source);

}  // namespace grit::cli
