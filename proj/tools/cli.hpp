#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gapalign/verify.hpp"

namespace gapalign::cli {

/// Exit codes. Part of the scripting interface.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_no_full_cover = 2,
    exit_disagreement = 3,
};

/// Environment variable naming the default alphabet preset for `align`.
inline constexpr const char* alphabet_env = "GAPALIGN_ALPHABET";

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
/// Same, with `verify` checking the given implementations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const verify::Targets& targets);

}  // namespace gapalign::cli
