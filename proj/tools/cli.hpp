#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weaktree::cli {

/// Exit codes. Verdict exits (0 and 10) never collide with error exits.
inline constexpr int kExitOk = 0;
inline constexpr int kExitEmbeds = 10;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitInternal = 4;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weaktree::cli
