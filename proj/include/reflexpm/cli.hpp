#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reflexpm::cli {

/// Exit codes: 0 success, 1 a verification or property check failed,
/// 2 invalid input or capability exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reflexpm::cli
