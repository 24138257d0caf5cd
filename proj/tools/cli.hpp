#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padic::cli {

// Exit codes: 0 success, 1 computational error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCompute = 1;
inline constexpr int kExitUsage = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padic::cli
