#pragma once

#include <cstdint>
#include <iosfwd>

namespace qsm::app {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitUsage = 2,
  kExitVerification = 3,
  kExitResource = 4,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsm::app
