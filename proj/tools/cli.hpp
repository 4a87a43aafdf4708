#pragma once

#include <cstdint>
#include <ostream>

namespace unient::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kDomain = 3,
  kUsage = 4,
  kSuiteFailure = 5,
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Entry point shared by the executable and the tests. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unient::cli
