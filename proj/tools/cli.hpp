#pragma once

#include <string>
#include <vector>

namespace gofk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct Result {
  int code = kExitOk;
  std::string out;
  std::string err;
};

// args excludes the program name.
Result run(const std::vector<std::string>& args);

}  // namespace gofk::cli
