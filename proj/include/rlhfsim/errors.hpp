#pragma once

#include <stdexcept>
#include <string>

namespace rlhfsim {

// Exit codes: 0 ok, 2 config error, 3 infeasible, 4 search cap exceeded.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
  static constexpr int exit_code = 2;
};

struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
  static constexpr int exit_code = 3;
};

struct SearchCapError : std::runtime_error {
  explicit SearchCapError(const std::string& msg) : std::runtime_error(msg) {}
  static constexpr int exit_code = 4;
};

}  // namespace rlhfsim
