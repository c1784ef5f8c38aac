#pragma once

#include <stdexcept>
#include <string>

namespace evs {

// Malformed or inconsistent caller input. The CLI maps this to exit code 2.
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation that cannot proceed numerically (degenerate system,
// non-finite intermediate). The CLI maps this to exit code 3.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw invalid_input(msg);
}

}  // namespace evs
