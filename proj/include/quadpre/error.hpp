#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadpre {

/// Broken precondition of a library operation (negative square root input,
/// mismatched moduli, degenerate elimination input, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `position` is the 0-based offset of the first
/// offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class FactorizationBudgetExceeded : public std::runtime_error {
 public:
  explicit FactorizationBudgetExceeded(const std::string& unfactored)
      : std::runtime_error("factorization budget exceeded on cofactor " + unfactored),
        cofactor_(unfactored) {}

  const std::string& cofactor() const noexcept { return cofactor_; }

 private:
  std::string cofactor_;
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quadpre
