#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace wiegold {

// Malformed input: algebra files, term text, frame text, matrix files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on arguments was violated (arity mismatch, element out of
// range, incompatible partition, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exponential procedure hit a configured limit. Distinct from a
// mathematical failure: the question was not answered.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what,
                          std::optional<std::uint64_t> best_upper_bound = {})
      : std::runtime_error(what), best_upper_bound_(best_upper_bound) {}

  // For searches that minimise something, the best value found before the
  // budget ran out. Not proved minimal.
  [[nodiscard]] std::optional<std::uint64_t> best_upper_bound() const noexcept {
    return best_upper_bound_;
  }

 private:
  std::optional<std::uint64_t> best_upper_bound_;
};

// A computed certificate failed its own re-verification.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wiegold
