#pragma once

#include <stdexcept>
#include <string>

namespace starsched {

/// Base class for all library errors. Carries a short machine-readable
/// code next to the human-readable message; the CLI maps codes to exit
/// status and diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct InvalidPlatform : Error {
  explicit InvalidPlatform(const std::string& m) : Error("invalid-platform", m) {}
};

struct InvalidPlan : Error {
  explicit InvalidPlan(const std::string& m) : Error("invalid-plan", m) {}
};

struct InfeasibleImbalance : Error {
  explicit InfeasibleImbalance(const std::string& m) : Error("infeasible-imbalance", m) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& m) : Error("budget-exceeded", m) {}
};

struct ConstraintViolation : Error {
  explicit ConstraintViolation(const std::string& m) : Error("constraint-violation", m) {}
};

struct ParseError : Error {
  ParseError(std::string code, const std::string& m) : Error(std::move(code), m) {}
};

}  // namespace starsched
