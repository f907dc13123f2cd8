#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pg {

enum class ErrorKind {
  InvalidArgument,
  InvalidGroupoid,
  ForeignElement,
  Parse,
  Io,
  UnknownFixture,
  BudgetExhausted,
  NotGenerating,
  NotHomomorphism,
  NotPartialOrder,
  DomainNotReflexive,
  DomainNotSymmetric,
  Hypothesis,
  Congruence,
  WellDefinedness,
  SizeGuard,
  IcarViolation,
  NoResolution,
};

std::string_view to_string(ErrorKind kind);

// Malformed input (bad files, unknown names) as opposed to a structured
// outcome of a well-formed request (budget, failed hypothesis).
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pg
