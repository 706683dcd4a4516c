#ifndef WOLFKIT_ERRORS_HPP
#define WOLFKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wolfkit {

// Caller passed arguments that violate an operation's contract
// (dimension mismatch, non-symmetric form, empty generator list, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but is not in the domain of the operation,
// e.g. exp of an element with A^2 != 0. The witness is a printable
// rendering of the offending expression.
class PreconditionError : public std::domain_error {
 public:
  PreconditionError(const std::string& what, std::string witness)
      : std::domain_error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

// A post-construction verification failed. Signals that the input was not
// what it claimed to be (e.g. not a Wolf algebra, form not invariant).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wolfkit

#endif  // WOLFKIT_ERRORS_HPP
