// Error hierarchy shared by the engine and the command line front end.

#ifndef RELWEYL_ERROR_HPP_
#define RELWEYL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relweyl {

// Base for every error the engine raises on purpose. `details` carries
// machine-readable items (uncovered roots, failing pairs, ...).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg, std::vector<std::string> details = {})
    : std::runtime_error(msg), details_(std::move(details)) {}

  const std::vector<std::string>& details() const { return details_; }

private:
  std::vector<std::string> details_;
};

// Malformed or incomplete problem description.
class SchemaError : public Error {
public:
  using Error::Error;
};

// Well-formed input that the engine refuses (violated precondition,
// inconsistent oracle data, enumeration cap exceeded).
class Rejection : public Error {
public:
  using Error::Error;
};

// An internal invariant failed. Must never fire on correct code.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

namespace impl {

[[noreturn]] inline void reject(const std::string& msg,
                                std::vector<std::string> details = {}) {
  throw Rejection(msg, std::move(details));
}

[[noreturn]] inline void broken(const std::string& msg,
                                std::vector<std::string> details = {}) {
  throw InvariantViolation(msg, std::move(details));
}

} // namespace impl
} // namespace relweyl

#endif // RELWEYL_ERROR_HPP_
