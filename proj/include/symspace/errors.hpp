#pragma once

#include <stdexcept>
#include <string>

namespace symspace {

// Malformed input: non-finite parameters, out-of-range arguments.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A parameter regime outside the hypotheses of the check being run.
class PreconditionViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A constructed object would break a structural requirement (e.g. a weight
// that is not concave for the requested constants).
class ConstraintViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested computation exceeds a configured size cap.
class ResourceLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace symspace
