#ifndef SVRPLL_ERRORS_HPP_
#define SVRPLL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace svrpll {

// Invalid user-supplied parameters (generator settings, CLI flags, configs).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// File could not be read/written or its content is malformed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The simplex engine could not reach a verdict (cycling guard, singular basis).
class LpInternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Information matrix lost positive definiteness.
class FilterDivergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace svrpll

#endif  // SVRPLL_ERRORS_HPP_
