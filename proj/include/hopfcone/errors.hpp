#pragma once

#include <stdexcept>
#include <string>

namespace hopfcone {

/// Parameters outside the admissible open domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An inverse-trig argument or radicand fell outside its valid range by more
/// than roundoff.
class BranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two great circles parameterize the same point set.
class IdenticalCircles : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hopfcone
