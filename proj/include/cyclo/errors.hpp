#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

/// Malformed unitary or circuit file.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a synthesis precondition (not unitary,
/// wrong level, not dyadic, bad dimension).
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Column reduction found no operator that makes progress. Only reachable on
/// input outside U(D[zeta_8]) or through a bug.
class ReductionStuck : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace cyclo
