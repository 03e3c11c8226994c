#pragma once

#include <stdexcept>
#include <string>

namespace ccsub {

/// Malformed ruleset text, out-of-range parameters, bad CLI values.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Progression parameters outside (c+2)/2 <= b < c, or b < 5 without override.
class HypothesisViolation : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Requested heap size exceeds the configured state ceiling.
class ResourceLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// No (preperiod, period) pair meets the evidence threshold.
class InsufficientData : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace ccsub
