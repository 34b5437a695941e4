#pragma once

#include <stdexcept>
#include <string>

namespace rmpc {

/// Invalid code parameters, e.g. RM order outside [0, m].
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vector or tensor length does not match what the code expects.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a storage or enumeration cap.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed code or product descriptor string.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid simulation configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rmpc
