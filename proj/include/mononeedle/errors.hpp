#pragma once

#include <stdexcept>
#include <string>

namespace mononeedle {

// Validation failures map to CLI exit code 2, ResourceLimitError to 3.

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidLattice : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidConstruction : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Raised when an estimate carries no usable information (e.g. CI reaching 1).
class NoInformation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mononeedle
