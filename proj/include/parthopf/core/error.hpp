#pragma once

#include <stdexcept>
#include <string>

namespace parthopf {

/// Inputs whose shapes do not fit together (dimension mismatch, bad index,
/// scalars from two different fields, malformed tables).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested construction needs a characteristic the declared field
/// does not have (e.g. char 2 for the Sweedler algebra).
class UnsupportedFieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction was handed data that fails a mathematical precondition.
/// The message carries the failing witness.
class RejectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input files that cannot be read as the declared object kind.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace parthopf
