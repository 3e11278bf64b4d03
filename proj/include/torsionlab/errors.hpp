#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torsionlab {

// Base of every error raised by the library.
class TorsionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's domain: vanishing on the circle, pole on the
// circle, pole inside the disk where H-infinity is required.
class DomainError : public TorsionError {
 public:
  using TorsionError::TorsionError;
};

// A sample grid too coarse for the requested quantity. Retrying on a finer
// grid is the expected remedy.
class ResolutionError : public TorsionError {
 public:
  using TorsionError::TorsionError;
};

// Singular sections, failed stabilization, non-convergent quadrature or
// schedules.
class NumericalError : public TorsionError {
 public:
  using TorsionError::TorsionError;
};

class ParseError : public TorsionError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : TorsionError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace torsionlab
