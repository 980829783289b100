#pragma once

#include <stdexcept>
#include <string>

namespace gabor {

enum class ErrorKind {
  Domain,                     // argument outside the mathematical domain
  Precondition,               // caller violated a documented precondition
  DivergentSeries,            // closed-form series requested for c <= 0
  ZeroSum,                    // every lattice term vanished
  Degenerate,                 // denominator lattice sum vanished
  DegenerateAngle,            // fractional Fourier angle too close to a multiple of pi
  ParameterNotRepresentable,  // finite model cannot represent (a, b)
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // True for failures caused by the numbers themselves rather than the input.
  bool numerical() const noexcept {
    return kind_ == ErrorKind::ZeroSum || kind_ == ErrorKind::Degenerate ||
           kind_ == ErrorKind::DegenerateAngle;
  }

 private:
  ErrorKind kind_;
};

}  // namespace gabor
