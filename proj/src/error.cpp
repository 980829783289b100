#include "gabor/error.hpp"

namespace gabor {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Precondition: return "PreconditionError";
    case ErrorKind::DivergentSeries: return "DivergentSeries";
    case ErrorKind::ZeroSum: return "ZeroSum";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::DegenerateAngle: return "DegenerateAngle";
    case ErrorKind::ParameterNotRepresentable: return "ParameterNotRepresentable";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

}  // namespace gabor
