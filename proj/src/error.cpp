#include "nsgp/error.hpp"

namespace nsgp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::NotASemigroup: return "NotASemigroup";
    case ErrorKind::NotInSemigroup: return "NotInSemigroup";
    case ErrorKind::IdealMismatch: return "IdealMismatch";
    case ErrorKind::DNotOdd: return "DNotOdd";
    case ErrorKind::DNotInS: return "DNotInS";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::NonContiguousIndices: return "NonContiguousIndices";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotStronglyAdmissible: return "NotStronglyAdmissible";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotSorted: return "NotSorted";
    case ErrorKind::NotInVariety: return "NotInVariety";
    case ErrorKind::GenusCapExceeded: return "GenusCapExceeded";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::IsMonic: return "IsMonic";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      position_(position) {}

}  // namespace nsgp
