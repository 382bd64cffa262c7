#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nsgp {

enum class ErrorKind {
  GcdNotOne,
  NotASemigroup,
  NotInSemigroup,
  IdealMismatch,
  DNotOdd,
  DNotInS,
  InvalidArgument,
  ParseError,
  ZeroCoefficient,
  NonContiguousIndices,
  NotAdmissible,
  NotStronglyAdmissible,
  LengthMismatch,
  NotSorted,
  NotInVariety,
  GenusCapExceeded,
  WrongDegree,
  NotMonic,
  IsMonic,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure raised by the library. `position` is set for parse
// failures and points at the offending character of the input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace nsgp
