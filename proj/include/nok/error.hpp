#pragma once

#include <stdexcept>
#include <string>

namespace nok {

enum class Errc {
  DominanceViolation,
  SizeMismatch,
  PlacementNotInjective,
  EmptyInput,
  DimensionOverflow,
  Unbounded,
  Empty,
  InterpolationMismatch,
  IndexOutOfRange,
  NotThreeDimensional,
  ResourceExceeded,
  Parse,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nok
