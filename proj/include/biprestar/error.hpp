#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace biprestar {

enum class ErrorCode {
  DivisionBySingular,
  CompositionConstantTerm,
  NotNormalized,
  ArgOutOfRange,
  BadIndex,
  RangeError,
  DegenerateDenominator,
  InconsistentSample,
  InternalConsistency,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when the |a2| denominator of the class vanishes (the excluded t).
class DegenerateDenominator : public Error {
 public:
  DegenerateDenominator(const std::string& what, double denominator,
                        std::optional<double> exclusion_t)
      : Error(ErrorCode::DegenerateDenominator, what),
        denominator_(denominator),
        exclusion_t_(exclusion_t) {}

  double denominator() const noexcept { return denominator_; }
  std::optional<double> exclusion_t() const noexcept { return exclusion_t_; }

 private:
  double denominator_;
  std::optional<double> exclusion_t_;
};

}  // namespace biprestar
