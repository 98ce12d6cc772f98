#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace parabolic {

enum class ErrorCode {
  NotAUnit,
  NonZeroConstantTerm,
  NotInvertible,
  BadConstantTerm,
  DegenerateParameter,
  InvalidArgument,
  StepSizeUnderflow,
  PathThroughSingularity,
  SeriesOutOfDomain,
  RadiusTooSmall,
  AtBifurcation,
  ValidationMismatch,
  NewtonDivergence,
  RootLoss,
  NotGeneric,
  AmbiguousMatch,
  NotCanonical,
  CodimensionMismatch,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Several roots of unity realise the same match; all of them are reported.
class AmbiguousMatch : public Error {
public:
  explicit AmbiguousMatch(std::vector<std::complex<double>> witnesses)
      : Error(ErrorCode::AmbiguousMatch,
              std::to_string(witnesses.size()) + " roots of unity match"),
        witnesses_(std::move(witnesses)) {}

  const std::vector<std::complex<double>>& witnesses() const noexcept { return witnesses_; }

private:
  std::vector<std::complex<double>> witnesses_;
};

}  // namespace parabolic
