#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gft {

enum class ErrorKind {
  InvalidArgument,
  DivisionAtZero,
  BranchPointOrPole,
  SyntaxError,
  EvaluationFailed,
  LocallyNonUnivalent,
  DegenerateMobius,
  StepSizeUnderflow,
  NonnegativityViolated,
  ExtrapolationDiverged,
  QuadratureFailed,
  TargetOutOfRange,
  NonAnalyticSample,
  YVanishes,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& what)
      : Error(ErrorKind::SyntaxError, what + " at offset " + std::to_string(position)),
        position_(position),
        expected_(std::move(expected)) {}

  /// Byte offset into the parsed text.
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Thrown when y'/y does not settle near x = 1; keeps the raw tail for inspection.
class ExtrapolationError : public Error {
 public:
  ExtrapolationError(std::vector<double> tail_x, std::vector<double> tail_ratio, const std::string& what)
      : Error(ErrorKind::ExtrapolationDiverged, what),
        tail_x_(std::move(tail_x)),
        tail_ratio_(std::move(tail_ratio)) {}

  const std::vector<double>& tail_x() const noexcept { return tail_x_; }
  const std::vector<double>& tail_ratio() const noexcept { return tail_ratio_; }

 private:
  std::vector<double> tail_x_;
  std::vector<double> tail_ratio_;
};

}  // namespace gft
