#ifndef MCDM_ERROR_HPP
#define MCDM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcdm {

enum class ErrorCode {
  DimensionMismatch,
  DuplicateLabel,
  EmptyLabel,
  InvalidValue,
  MalformedHeader,
  UnknownDirectionToken,
  RaggedRow,
  EmptyInput,
  InsufficientData,
  MissingCell,
  InvalidArity,
  DegenerateMatrix,
  InsufficientRows,
  ZeroColumn,
  NonConvergence,
  AllZero,
  NegativeWeight,
  InvalidPairwise,
  DegenerateAlternative,
  OutOfRange,
  DegenerateBase,
  TooFewAlternatives,
  InvalidArgument,
  Io,
};

// One fixed message per code. The CLI prints "error: <message>[: <detail>]".
constexpr std::string_view message(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::DuplicateLabel: return "duplicate label";
    case ErrorCode::EmptyLabel: return "empty label";
    case ErrorCode::InvalidValue: return "invalid value";
    case ErrorCode::MalformedHeader: return "malformed header";
    case ErrorCode::UnknownDirectionToken: return "unknown direction token";
    case ErrorCode::RaggedRow: return "ragged row";
    case ErrorCode::EmptyInput: return "empty input";
    case ErrorCode::InsufficientData: return "insufficient data";
    case ErrorCode::MissingCell: return "missing cell";
    case ErrorCode::InvalidArity: return "invalid arity";
    case ErrorCode::DegenerateMatrix: return "degenerate matrix";
    case ErrorCode::InsufficientRows: return "insufficient rows";
    case ErrorCode::ZeroColumn: return "zero column";
    case ErrorCode::NonConvergence: return "power iteration did not converge";
    case ErrorCode::AllZero: return "all weights zero";
    case ErrorCode::NegativeWeight: return "negative weight";
    case ErrorCode::InvalidPairwise: return "invalid pairwise matrix";
    case ErrorCode::DegenerateAlternative: return "degenerate alternative";
    case ErrorCode::OutOfRange: return "out of range";
    case ErrorCode::DegenerateBase: return "degenerate base weight";
    case ErrorCode::TooFewAlternatives: return "too few alternatives";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Io: return "cannot read input";
  }
  return "unknown error";
}

class Error : public std::runtime_error {
 public:
  explicit Error(ErrorCode code, std::string_view detail = {})
      : std::runtime_error(format(code, detail)), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string format(ErrorCode code, std::string_view detail) {
    std::string out = "error: ";
    out += message(code);
    if (!detail.empty()) {
      out += ": ";
      out += detail;
    }
    return out;
  }

  ErrorCode code_;
  std::string detail_;
};

}  // namespace mcdm

#endif  // MCDM_ERROR_HPP
