#pragma once

#include <stdexcept>
#include <string>

namespace rpq {

// Failure taxonomy. Every throwing path names one of these kinds so callers
// (and the report layer) can classify skips vs genuine errors.
enum class Err {
  ParameterOrdering,     // requires 0 < q < p <= 1
  NotNormalized,         // custom kernel must vanish at (1,1)
  UnsupportedExponent,   // kernel not evaluable at the requested mode
  NegativeArgument,      // factorial-type quantity at negative index
  IndexOrder,            // binomial outside 0 <= k <= n
  IndeterminateAtZero,   // 0/0 eigenvalue limit has no table value
  WindowMismatch,        // ring operands with incompatible windows
  NonzeroConstantTerm,   // series exponential needs weight >= 1 argument
  WindowExhausted,       // operator domain shrank to nothing
  DegenerateRecursion,   // tower recursion hit a vanishing denominator
  ScaleNotRepresentable, // normalization scale is not a rational power
  DivisionByZeroMode,    // exact division by a vanishing deformed number
  TruncationOverflow,    // index beyond the truncation order
  ConfigInvalid,         // malformed CLI/file configuration
  PoleHit,               // product factor evaluated at a pole
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err kind, const std::string& msg);
  Err kind() const { return kind_; }

private:
  Err kind_;
};

[[noreturn]] void fail(Err kind, const std::string& msg);

} // namespace rpq
