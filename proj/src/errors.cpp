#include "rpq/errors.hpp"

namespace rpq {

const char* err_name(Err e) {
  switch (e) {
    case Err::ParameterOrdering: return "ParameterOrdering";
    case Err::NotNormalized: return "NotNormalized";
    case Err::UnsupportedExponent: return "UnsupportedExponent";
    case Err::NegativeArgument: return "NegativeArgument";
    case Err::IndexOrder: return "IndexOrder";
    case Err::IndeterminateAtZero: return "IndeterminateAtZero";
    case Err::WindowMismatch: return "WindowMismatch";
    case Err::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case Err::WindowExhausted: return "WindowExhausted";
    case Err::DegenerateRecursion: return "DegenerateRecursion";
    case Err::ScaleNotRepresentable: return "ScaleNotRepresentable";
    case Err::DivisionByZeroMode: return "DivisionByZeroMode";
    case Err::TruncationOverflow: return "TruncationOverflow";
    case Err::ConfigInvalid: return "ConfigInvalid";
    case Err::PoleHit: return "PoleHit";
  }
  return "Unknown";
}

Error::Error(Err kind, const std::string& msg)
    : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}

void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace rpq
