#include "error.hpp"

namespace innskit {

const char* errc_name(errc c) {
  switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::not_zero_dimensional: return "NotZeroDimensional";
    case errc::not_finite_colength: return "NotFiniteColength";
    case errc::not_nested: return "NotNested";
    case errc::split_incomplete: return "SplitIncomplete";
    case errc::dimension_exceeded: return "DimensionExceeded";
    case errc::generically_singular: return "GenericallySingular";
    case errc::no_nonzerodivisor: return "NoNonzerodivisor";
    case errc::not_reduced: return "NotReduced";
    case errc::iteration_cap: return "IterationCap";
    case errc::unlucky_prime: return "UnluckyPrime";
    case errc::validation_failed: return "ValidationFailed";
    case errc::inseparable_unsupported: return "InseparableUnsupported";
    case errc::syntax_error: return "SyntaxError";
    case errc::usage_error: return "UsageError";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

bool errc_is_guard(errc c) {
  switch (c) {
    case errc::not_zero_dimensional:
    case errc::not_finite_colength:
    case errc::not_nested:
    case errc::split_incomplete:
    case errc::dimension_exceeded:
    case errc::generically_singular:
    case errc::no_nonzerodivisor:
    case errc::not_reduced:
    case errc::iteration_cap:
    case errc::unlucky_prime:
    case errc::validation_failed:
    case errc::inseparable_unsupported:
      return true;
    default:
      return false;
  }
}

} // namespace innskit
