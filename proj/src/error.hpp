#ifndef INNSKIT_ERROR_HPP
#define INNSKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace innskit {

// Error taxonomy. "guard" errors mean a mathematical hypothesis failed on the
// input (the computation is refused, not wrong); "usage" errors are malformed
// requests; everything else is a bug.
enum class errc {
  division_by_zero,
  field_mismatch,
  ring_mismatch,
  zero_polynomial,
  not_zero_dimensional,
  not_finite_colength,
  not_nested,
  split_incomplete,
  dimension_exceeded,
  generically_singular,
  no_nonzerodivisor,
  not_reduced,
  iteration_cap,
  unlucky_prime,
  validation_failed,
  inseparable_unsupported,
  syntax_error,
  usage_error,
  internal,
};

const char* errc_name(errc c);

// true for hypothesis-failure errors that map to exit code 2 in the CLI
bool errc_is_guard(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, std::string(errc_name(code)) + ": " + what);
}

} // namespace innskit

#endif
