#pragma once

#include <stdexcept>
#include <string>

namespace tqr {

enum class ErrorCode {
  invalid_argument = 1,
  pole_at_baseline,
  outside_disk,
  no_convergence,
  scheme_mismatch,
  requires_equal_couplings,
  requires_valid_couplings,
  degenerate_denominator,
  condition_not_met,
  support_overflow,
  not_converged,
  config,
  io,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; the code is what callers branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace tqr
