#pragma once

#include <stdexcept>
#include <string>

namespace cubic {

// Every failure mode has a stable code so callers (and the CLI exit-code
// mapping) can dispatch without parsing messages.
enum class errc {
  // field construction
  non_prime_p,
  reducible_modulus,
  degree_mismatch,
  unsupported,
  // ring arithmetic
  division_by_zero,
  mixed_fields,
  both_zero,
  zero_polynomial,
  non_coprime_moduli,
  not_invertible,
  zero_denominator,
  zero_input,
  // standard form / places
  not_standard_form,
  conflicting_targets,
  wrong_characteristic,
  precondition_violated,
  postcondition_failed,
  iteration_cap,
  // discriminant / basis
  degenerate_input,
  internal_inconsistency,
  verify_failed,
  no_solution,
  // verification
  inseparable_model,
  singular_basis_matrix,
  budget_exceeded,
  reducible_input,
  // general-cubic reduction
  pure_cubic,
  not_reducible_here,
  reducible_cubic,
  inseparable,
  // cli
  usage_error,
  parse_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& msg);

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace cubic
