#pragma once

#include <array>

#include "cubicbasis/ratfunc.hpp"

namespace cubic {

/// "P" or "P^N" with an optional explicit modulus (n+1 coefficients of the
/// defining polynomial over GF(p), lowest first).
struct FieldSpec {
  std::uint64_t p = 0;
  unsigned n = 1;
  std::vector<std::uint64_t> modulus;  // empty: pick deterministically
};

FieldSpec parse_field_spec(const std::string& text);
std::vector<std::uint64_t> parse_modulus_list(const std::string& text);
Field make_field(const FieldSpec& spec);

/// Rational-function expressions in x with field constants: integers, `x`,
/// `t` (the extension generator, n > 1 only), `+ - * / ^ ( )`.
RatFn parse_ratfn(const std::string& expr, const Field& f);

/// "b,c,d" — three comma-separated expressions.
std::array<RatFn, 3> parse_cubic_coeffs(const std::string& text, const Field& f);

}  // namespace cubic
