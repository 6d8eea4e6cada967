#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "absl/container/inlined_vector.h"
#include "cubicbasis/errors.hpp"

namespace cubic {

/// Element of GF(p^n): coordinates in the power basis of the field modulus,
/// lowest degree first, always of length n. Plain data; arithmetic goes
/// through the owning Field.
struct FElem {
  absl::InlinedVector<std::uint64_t, 4> c;
  bool operator==(const FElem&) const = default;
};

/// Immutable context for GF(p^n) = GF(p)[t]/(modulus). Cheap to copy
/// (shared representation). p must fit a machine word (p < 2^31); n >= 1.
///
/// With no modulus given and n > 1, a deterministic irreducible modulus is
/// chosen: monic degree-n polynomials are scanned in increasing order of
/// their base-p coefficient encoding (c0 least significant) and the first
/// irreducible one wins.
class Field {
 public:
  Field() = default;  // empty handle; only assignment is valid

  static Field make(std::uint64_t p, unsigned n = 1);
  // modulus: n+1 coefficients, lowest first, monic.
  static Field make(std::uint64_t p, unsigned n, const std::vector<std::uint64_t>& modulus);

  bool valid() const { return rep_ != nullptr; }
  std::uint64_t p() const;
  unsigned n() const;
  const std::vector<std::uint64_t>& modulus() const;

  /// q = p^n; throws Unsupported if it does not fit 64 bits.
  std::uint64_t order() const;
  bool order_fits_u64() const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  FElem zero() const;
  FElem one() const;
  /// The class of t (generator of the power basis); equals the scalar p-image
  /// of nothing useful for n = 1, so only allowed for n > 1.
  FElem gen() const;
  FElem from_int(std::int64_t v) const;
  FElem from_coeffs(const std::vector<std::uint64_t>& coeffs) const;

  bool is_zero(const FElem& a) const;
  bool is_one(const FElem& a) const;

  FElem add(const FElem& a, const FElem& b) const;
  FElem sub(const FElem& a, const FElem& b) const;
  FElem neg(const FElem& a) const;
  FElem mul(const FElem& a, const FElem& b) const;
  FElem inv(const FElem& a) const;
  FElem div(const FElem& a, const FElem& b) const;
  FElem pow(const FElem& a, std::uint64_t e) const;

  /// Frobenius a -> a^p.
  FElem frob(const FElem& a) const;
  /// Inverse Frobenius: the unique b with b^p = a.
  FElem frob_root(const FElem& a) const;

  /// Does a have a square root, and if so which (smallest by index order).
  bool is_square(const FElem& a) const;
  FElem sqrt(const FElem& a) const;

  /// Enumeration: bijection between [0, q) and field elements via base-p
  /// digits (c0 least significant). Requires q to fit 64 bits.
  FElem elem_at(std::uint64_t index) const;
  std::uint64_t index_of(const FElem& a) const;

  std::string to_string(const FElem& a) const;

 private:
  struct Rep;
  std::shared_ptr<const Rep> rep_;
};

}  // namespace cubic
