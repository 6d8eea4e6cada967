#pragma once

#include <string>

#include "cubicbasis/poly.hpp"

namespace cubic {

/// Rational function num/den over F_q[x], kept normalized: gcd(num, den) = 1,
/// den monic, zero is 0/1.
class RatFn {
 public:
  RatFn() = default;
  explicit RatFn(const Poly& p) : num_(p), den_(Poly::one(p.field())) {}
  RatFn(const Poly& num, const Poly& den);

  static RatFn zero(const Field& f) { return RatFn(Poly::zero(f)); }
  static RatFn one(const Field& f) { return RatFn(Poly::one(f)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const Field& field() const { return num_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }

  RatFn operator-() const;
  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator*(const RatFn& o) const;
  RatFn operator/(const RatFn& o) const;
  RatFn inverse() const;
  RatFn scaled(const FElem& s) const;
  /// Integer power, negative allowed for nonzero input.
  RatFn pow(int e) const;

  bool operator==(const RatFn& o) const;
  bool operator!=(const RatFn& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Poly num_, den_;
};

RatFn cubic_disc(const RatFn& b, const RatFn& c, const RatFn& d);

}  // namespace cubic
