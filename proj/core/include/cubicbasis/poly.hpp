#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cubicbasis/gf.hpp"

namespace cubic {

/// Dense polynomial over GF(p^n) in the variable x. Coefficients are stored
/// lowest degree first with no leading zeros; the zero polynomial has an
/// empty coefficient vector and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field& f) : field_(f) {}

  static Poly zero(const Field& f) { return Poly(f); }
  static Poly one(const Field& f) { return constant(f, f.one()); }
  static Poly x(const Field& f);
  static Poly constant(const Field& f, const FElem& c);
  static Poly from_coeffs(const Field& f, std::vector<FElem> coeffs);
  /// Convenience for tests: integer coefficients lowest degree first.
  static Poly from_ints(const Field& f, std::initializer_list<std::int64_t> coeffs);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const;

  FElem coeff(int i) const;
  const FElem& lead() const;
  const std::vector<FElem>& coeffs() const { return coeffs_; }

  Poly monic() const;
  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const FElem& s) const;
  /// Multiply by x^k.
  Poly shifted(unsigned k) const;
  Poly pow(unsigned e) const;

  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
  Poly operator/(const Poly& o) const;
  Poly operator%(const Poly& o) const;

  Poly derivative() const;
  FElem eval(const FElem& v) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Expression-style rendering, lowest degree first ("1+2*x+x^2").
  std::string str() const;

 private:
  void trim();
  void check_same(const Poly& o) const;

  Field field_;
  std::vector<FElem> coeffs_;
};

Poly gcd(const Poly& a, const Poly& b);

struct XgcdResult {
  Poly g, s, t;  // g = s*a + t*b, g monic
};
XgcdResult xgcd(const Poly& a, const Poly& b);

/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);
/// base^q mod m, q the field order (computed as n successive p-th powers).
Poly powmod_q(const Poly& base, const Poly& m);

/// Number of times prime divides a (a != 0).
int multiplicity(const Poly& a, const Poly& prime);

/// Canonical ordering for monic polynomials: by degree, then coefficients
/// from the top down via their field index. Used to sort factor lists.
bool poly_less(const Poly& a, const Poly& b);

}  // namespace cubic
