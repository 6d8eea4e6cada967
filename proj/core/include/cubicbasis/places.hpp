#pragma once

#include <limits>
#include <variant>
#include <vector>

#include "cubicbasis/factor.hpp"
#include "cubicbasis/ratfunc.hpp"

namespace cubic {

/// Finite place of F_q(x): a monic irreducible polynomial. The infinite
/// place is out of scope throughout.
class Place {
 public:
  explicit Place(const Poly& prime);
  /// Trusted constructor for primes that come out of factor().
  static Place unchecked(const Poly& prime);

  const Poly& prime() const { return prime_; }
  int degree() const { return prime_.degree(); }
  bool operator==(const Place& o) const { return prime_ == o.prime_; }

 private:
  Place() = default;
  Poly prime_;
};

inline constexpr int kValInfinity = std::numeric_limits<int>::max();

/// v_p(f); kValInfinity for f = 0.
int val_at(const RatFn& f, const Place& p);

/// Residue f mod p^k as a polynomial of degree < k*deg(p); requires
/// v_p(f) >= 0 (equivalently p does not divide den(f)).
Poly residue_at(const RatFn& f, const Place& p, int k = 1);

/// p-th root in the residue field k(p): the unique r with r^p = a mod p.
Poly residue_pth_root(const Poly& a, const Place& p);
/// Square root in k(p), characteristic 2 only.
Poly residue_sqrt_char2(const Poly& a, const Place& p);

/// a = unit * alpha / (gamma^3 * beta1 * beta2^2), alpha/beta1/beta2/gamma
/// monic, gcd(alpha, beta*gamma) = 1, beta = beta1*beta2^2 cube-free.
struct DecompPNe3 {
  Poly alpha;
  Poly beta1, beta2, gamma;
  FElem unit;

  Poly beta() const { return beta1 * beta2 * beta2; }
  /// Numerator including the unit factor.
  Poly alpha_full() const { return alpha.scaled(unit); }
  RatFn reassemble() const;
};
DecompPNe3 decompose_pne3(const RatFn& a, std::uint64_t seed = 0);

/// b = unit * xi1 * xi2^2 / beta with xi1 squarefree, gcd(xi1*xi2, beta) = 1
/// and every denominator exponent ell positive and coprime to 3.
struct DecompP3 {
  Poly xi1, xi2, beta;
  FElem unit;
  std::vector<std::pair<Place, int>> places;  // (p_i, ell_i)

  RatFn reassemble() const;
};
DecompP3 decompose_p3(const RatFn& b, std::uint64_t seed = 0);

/// Strong-approximation targets. A valuation target asks for
/// v_p(f - p^e) > e with e < 0 (match the monomial p^e to first order);
/// a residue target asks for f = residue mod p^k. Away from the targets the
/// result has no finite poles.
struct ValTarget {
  Place place;
  int e;  // < 0
};
struct ResidueTarget {
  Place place;
  int k;  // >= 1
  Poly residue;
};
using ApproxTarget = std::variant<ValTarget, ResidueTarget>;

RatFn approx_elem(const Field& f, const std::vector<ApproxTarget>& targets);

}  // namespace cubic
