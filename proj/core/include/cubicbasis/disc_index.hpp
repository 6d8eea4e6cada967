#pragma once

#include <optional>

#include "cubicbasis/standard_form.hpp"

namespace cubic {

/// Nonzero ideal of F_q[x] in factored form: distinct monic irreducibles
/// with positive exponents, sorted; the unit ideal has no factors.
struct IdealFactored {
  std::vector<std::pair<Poly, int>> factors;

  static IdealFactored one() { return {}; }
  static IdealFactored from_poly(const Poly& a, std::uint64_t seed = 0);

  Poly generator(const Field& f) const;
  IdealFactored times(const IdealFactored& o) const;
  IdealFactored power(int e) const;
  int exponent_of(const Poly& prime) const;
  bool is_one() const { return factors.empty(); }
  bool operator==(const IdealFactored& o) const { return factors == o.factors; }
};

enum class RamKind { total_e3, partial_e2, wild_data };
const char* ram_kind_name(RamKind k) noexcept;

struct DiscReport {
  /// Discriminant of the chosen integral generator (a polynomial value).
  Poly delta_omega;
  IdealFactored disc;
  IdealFactored index;
  std::optional<std::pair<Poly, Poly>> eta;               // (eta1, eta2), p >= 5
  std::vector<std::pair<Place, int>> ell;                 // p = 2 / p = 3 data
  std::vector<std::pair<Place, RamKind>> ram;
  /// p = 2 only: the reduced Artin-Schreier form of 1/a^2 + 1.
  std::optional<ASReduction> resolvent;
};

/// Delta(omega) for omega = gamma*beta1*beta2*y, minimal polynomial
/// X^3 - 3(gamma*beta1*beta2)^2 X - alpha*beta1^2*beta2. p != 3.
Poly delta_of_omega(const DecompPNe3& d);

/// Closed forms per characteristic. Each report satisfies the ideal identity
/// (delta_omega) = index^2 * disc, which the caller may re-check via
/// factoring delta_omega.
DiscReport disc_index_podd(const DecompPNe3& d, std::uint64_t seed = 0);
DiscReport disc_index_p2(const DecompPNe3& d, const RatFn& a, std::uint64_t seed = 0);
DiscReport disc_p3(const DecompP3& d, std::uint64_t seed = 0);

/// Ramification classification of the finite places visible in the input
/// data (informational; the basis pipeline never depends on it).
std::vector<std::pair<Place, RamKind>> ram_classify_pne3(const DecompPNe3& d,
                                                         const DiscReport& report);
std::vector<std::pair<Place, RamKind>> ram_classify_p3(const DecompP3& d);

}  // namespace cubic
