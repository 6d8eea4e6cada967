#pragma once

#include <optional>

#include "cubicbasis/places.hpp"

namespace cubic {

/// Result of the global Artin-Schreier reduction (characteristic 2):
/// b_std = b + shift^2 + shift, every finite pole of b_std has odd order,
/// and ramified lists exactly those poles with ell = -v.
struct ASReduction {
  RatFn b_std;
  RatFn shift;
  std::vector<std::pair<Place, int>> ramified;
};

/// Hasse's reduction loop: repeatedly removes even-order finite poles of b
/// by adding w^2 + w for w = sqrt-of-residue / p^m. Characteristic 2 only.
ASReduction hasse_reduce(const RatFn& b, std::uint64_t seed = 0);

/// Solve w^2 + w = b over F_q(x) if possible (characteristic 2).
std::optional<RatFn> as_root(const RatFn& b, std::uint64_t seed = 0);

struct Char3Step {
  Place place;
  RatFn w2;
  RatFn a_next;
};

/// Final b of the characteristic-3 standard form plus the reduction trace.
/// At every finite place, v(b) >= 0 or v(b) < 0 with gcd(v(b), 3) = 1.
struct Char3Form {
  RatFn b;
  std::vector<Char3Step> trace;
};

/// One reduction step at a place p with v_p(a1) < 0 and 3 | v_p(a1).
/// Postconditions (checked at runtime): v_p strictly increases, other
/// negative valuations are preserved, nonnegative ones stay nonnegative.
std::pair<RatFn, RatFn> char3_reduce_place(const RatFn& a1, const Place& p,
                                           const FElem& j, std::uint64_t seed = 0);

Char3Form char3_standard_form(const RatFn& a1, const FElem& j,
                              std::uint64_t seed = 0, int iteration_cap = 10000);
/// Overload with j = 1.
Char3Form char3_standard_form(const RatFn& a1, std::uint64_t seed = 0);

}  // namespace cubic
