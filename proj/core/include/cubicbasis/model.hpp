#pragma once

#include <optional>

#include "cubicbasis/places.hpp"

namespace cubic {

/// Monic cubic X^3 + c2 X^2 + c1 X + c0 over F_q(x); the minimal polynomial
/// of a generator of a cubic extension when irreducible.
struct CubicModel {
  RatFn c2, c1, c0;

  const Field& field() const { return c0.field(); }
  RatFn disc() const;
  std::string str(const std::string& var = "X") const;
  bool operator==(const CubicModel& o) const {
    return c2 == o.c2 && c1 == o.c1 && c0 == o.c0;
  }
};

/// a0 + a1 w + a2 w^2 for the generator w of a CubicModel.
struct LElem {
  RatFn a0, a1, a2;

  bool operator==(const LElem&) const = default;
};

LElem lelem_zero(const Field& f);
LElem lelem_one(const Field& f);
LElem ladd(const LElem& u, const LElem& v);
LElem lsub(const LElem& u, const LElem& v);
LElem lscale(const RatFn& s, const LElem& u);
LElem lmul(const CubicModel& m, const LElem& u, const LElem& v);

/// Characteristic polynomial X^3 - e1 X^2 + e2 X - e3 of multiplication
/// by the element (trace, second symmetric function, norm).
struct CharPoly {
  RatFn e1, e2, e3;
};
CharPoly char_poly_elem(const CubicModel& m, const LElem& u);

/// Integral over F_q[x]: all characteristic coefficients are polynomials.
bool is_integral(const CubicModel& m, const LElem& u);

/// All roots in F_q(x) of a nonzero polynomial with rational-function
/// coefficients (lowest degree first). Clears denominators, then enumerates
/// divisor candidates num/den with den | leading and num | constant
/// coefficient; the candidate count is capped by `budget`.
std::vector<RatFn> ratfn_poly_roots(const std::vector<RatFn>& coeffs,
                                    std::uint64_t seed = 0,
                                    std::uint64_t budget = 1u << 20);

/// A root of the model in F_q(x) itself, if one exists.
std::optional<RatFn> cubic_rational_root(const CubicModel& m, std::uint64_t seed = 0,
                                         std::uint64_t budget = 1u << 20);

/// Monic cubics are irreducible over F_q(x) iff they have no root there.
bool cubic_irreducible(const CubicModel& m, std::uint64_t seed = 0,
                       std::uint64_t budget = 1u << 20);

/// Exact square root in F_q(x), if f is a square.
std::optional<RatFn> ratfn_sqrt(const RatFn& f, std::uint64_t seed = 0);

}  // namespace cubic
