#include "cubicbasis/model.hpp"

namespace cubic {

RatFn CubicModel::disc() const { return cubic_disc(c2, c1, c0); }

std::string CubicModel::str(const std::string& var) const {
  std::string s = var + "^3";
  auto term = [&](const RatFn& c, const std::string& mono) {
    if (c.is_zero()) return;
    s += " + (" + c.str() + ")";
    if (!mono.empty()) s += "*" + mono;
  };
  term(c2, var + "^2");
  term(c1, var);
  term(c0, "");
  return s;
}

LElem lelem_zero(const Field& f) {
  return {RatFn::zero(f), RatFn::zero(f), RatFn::zero(f)};
}

LElem lelem_one(const Field& f) {
  return {RatFn::one(f), RatFn::zero(f), RatFn::zero(f)};
}

LElem ladd(const LElem& u, const LElem& v) {
  return {u.a0 + v.a0, u.a1 + v.a1, u.a2 + v.a2};
}

LElem lsub(const LElem& u, const LElem& v) {
  return {u.a0 - v.a0, u.a1 - v.a1, u.a2 - v.a2};
}

LElem lscale(const RatFn& s, const LElem& u) {
  return {s * u.a0, s * u.a1, s * u.a2};
}

LElem lmul(const CubicModel& m, const LElem& u, const LElem& v) {
  // convolution up to w^4, then w^3 = -(c2 w^2 + c1 w + c0) and
  // w^4 = (c2^2 - c1) w^2 + (c2 c1 - c0) w + c2 c0
  RatFn d0 = u.a0 * v.a0;
  RatFn d1 = u.a0 * v.a1 + u.a1 * v.a0;
  RatFn d2 = u.a0 * v.a2 + u.a1 * v.a1 + u.a2 * v.a0;
  RatFn d3 = u.a1 * v.a2 + u.a2 * v.a1;
  RatFn d4 = u.a2 * v.a2;
  return {d0 - d3 * m.c0 + d4 * (m.c2 * m.c0),
          d1 - d3 * m.c1 + d4 * (m.c2 * m.c1 - m.c0),
          d2 - d3 * m.c2 + d4 * (m.c2 * m.c2 - m.c1)};
}

CharPoly char_poly_elem(const CubicModel& m, const LElem& u) {
  require(!m.disc().is_zero(), errc::inseparable_model,
          "model has vanishing discriminant");
  // columns of the multiplication-by-u matrix in the basis {1, w, w^2}
  LElem col0 = u;
  LElem col1 = lmul(m, u, {RatFn::zero(m.field()), RatFn::one(m.field()),
                           RatFn::zero(m.field())});
  LElem col2 = lmul(m, u, {RatFn::zero(m.field()), RatFn::zero(m.field()),
                           RatFn::one(m.field())});
  const RatFn& m00 = col0.a0;
  const RatFn& m10 = col0.a1;
  const RatFn& m20 = col0.a2;
  const RatFn& m01 = col1.a0;
  const RatFn& m11 = col1.a1;
  const RatFn& m21 = col1.a2;
  const RatFn& m02 = col2.a0;
  const RatFn& m12 = col2.a1;
  const RatFn& m22 = col2.a2;
  CharPoly cp;
  cp.e1 = m00 + m11 + m22;
  cp.e2 = (m00 * m11 - m01 * m10) + (m00 * m22 - m02 * m20) +
          (m11 * m22 - m12 * m21);
  cp.e3 = m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) +
          m02 * (m10 * m21 - m11 * m20);
  return cp;
}

bool is_integral(const CubicModel& m, const LElem& u) {
  CharPoly cp = char_poly_elem(m, u);
  return cp.e1.is_poly() && cp.e2.is_poly() && cp.e3.is_poly();
}

namespace {

// all monic divisors built from a factor list, capped
void monic_divisors(const Field& f, const std::vector<std::pair<Poly, int>>& factors,
                    std::size_t idx, const Poly& cur, std::vector<Poly>& out,
                    std::uint64_t cap) {
  require(out.size() < cap, errc::budget_exceeded, "divisor enumeration too large");
  if (idx == factors.size()) {
    out.push_back(cur);
    return;
  }
  Poly step = cur;
  for (int e = 0; e <= factors[idx].second; ++e) {
    monic_divisors(f, factors, idx + 1, step, out, cap);
    if (e < factors[idx].second) step = step * factors[idx].first;
  }
}

Poly lcm(const Poly& a, const Poly& b) { return ((a * b) / gcd(a, b)).monic(); }

}  // namespace

std::vector<RatFn> ratfn_poly_roots(const std::vector<RatFn>& coeffs,
                                    std::uint64_t seed, std::uint64_t budget) {
  require(!coeffs.empty(), errc::zero_polynomial, "root search needs coefficients");
  const Field& f = coeffs.front().field();
  std::vector<RatFn> work = coeffs;
  while (!work.empty() && work.back().is_zero()) work.pop_back();
  require(!work.empty(), errc::zero_polynomial, "root search on the zero polynomial");
  std::vector<RatFn> roots;
  if (work.size() == 1) return roots;

  Poly den = Poly::one(f);
  for (const RatFn& c : work) den = lcm(den, c.den());
  std::vector<Poly> cleared;
  cleared.reserve(work.size());
  for (const RatFn& c : work) cleared.push_back((c * RatFn(den)).num());
  // strip trailing zero coefficients: each contributes the root 0 once
  std::size_t shift = 0;
  while (cleared[shift].is_zero()) ++shift;
  if (shift > 0) {
    roots.push_back(RatFn::zero(f));
    cleared.erase(cleared.begin(), cleared.begin() + static_cast<long>(shift));
  }
  if (cleared.size() == 1) return roots;
  Poly content = cleared.front();
  for (const Poly& c : cleared) content = gcd(content, c);
  if (content.degree() >= 1)
    for (Poly& c : cleared) c = c / content;

  // a root n/d in lowest terms has d | lead and n | constant, up to units
  std::vector<Poly> nums, dens;
  monic_divisors(f, factor(cleared.front(), seed).factors, 0, Poly::one(f), nums,
                 budget);
  monic_divisors(f, factor(cleared.back(), seed).factors, 0, Poly::one(f), dens,
                 budget);
  require(nums.size() * dens.size() * (f.order() - 1) <= budget,
          errc::budget_exceeded, "root candidate count over budget");

  for (const Poly& d : dens) {
    std::vector<Poly> dpow = {Poly::one(f)};
    for (std::size_t i = 1; i < cleared.size(); ++i) dpow.push_back(dpow.back() * d);
    for (const Poly& nm : nums) {
      if (gcd(nm, d).degree() >= 1) continue;
      for (std::uint64_t ui = 1; ui < f.order(); ++ui) {
        Poly n = nm.scaled(f.elem_at(ui));
        // sum_k A_k n^k d^(deg - k) = 0
        Poly val = Poly::zero(f);
        Poly npow = Poly::one(f);
        for (std::size_t k = 0; k < cleared.size(); ++k) {
          val = val + cleared[k] * npow * dpow[cleared.size() - 1 - k];
          npow = npow * n;
        }
        if (val.is_zero()) roots.emplace_back(n, d);
      }
    }
  }
  return roots;
}

std::optional<RatFn> cubic_rational_root(const CubicModel& m, std::uint64_t seed,
                                         std::uint64_t budget) {
  std::vector<RatFn> roots = ratfn_poly_roots(
      {m.c0, m.c1, m.c2, RatFn::one(m.field())}, seed, budget);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

bool cubic_irreducible(const CubicModel& m, std::uint64_t seed, std::uint64_t budget) {
  return !cubic_rational_root(m, seed, budget).has_value();
}

namespace {

std::optional<Poly> poly_sqrt(const Poly& a, std::uint64_t seed) {
  const Field& f = a.field();
  if (!f.is_square(a.lead())) return std::nullopt;
  Poly r = Poly::constant(f, f.sqrt(a.lead()));
  for (const auto& [prime, e] : factor(a.monic(), seed).factors) {
    if (e % 2 != 0) return std::nullopt;
    r = r * prime.pow(static_cast<unsigned>(e / 2));
  }
  return r;
}

}  // namespace

std::optional<RatFn> ratfn_sqrt(const RatFn& f, std::uint64_t seed) {
  if (f.is_zero()) return f;
  auto n = poly_sqrt(f.num(), seed);
  if (!n) return std::nullopt;
  auto d = poly_sqrt(f.den(), seed);
  if (!d) return std::nullopt;
  return RatFn(*n, *d);
}

}  // namespace cubic
