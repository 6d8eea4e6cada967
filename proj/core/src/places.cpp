#include "cubicbasis/places.hpp"

#include <algorithm>

namespace cubic {

Place::Place(const Poly& prime) {
  require(prime.degree() >= 1 && prime.is_monic() && is_irreducible(prime),
          errc::reducible_input, "place must be a monic irreducible");
  prime_ = prime;
}

Place Place::unchecked(const Poly& prime) {
  Place p;
  p.prime_ = prime;
  return p;
}

int val_at(const RatFn& f, const Place& p) {
  if (f.is_zero()) return kValInfinity;
  // num and den are coprime, so at most one of the two counts is nonzero
  int vn = multiplicity(f.num(), p.prime());
  if (vn > 0) return vn;
  return -multiplicity(f.den(), p.prime());
}

Poly residue_at(const RatFn& f, const Place& p, int k) {
  require(k >= 1, errc::zero_input, "residue precision must be >= 1");
  Poly mod = p.prime().pow(static_cast<unsigned>(k));
  Poly dres = f.den() % mod;
  require(gcd(f.den(), p.prime()).degree() == 0, errc::precondition_violated,
          "negative valuation at the residue place");
  return (f.num() * mod_inverse(dres, mod)) % mod;
}

Poly residue_pth_root(const Poly& a, const Place& p) {
  const Field& f = a.field();
  // |k(p)| = q^deg = p^(n*deg); the inverse of Frobenius is x -> x^(|k|/p)
  unsigned steps = f.n() * static_cast<unsigned>(p.degree());
  Poly r = a % p.prime();
  for (unsigned i = 0; i + 1 < steps; ++i) r = powmod(r, f.p(), p.prime());
  return r;
}

Poly residue_sqrt_char2(const Poly& a, const Place& p) {
  require(a.field().p() == 2, errc::wrong_characteristic, "needs p = 2");
  unsigned steps = a.field().n() * static_cast<unsigned>(p.degree());
  Poly r = a % p.prime();
  for (unsigned i = 0; i + 1 < steps; ++i) r = (r * r) % p.prime();
  return r;
}

RatFn DecompPNe3::reassemble() const {
  Poly num = alpha.scaled(unit);
  Poly den = gamma.pow(3) * beta1 * beta2 * beta2;
  return RatFn(num, den);
}

DecompPNe3 decompose_pne3(const RatFn& a, std::uint64_t seed) {
  require(!a.is_zero(), errc::zero_input, "cannot decompose zero");
  const Field& f = a.field();
  DecompPNe3 d{Poly::one(f), Poly::one(f), Poly::one(f), Poly::one(f),
               a.num().lead()};
  d.alpha = a.num().monic();
  for (const auto& [prime, e] : factor(a.den(), seed).factors) {
    int k = e / 3, r = e % 3;
    if (k > 0) d.gamma = d.gamma * prime.pow(static_cast<unsigned>(k));
    if (r == 1) d.beta1 = d.beta1 * prime;
    if (r == 2) d.beta2 = d.beta2 * prime;
  }
  return d;
}

RatFn DecompP3::reassemble() const {
  return RatFn((xi1 * xi2 * xi2).scaled(unit), beta);
}

DecompP3 decompose_p3(const RatFn& b, std::uint64_t seed) {
  require(!b.is_zero(), errc::zero_input, "cannot decompose zero");
  const Field& f = b.field();
  DecompP3 d{Poly::one(f), Poly::one(f), Poly::one(f), b.num().lead(), {}};
  for (const auto& [prime, e] : factor(b.den(), seed).factors) {
    require(e % 3 != 0, errc::not_standard_form,
            "denominator exponent divisible by 3 at " + prime.str());
    d.beta = d.beta * prime.pow(static_cast<unsigned>(e));
    d.places.emplace_back(Place::unchecked(prime), e);
  }
  for (const auto& [prime, e] : factor(b.num(), seed).factors) {
    int k = e / 2, r = e % 2;
    if (k > 0) d.xi2 = d.xi2 * prime.pow(static_cast<unsigned>(k));
    if (r == 1) d.xi1 = d.xi1 * prime;
  }
  return d;
}

RatFn approx_elem(const Field& f, const std::vector<ApproxTarget>& targets) {
  // target places must be pairwise distinct
  std::vector<Poly> seen;
  for (const auto& t : targets) {
    const Poly& pr = std::holds_alternative<ValTarget>(t)
                         ? std::get<ValTarget>(t).place.prime()
                         : std::get<ResidueTarget>(t).place.prime();
    for (const auto& s : seen)
      require(!(s == pr), errc::conflicting_targets,
              "duplicate target place " + pr.str());
    seen.push_back(pr);
  }

  // pole part: exact monomials p^e
  RatFn pole = RatFn::zero(f);
  for (const auto& t : targets)
    if (const auto* vt = std::get_if<ValTarget>(&t)) {
      require(vt->e < 0, errc::conflicting_targets,
              "valuation targets must be negative");
      pole = pole + RatFn(vt->place.prime()).pow(vt->e);
    }

  // congruence part via CRT, with residues corrected for the pole part
  std::vector<std::pair<Poly, Poly>> congruences;
  for (const auto& t : targets)
    if (const auto* rt = std::get_if<ResidueTarget>(&t)) {
      Poly mod = rt->place.prime().pow(static_cast<unsigned>(rt->k));
      Poly want = rt->residue % mod;
      if (!pole.is_zero())
        want = (want - residue_at(pole, rt->place, rt->k)) % mod;
      congruences.emplace_back(want, mod);
    }
  RatFn res = pole;
  if (!congruences.empty()) res = res + RatFn(crt(congruences));
  return res;
}

}  // namespace cubic
