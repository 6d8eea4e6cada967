#include "cubicbasis/disc_index.hpp"

#include <algorithm>

namespace cubic {

IdealFactored IdealFactored::from_poly(const Poly& a, std::uint64_t seed) {
  require(!a.is_zero(), errc::zero_input, "the zero ideal is not representable");
  IdealFactored out;
  out.factors = factor(a, seed).factors;  // already sorted, exponents > 0
  return out;
}

Poly IdealFactored::generator(const Field& f) const {
  Poly g = Poly::one(f);
  for (const auto& [prime, e] : factors) g = g * prime.pow(static_cast<unsigned>(e));
  return g;
}

IdealFactored IdealFactored::times(const IdealFactored& o) const {
  IdealFactored out;
  auto it = factors.begin();
  auto jt = o.factors.begin();
  while (it != factors.end() || jt != o.factors.end()) {
    if (jt == o.factors.end() ||
        (it != factors.end() && poly_less(it->first, jt->first))) {
      out.factors.push_back(*it++);
    } else if (it == factors.end() || poly_less(jt->first, it->first)) {
      out.factors.push_back(*jt++);
    } else {
      out.factors.emplace_back(it->first, it->second + jt->second);
      ++it, ++jt;
    }
  }
  return out;
}

IdealFactored IdealFactored::power(int e) const {
  require(e >= 0, errc::precondition_violated, "negative ideal power");
  if (e == 0) return one();
  IdealFactored out = *this;
  for (auto& [prime, k] : out.factors) k *= e;
  return out;
}

int IdealFactored::exponent_of(const Poly& prime) const {
  for (const auto& [q, e] : factors)
    if (q == prime) return e;
  return 0;
}

const char* ram_kind_name(RamKind k) noexcept {
  switch (k) {
    case RamKind::total_e3: return "total_e3";
    case RamKind::partial_e2: return "partial_e2";
    case RamKind::wild_data: return "wild_data";
  }
  return "?";
}

Poly delta_of_omega(const DecompPNe3& d) {
  const Field& f = d.alpha.field();
  Poly gbb = d.gamma * d.beta1 * d.beta2;
  Poly c = -(Poly::constant(f, f.from_int(3)) * gbb * gbb);
  Poly e = -(d.alpha_full() * d.beta1 * d.beta1 * d.beta2);
  return cubic_disc(Poly::zero(f), c, e);
}

namespace {

void sort_ideal(IdealFactored& ideal) {
  std::sort(ideal.factors.begin(), ideal.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
}

}  // namespace

DiscReport disc_index_podd(const DecompPNe3& d, std::uint64_t seed) {
  const Field& f = d.alpha.field();
  require(f.p() >= 5, errc::wrong_characteristic, "closed form needs p >= 5");

  Poly beta = d.beta();
  Poly af = d.alpha_full();
  Poly four = Poly::constant(f, f.from_int(4));
  Poly core = four * d.gamma.pow(6) * beta * beta - af * af;
  require(!core.is_zero(), errc::degenerate_input,
          "4*gamma^6*beta^2 = alpha^2: the cubic is not separable over the base");

  // core = unit * eta1 * eta2^2 with eta1 squarefree: split each prime
  // multiplicity e as (e mod 2) + 2*(e/2)
  Poly eta1 = Poly::one(f);
  Poly eta2 = Poly::one(f);
  for (const auto& [prime, e] : factor(core, seed).factors) {
    if (e % 2 == 1) eta1 = eta1 * prime;
    if (e / 2 > 0) eta2 = eta2 * prime.pow(static_cast<unsigned>(e / 2));
  }

  DiscReport rep;
  rep.delta_omega = delta_of_omega(d);
  rep.disc = IdealFactored::from_poly(d.beta1 * d.beta2, seed).power(2).times(
      IdealFactored::from_poly(eta1, seed));
  rep.index = IdealFactored::from_poly(d.beta1 * eta2, seed);
  rep.eta = std::make_pair(eta1, eta2);
  rep.ram = ram_classify_pne3(d, rep);
  return rep;
}

DiscReport disc_index_p2(const DecompPNe3& d, const RatFn& a, std::uint64_t seed) {
  const Field& f = d.alpha.field();
  require(f.p() == 2, errc::wrong_characteristic, "closed form needs p = 2");

  // resolvent Artin-Schreier parameter 1/a^2 + 1; its reduced form decides
  // which places over alpha ramify and with which jump ell
  RatFn b0 = a.pow(-2) + RatFn(Poly::one(f));
  ASReduction red = hasse_reduce(b0, seed);

  std::vector<std::pair<Place, int>> ell;
  IdealFactored wild;
  IdealFactored index_part;
  for (const auto& [prime, valpha] : factor(d.alpha, seed).factors) {
    int l = -1;  // unramified unless the reduced parameter still has a pole
    for (const auto& [rplace, rorder] : red.ramified)
      if (rplace.prime() == prime) l = rorder;
    ell.emplace_back(Place::unchecked(prime), l);
    require((l + 1) % 2 == 0, errc::internal_inconsistency,
            "even ramification jump at " + prime.str());
    if (l >= 0) wild.factors.emplace_back(prime, l + 1);
    int ie = valpha - (l + 1) / 2;
    require(ie >= 0, errc::internal_inconsistency,
            "negative index exponent at " + prime.str());
    if (ie > 0) index_part.factors.emplace_back(prime, ie);
  }
  // every surviving pole of the reduced parameter must sit over alpha
  for (const auto& [rplace, rorder] : red.ramified)
    require(multiplicity(d.alpha, rplace.prime()) > 0, errc::internal_inconsistency,
            "ramified place away from alpha: " + rplace.prime().str());
  sort_ideal(wild);
  sort_ideal(index_part);

  DiscReport rep;
  rep.delta_omega = delta_of_omega(d);
  rep.disc = IdealFactored::from_poly(d.beta1 * d.beta2, seed).power(2).times(wild);
  rep.index = IdealFactored::from_poly(d.beta1, seed).times(index_part);
  rep.ell = std::move(ell);
  rep.resolvent = std::move(red);
  rep.ram = ram_classify_pne3(d, rep);
  return rep;
}

DiscReport disc_p3(const DecompP3& d, std::uint64_t seed) {
  const Field& f = d.beta.field();
  require(f.p() == 3, errc::wrong_characteristic, "closed form needs p = 3");

  // omega = beta*z is integral with X^3 + b*beta^2 X + b^2*beta^3
  Poly bb2 = (d.xi1 * d.xi2 * d.xi2 * d.beta).scaled(d.unit);
  Poly bb3 = (d.xi1 * d.xi1 * d.xi2.pow(4) * d.beta).scaled(f.mul(d.unit, d.unit));

  DiscReport rep;
  rep.delta_omega = cubic_disc(Poly::zero(f), bb2, bb3);
  rep.disc = IdealFactored::from_poly(d.xi1, seed);
  IdealFactored wild;
  IdealFactored index_part;
  for (const auto& [place, l] : d.places) {
    wild.factors.emplace_back(place.prime(), l + 2);
    if (l > 1) index_part.factors.emplace_back(place.prime(), l - 1);
    rep.ell.emplace_back(place, l);
  }
  sort_ideal(wild);
  sort_ideal(index_part);
  rep.disc = rep.disc.times(wild);
  rep.index = IdealFactored::from_poly(d.xi1 * d.xi2.pow(3), seed).times(index_part);
  rep.ram = ram_classify_p3(d);
  return rep;
}

std::vector<std::pair<Place, RamKind>> ram_classify_pne3(const DecompPNe3& d,
                                                         const DiscReport& report) {
  std::vector<std::pair<Place, RamKind>> out;
  for (const auto& [prime, e] : factor(d.beta1 * d.beta2).factors)
    out.emplace_back(Place::unchecked(prime), RamKind::total_e3);
  if (report.eta) {
    for (const auto& [prime, e] : factor(report.eta->first).factors)
      out.emplace_back(Place::unchecked(prime), RamKind::partial_e2);
  } else {
    for (const auto& [place, l] : report.ell)
      if (l >= 0) out.emplace_back(place, RamKind::wild_data);
  }
  return out;
}

std::vector<std::pair<Place, RamKind>> ram_classify_p3(const DecompP3& d) {
  std::vector<std::pair<Place, RamKind>> out;
  for (const auto& [prime, e] : factor(d.xi1).factors)
    out.emplace_back(Place::unchecked(prime), RamKind::partial_e2);
  // denominator places are totally (and wildly) ramified: e = 3 = p
  for (const auto& [place, l] : d.places) out.emplace_back(place, RamKind::total_e3);
  return out;
}

}  // namespace cubic
