#include "cubicbasis/standard_form.hpp"

#include <map>

namespace cubic {
namespace {

// even-order finite pole of b, if any
std::optional<std::pair<Place, int>> find_even_pole(const RatFn& b, std::uint64_t seed) {
  if (b.is_zero()) return std::nullopt;
  for (const auto& [prime, e] : factor(b.den(), seed).factors)
    if (e % 2 == 0) return std::make_pair(Place::unchecked(prime), e);
  return std::nullopt;
}

std::optional<std::pair<Place, int>> find_bad_place_p3(const RatFn& a, std::uint64_t seed) {
  if (a.is_zero()) return std::nullopt;
  for (const auto& [prime, e] : factor(a.den(), seed).factors)
    if (e % 3 == 0) return std::make_pair(Place::unchecked(prime), e);
  return std::nullopt;
}

}  // namespace

ASReduction hasse_reduce(const RatFn& b, std::uint64_t seed) {
  const Field& f = b.field();
  require(f.p() == 2, errc::wrong_characteristic, "hasse_reduce needs p = 2");
  RatFn cur = b;
  RatFn shift = RatFn::zero(f);
  while (auto pole = find_even_pole(cur, seed)) {
    const auto& [place, order] = *pole;
    int m = order / 2;
    // leading residue of the pole: (cur * p^2m) mod p, a nonzero residue
    RatFn scaled = cur * RatFn(place.prime()).pow(order);
    Poly u = residue_at(scaled, place);
    Poly s = residue_sqrt_char2(u, place);
    RatFn w = RatFn(s) * RatFn(place.prime()).pow(-m);
    cur = cur + w * w + w;
    shift = shift + w;
    require(val_at(cur, place) > -order, errc::postcondition_failed,
            "pole order did not decrease at " + place.prime().str());
  }
  ASReduction out{cur, shift, {}};
  if (!cur.is_zero())
    for (const auto& [prime, e] : factor(cur.den(), seed).factors)
      out.ramified.emplace_back(Place::unchecked(prime), e);
  return out;
}

std::optional<RatFn> as_root(const RatFn& b, std::uint64_t seed) {
  const Field& f = b.field();
  require(f.p() == 2, errc::wrong_characteristic, "as_root needs p = 2");
  ASReduction red = hasse_reduce(b, seed);
  if (!red.ramified.empty()) return std::nullopt;  // finite pole survives
  // b_std is a polynomial; match coefficients from the top
  Poly rest = red.b_std.num();
  Poly w = Poly::zero(f);
  while (rest.degree() >= 1) {
    int d = rest.degree();
    if (d % 2 != 0) return std::nullopt;
    FElem top = f.sqrt(rest.lead());
    Poly term = Poly::constant(f, top).shifted(static_cast<unsigned>(d / 2));
    w = w + term;
    rest = rest + term * term + term;
  }
  // constant part: w0^2 + w0 = c, decided by the absolute trace over GF(2)
  FElem c = rest.coeff(0);
  bool solved = false;
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    FElem cand = f.elem_at(i);
    if (f.add(f.mul(cand, cand), cand) == c) {
      w = w + Poly::constant(f, cand);
      solved = true;
      break;
    }
  }
  if (!solved) return std::nullopt;
  return RatFn(w) + red.shift;
}

std::pair<RatFn, RatFn> char3_reduce_place(const RatFn& a1, const Place& p,
                                           const FElem& j, std::uint64_t seed) {
  const Field& f = a1.field();
  require(f.p() == 3, errc::wrong_characteristic, "char3 reduction needs p = 3");
  require(!f.is_zero(j), errc::precondition_violated, "j must be nonzero");
  int v = val_at(a1, p);
  require(v < 0 && v != kValInfinity && v % 3 == 0, errc::precondition_violated,
          "place must have negative valuation divisible by 3");

  // alpha = p^(2v/3) is its own strong approximation: exact at p, no other poles
  RatFn alpha = RatFn(p.prime()).pow(2 * v / 3);

  // w0: minus the residue of alpha^-3 * j * a1^2 (a p-unit), perturbed if the
  // lift happens to be exact
  RatFn unit_part = alpha.pow(-3) * RatFn(Poly::constant(f, j)) * a1 * a1;
  require(val_at(unit_part, p) == 0, errc::internal_inconsistency,
          "expected a unit at the treated place");
  Poly w0 = -residue_at(unit_part, p);
  if (unit_part + RatFn(w0) == RatFn::zero(f)) w0 = w0 + p.prime();
  require(val_at(unit_part + RatFn(w0), p) > 0, errc::postcondition_failed,
          "w0 does not cancel the residue");

  // w* with (w*)^3 = w0 in the residue field
  Poly wstar = residue_pth_root(w0, p);

  // w1 = w* mod p, = 0 to order v_q(a1) at finite zeros of a1, no other poles
  std::vector<ApproxTarget> targets;
  targets.push_back(ResidueTarget{p, 1, wstar});
  for (const auto& [prime, e] : factor(a1.num(), seed).factors)
    if (!(prime == p.prime()))
      targets.push_back(ResidueTarget{Place::unchecked(prime), e, Poly::zero(f)});
  RatFn w1 = approx_elem(f, targets);

  RatFn w2 = alpha * w1;
  RatFn jf = RatFn(Poly::constant(f, j));
  RatFn inner = jf * a1 * a1 + w2 * w2 * w2 + a1 * w2;
  RatFn a2 = inner * inner / (a1 * a1 * a1);

  // proof obligations, checked on the computed output
  require(val_at(a2, p) > v, errc::postcondition_failed,
          "treated valuation did not increase");
  if (!a2.is_zero()) {
    for (const auto& [prime, e] : factor(a1.den(), seed).factors)
      if (!(prime == p.prime())) {
        Place q = Place::unchecked(prime);
        require(val_at(a2, q) == -e, errc::postcondition_failed,
                "negative valuation not preserved at " + prime.str());
      }
    for (const auto& [prime, e] : factor(a2.den(), seed).factors) {
      if (prime == p.prime()) continue;
      require(multiplicity(a1.den(), prime) > 0, errc::postcondition_failed,
              "new finite pole appeared at " + prime.str());
    }
  }
  return {a2, w2};
}

Char3Form char3_standard_form(const RatFn& a1, const FElem& j,
                              std::uint64_t seed, int iteration_cap) {
  const Field& f = a1.field();
  require(f.p() == 3, errc::wrong_characteristic, "char3 reduction needs p = 3");
  require(!a1.is_zero(), errc::zero_input, "zero generator coefficient");
  Char3Form out{a1, {}};
  int steps = 0;
  while (auto bad = find_bad_place_p3(out.b, seed)) {
    require(++steps <= iteration_cap, errc::iteration_cap,
            "char3 standard form did not converge");
    Place place = bad->first;
    auto [a2, w2] = char3_reduce_place(out.b, place, j, seed);
    // a vanishing coefficient exhibits a rational root of the model
    require(!a2.is_zero(), errc::reducible_input,
            "reduction collapsed the generator coefficient to zero");
    out.trace.push_back(Char3Step{place, w2, a2});
    out.b = a2;
  }
  return out;
}

Char3Form char3_standard_form(const RatFn& a1, std::uint64_t seed) {
  return char3_standard_form(a1, a1.field().one(), seed);
}

}  // namespace cubic
