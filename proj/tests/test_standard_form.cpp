#include "cubicbasis/standard_form.hpp"

#include "helpers.hpp"

using namespace cubic;
using cubic::testutil::nonzero_ratfn;
using cubic::testutil::random_ratfn;

namespace {

// every finite pole has odd order
bool all_poles_odd(const RatFn& b) {
  if (b.is_zero()) return true;
  for (const auto& [prime, e] : factor(b.den()).factors)
    if (e % 2 == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("even-pole removal in characteristic 2: worked example") {
  Field f = Field::make(2);
  Poly x = Poly::x(f);
  // b = 1/x^2 + 1 reduces to 1/x + 1 via shift = 1/x
  RatFn b = RatFn(Poly::one(f), x * x) + RatFn::one(f);
  ASReduction r = hasse_reduce(b);
  CHECK(r.b_std == RatFn(Poly::one(f), x) + RatFn::one(f));
  CHECK(r.b_std == b + r.shift * r.shift + r.shift);
  REQUIRE(r.ramified.size() == 1);
  CHECK(r.ramified[0].first.prime() == x);
  CHECK(r.ramified[0].second == 1);
}

TEST_CASE("even-pole removal: random properties and idempotence") {
  for (auto spec : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 2}}) {
    Field f = Field::make(spec.first, spec.second);
    Rng rng(61);
    for (int i = 0; i < 80; ++i) {
      RatFn b = random_ratfn(f, 6, rng);
      ASReduction r = hasse_reduce(b, i);
      // exact identity and odd poles
      CHECK(r.b_std == b + r.shift * r.shift + r.shift);
      CHECK(all_poles_odd(r.b_std));
      for (const auto& [place, ell] : r.ramified) {
        CHECK(ell % 2 == 1);
        CHECK(ell == -val_at(r.b_std, place));
      }
      // a second pass does nothing
      ASReduction r2 = hasse_reduce(r.b_std, i);
      CHECK(r2.b_std == r.b_std);
      CHECK(r2.shift.is_zero());
    }
  }
  Field f5 = Field::make(5);
  CHECK_ERRC(hasse_reduce(RatFn::one(f5)), errc::wrong_characteristic);
}

TEST_CASE("global Artin-Schreier roots") {
  for (auto spec : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 2}}) {
    Field f = Field::make(spec.first, spec.second);
    Rng rng(67);
    for (int i = 0; i < 60; ++i) {
      RatFn w = random_ratfn(f, 5, rng);
      RatFn b = w * w + w;
      auto root = as_root(b, i);
      REQUIRE(root.has_value());
      CHECK(*root * *root + *root == b);
    }
  }
  Field f = Field::make(2);
  Poly x = Poly::x(f);
  CHECK(!as_root(RatFn(x)).has_value());                  // pole at infinity
  CHECK(!as_root(RatFn(Poly::one(f), x)).has_value());    // ramified at x
  CHECK(as_root(RatFn::zero(f)).has_value());
}

TEST_CASE("characteristic-3 place reduction step") {
  Field f = Field::make(3);
  Poly x = Poly::x(f);
  Place px(x);
  RatFn extra(Poly::one(f), Poly::from_ints(f, {1, 1}));
  RatFn a1 = RatFn(Poly::one(f), x.pow(3)) + extra;
  auto [a2, w2] = char3_reduce_place(a1, px, f.one());
  CHECK(val_at(a2, px) > -3);
  CHECK(val_at(a2, Place(Poly::from_ints(f, {1, 1}))) == -1);  // other pole kept
  // precondition: valuation must be negative and divisible by 3
  CHECK_ERRC(char3_reduce_place(RatFn(Poly::one(f), x), px, f.one()),
             errc::precondition_violated);
}

TEST_CASE("characteristic-3 standard form: traces and postconditions") {
  for (auto spec : {std::pair<std::uint64_t, unsigned>{3, 1}, {3, 2}}) {
    Field f = Field::make(spec.first, spec.second);
    Rng rng(71);
    for (int i = 0; i < 60; ++i) {
      RatFn a1 = nonzero_ratfn(f, 5, rng);
      Char3Form form;
      try {
        form = char3_standard_form(a1, i);
      } catch (const Error& e) {
        CHECK(e.code() == errc::reducible_input);
        continue;
      }
      if (form.b.is_zero()) continue;  // collapsed to a trivial coefficient
      // final form: every finite pole order coprime to 3
      for (const auto& [prime, e] : factor(form.b.den()).factors)
        CHECK(e % 3 != 0);
      // the trace walks valuations strictly upward at the treated places
      RatFn cur = a1;
      for (const Char3Step& step : form.trace) {
        int before = val_at(cur, step.place);
        CHECK(before < 0);
        CHECK(before % 3 == 0);
        CHECK(val_at(step.a_next, step.place) > before);
        cur = step.a_next;
      }
      if (!form.trace.empty()) CHECK(form.trace.back().a_next == form.b);
      // already-standard input passes through untouched
      Char3Form again = char3_standard_form(form.b, i);
      CHECK(again.trace.empty());
      CHECK(again.b == form.b);
    }
  }
}

TEST_CASE("characteristic-3 standard form: engineered deep poles") {
  Field f = Field::make(3);
  Poly x = Poly::x(f);
  Poly x1 = Poly::from_ints(f, {1, 1});
  Rng rng(73);
  for (int i = 0; i < 20; ++i) {
    Poly num = cubic::testutil::nonzero_poly(f, 2, rng);
    RatFn a1(num, x.pow(6) * x1.pow(3));
    if (gcd(num, x * x1).is_one()) {
      Char3Form form = char3_standard_form(a1, i);
      CHECK(form.trace.size() <= 9);  // bounded by the total pole depth
      if (!form.b.is_zero())
        for (const auto& [prime, e] : factor(form.b.den()).factors)
          CHECK(e % 3 != 0);
    }
  }
  // non-unit scaling parameter j is honored too
  RatFn deep(Poly::one(f), x.pow(3));
  Char3Form fj = char3_standard_form(deep, f.from_int(2), 7);
  if (!fj.b.is_zero())
    for (const auto& [prime, e] : factor(fj.b.den()).factors) CHECK(e % 3 != 0);
}
