// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cubicbasis/pipeline.hpp"

using namespace cubic;

namespace {

constexpr std::uint64_t kBudget = 1u << 16;

struct Crit {
  const char* title;
  long checks = 0;
  int fails = 0;
  std::vector<std::string> notes;

  explicit Crit(const char* t) : title(t) {}
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++fails;
      if (fails <= 5) notes.push_back(what);
    }
  }
  bool report(int number) const {
    std::printf("criterion %d: %s — %s (%ld checks, %d failures)\n", number,
                fails == 0 ? "PASS" : "FAIL", title, checks, fails);
    for (const auto& n : notes) std::printf("    detail: %s\n", n.c_str());
    std::fflush(stdout);
    return fails == 0;
  }
};

Poly nonzero_poly(const Field& f, int deg, Rng& rng) {
  for (;;) {
    Poly p = random_poly(f, deg, rng);
    if (!p.is_zero()) return p;
  }
}

RatFn random_coeff(const Field& f, Rng& rng) {
  for (;;) {
    RatFn r(random_poly(f, 6, rng), nonzero_poly(f, 6, rng));
    if (!r.is_zero()) return r;
  }
}

bool feasible(const Field& f, int deg) {
  long double qd = std::pow(static_cast<long double>(f.order()), deg);
  return qd * qd + qd + 1 <= static_cast<long double>(kBudget);
}

// core certification: verdicts all good and every budget-feasible index prime
// confirmed maximal by the enumeration oracle
void check_certified(Crit& c, const Report& rep, const std::string& tag) {
  c.check(rep.verdicts.integral, tag + ": integrality");
  c.check(rep.verdicts.closed, tag + ": multiplicative closure");
  c.check(rep.verdicts.disc_match, tag + ": discriminant match");
  const Field& f = rep.params.field();
  for (const auto& [prime, e] : rep.params.report.index.factors) {
    if (!feasible(f, prime.degree())) continue;
    bool found = false, good = false;
    for (const auto& [p2, ok] : rep.verdicts.pmax)
      if (p2 == prime) found = true, good = ok;
    c.check(found && good, tag + ": maximality at " + prime.str());
  }
}

Report run_one(const Field& f, JobSpec::Mode mode, const RatFn& coeff,
               std::uint64_t seed) {
  JobSpec job;
  job.field = f;
  job.mode = mode;
  job.coeff = coeff;
  job.level = VerifyLevel::full;
  job.seed = seed;
  job.budget = kBudget;
  return run_pipeline(job);
}

// collects `want` verified reports over random coefficients
void fuzz(Crit& c, const Field& f, JobSpec::Mode mode, int want, Rng& rng,
          std::vector<Report>& sink, const std::string& tag) {
  int done = 0, attempts = 0;
  while (done < want && attempts < want * 30) {
    ++attempts;
    RatFn coeff = random_coeff(f, rng);
    try {
      sink.push_back(run_one(f, mode, coeff, static_cast<std::uint64_t>(attempts)));
    } catch (const Error& e) {
      bool benign = e.code() == errc::degenerate_input ||
                    e.code() == errc::reducible_cubic ||
                    e.code() == errc::reducible_input ||
                    e.code() == errc::not_standard_form ||
                    e.code() == errc::zero_input;
      if (!benign)
        c.check(false, tag + ": unexpected error " + std::string(errc_name(e.code())) +
                           " for " + coeff.str());
      continue;
    }
    ++done;
    check_certified(c, sink.back(), tag + " " + coeff.str());
  }
  c.check(done >= want, tag + ": only " + std::to_string(done) + " instances built");
}

bool eq2_holds(const DiscReport& rep) {
  return IdealFactored::from_poly(rep.delta_omega.monic()) ==
         rep.index.power(2).times(rep.disc);
}

}  // namespace

// ---------------------------------------------------------------------------

static bool criterion1(std::vector<Report>& all) {
  Crit c("fuzz certification, p >= 5 (q = 5, 7, 25)");
  for (auto spec : {std::pair<std::uint64_t, unsigned>{5, 1}, {7, 1}, {5, 2}}) {
    Field f = Field::make(spec.first, spec.second);
    Rng rng(1000 + spec.first * 10 + spec.second);
    fuzz(c, f, JobSpec::Mode::coeff_a, 200, rng, all,
         "q=" + std::to_string(f.order()));
  }
  return c.report(1);
}

static bool criterion2(std::vector<Report>& all) {
  Crit c("fuzz certification, p = 2, Galois and non-Galois branches");
  for (auto spec : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 2}}) {
    Field f = Field::make(spec.first, spec.second);
    Rng rng(2000 + spec.second);
    std::string tag = "q=" + std::to_string(f.order());
    std::size_t first = all.size();
    fuzz(c, f, JobSpec::Mode::coeff_a, 150, rng, all, tag);
    int galois = 0, nongalois = 0;
    auto tally = [&](const Report& rep) {
      if (rep.params.branch == Branch::p2_galois) ++galois;
      if (rep.params.branch == Branch::p2_nongalois) ++nongalois;
    };
    for (std::size_t i = first; i < all.size(); ++i) tally(all[i]);
    // engineered Galois coefficients: a = 1/(s^2+s+1) makes the quadratic
    // resolvent parameter an Artin-Schreier image
    int extra = 0;
    while (galois < 25 && extra < 200) {
      ++extra;
      Poly s = random_poly(f, 3, rng);
      Poly den = s * s + s + Poly::one(f);
      if (den.is_zero()) continue;  // s^2+s+1 vanishes for cube roots of unity
      RatFn a(Poly::one(f), den);
      try {
        all.push_back(run_one(f, JobSpec::Mode::coeff_a, a, 77 + extra));
      } catch (const Error&) {
        continue;
      }
      tally(all.back());
      check_certified(c, all.back(), tag + " engineered " + a.str());
      c.check(all.back().params.branch == Branch::p2_galois,
              tag + ": engineered coefficient not Galois: " + a.str());
    }
    c.check(galois >= 20, tag + ": only " + std::to_string(galois) + " Galois");
    c.check(nongalois >= 20,
            tag + ": only " + std::to_string(nongalois) + " non-Galois");
    // branch-specific assertions on everything built for this field
    for (std::size_t i = first; i < all.size(); ++i) {
      const Report& rep = all[i];
      if (rep.basis.tv) {
        c.check(t_congruence_mod_I(rep.params, rep.basis.tv->first),
                tag + ": first congruence on T");
        c.check(t_congruence_mod_I2(rep.params, rep.basis.tv->first),
                tag + ": second congruence on T");
      } else {
        c.check(false, tag + ": basis carries no (T, V) data");
      }
      for (const auto& [place, ell] : rep.params.report.ell)
        c.check(ell == -1 || ell % 2 == 1,
                tag + ": even ramification jump " + std::to_string(ell));
    }
  }
  return c.report(2);
}

static bool criterion3(std::vector<Report>& all) {
  Crit c("fuzz certification, p = 3, raw coefficients through standard form");
  for (auto spec : {std::pair<std::uint64_t, unsigned>{3, 1}, {3, 2}}) {
    Field f = Field::make(spec.first, spec.second);
    Rng rng(3000 + spec.second);
    std::string tag = "q=" + std::to_string(f.order());
    std::size_t first = all.size();
    fuzz(c, f, JobSpec::Mode::coeff_b, 200, rng, all, tag);
    for (std::size_t i = first; i < all.size(); ++i) {
      const Report& rep = all[i];
      // denominator exponent identity for every ramification jump
      for (const auto& [place, ell] : rep.params.report.ell)
        c.check(2 + (2 * ell) / 3 + (4 * ell) / 3 == 2 * ell + 1,
                tag + ": exponent identity at jump " + std::to_string(ell));
      // the coefficient actually used is in standard form at all finite places
      if (!rep.normalized_coeff.is_zero())
        for (const auto& [prime, e] : factor(rep.normalized_coeff.den()).factors)
          c.check(e % 3 != 0, tag + ": pole order divisible by 3 survived");
    }
  }
  return c.report(3);
}

static bool criterion4(const std::vector<Report>& all) {
  Crit c("discriminant-index identity (Delta(omega)) = Ind^2 * disc");
  for (const Report& rep : all)
    c.check(eq2_holds(rep.params.report),
            "identity fails for " + rep.params.coeff.str());
  return c.report(4);
}

static bool criterion5() {
  Crit c("worked-instance regressions");

  {  // GF(5), a = 1/x
    Field f = Field::make(5);
    Poly x = Poly::x(f);
    Report rep = run_one(f, JobSpec::Mode::coeff_a, RatFn(Poly::one(f), x), 0);
    c.check(rep.verdicts.ok(), "GF(5) a=1/x: verification");
    c.check(rep.params.report.disc.generator(f) == x * x * (x * x + Poly::one(f)),
            "GF(5) a=1/x: discriminant");
    c.check(rep.params.report.index.generator(f) == x, "GF(5) a=1/x: index");
    c.check(rep.basis.elems[1].c1 == x && rep.basis.elems[1].den.is_one(),
            "GF(5) a=1/x: second element");
    c.check(rep.basis.elems[2].c2 == x && rep.basis.elems[2].c1.is_zero() &&
                rep.basis.elems[2].c0.is_zero() && rep.basis.elems[2].den.is_one(),
            "GF(5) a=1/x: third element");
  }
  {  // GF(3), b = 1/x
    Field f = Field::make(3);
    Poly x = Poly::x(f);
    Report rep = run_one(f, JobSpec::Mode::coeff_b, RatFn(Poly::one(f), x), 0);
    c.check(rep.verdicts.ok(), "GF(3) b=1/x: verification");
    c.check(rep.params.report.disc.generator(f) == x.pow(3), "GF(3) b=1/x: disc");
    c.check(rep.basis.elems[1].c1 == x && rep.basis.elems[1].den.is_one(),
            "GF(3) b=1/x: second element");
    c.check(rep.basis.elems[2].c2 == x * x && rep.basis.elems[2].den.is_one(),
            "GF(3) b=1/x: third element");
  }
  {  // GF(3), b = x; z^2/x satisfies u^3 - u^2 + u - x
    Field f = Field::make(3);
    Poly x = Poly::x(f);
    Report rep = run_one(f, JobSpec::Mode::coeff_b, RatFn(x), 0);
    c.check(rep.verdicts.ok(), "GF(3) b=x: verification");
    c.check(rep.params.report.disc.generator(f) == x, "GF(3) b=x: disc");
    c.check(rep.basis.elems[2].c2.is_one() && rep.basis.elems[2].den == x,
            "GF(3) b=x: third element z^2/x");
    CharPoly cp = char_poly_elem(
        rep.params.frame,
        LElem{RatFn::zero(f), RatFn::zero(f), RatFn(Poly::one(f), x)});
    c.check(cp.e1 == RatFn::one(f) && cp.e2 == RatFn::one(f) && cp.e3 == RatFn(x),
            "GF(3) b=x: minimal cubic of z^2/x");
  }
  {  // GF(2), a = x
    Field f = Field::make(2);
    Poly x = Poly::x(f);
    Report rep = run_one(f, JobSpec::Mode::coeff_a, RatFn(x), 0);
    c.check(rep.verdicts.ok(), "GF(2) a=x: verification");
    c.check(rep.params.report.disc.generator(f) == x * x, "GF(2) a=x: disc");
    c.check(rep.params.report.index.is_one(), "GF(2) a=x: trivial index");
    c.check(rep.basis.elems[1].c1.is_one() && rep.basis.elems[2].c2.is_one() &&
                rep.basis.elems[2].den.is_one(),
            "GF(2) a=x: power basis");
    // the resolvent parameter 1/x^2 + 1 reduces to 1/x + 1 with jump 1 at x
    RatFn b0 = RatFn(Poly::one(f), x * x) + RatFn::one(f);
    ASReduction red = hasse_reduce(b0);
    c.check(red.b_std == RatFn(Poly::one(f), x) + RatFn::one(f),
            "GF(2) a=x: reduced resolvent parameter");
    bool jump = false;
    for (const auto& [place, ell] : rep.params.report.ell)
      if (place.prime() == x && ell == 1) jump = true;
    c.check(jump, "GF(2) a=x: jump 1 at x");
  }
  return c.report(5);
}

static bool criterion6(const std::vector<Report>& all) {
  Crit c("enumeration oracle against the index formulas on the power basis");
  for (const Report& rep : all) {
    const Field& f = rep.params.field();
    TriBasis naive = power_basis(rep.params.frame, rep.params.omega_scale);
    // index primes: the power basis must fail maximality there
    for (const auto& [prime, e] : rep.params.report.index.factors) {
      if (!feasible(f, prime.degree())) continue;
      c.check(!pmax_oracle(naive, Place::unchecked(prime), kBudget),
              "power basis looks maximal at index prime " + prime.str());
    }
    // discriminant primes away from the index: the power basis is maximal
    IdealFactored delta =
        IdealFactored::from_poly(rep.params.report.delta_omega.monic());
    int used = 0;
    for (const auto& [prime, e] : delta.factors) {
      if (used >= 3) break;
      if (rep.params.report.index.exponent_of(prime) != 0) continue;
      if (!feasible(f, prime.degree())) continue;
      ++used;
      c.check(pmax_oracle(naive, Place::unchecked(prime), kBudget),
              "power basis not maximal at non-index prime " + prime.str());
    }
  }
  return c.report(6);
}

static bool criterion7() {
  Crit c("standard-form algorithm properties");
  // 500 random characteristic-2 reductions
  for (auto spec : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 2}}) {
    Field f = Field::make(spec.first, spec.second);
    Rng rng(7000 + spec.second);
    for (int i = 0; i < 250; ++i) {
      RatFn b(random_poly(f, 6, rng), nonzero_poly(f, 6, rng));
      ASReduction r = hasse_reduce(b, i);
      c.check(r.b_std == b + r.shift * r.shift + r.shift, "reduction identity");
      if (!r.b_std.is_zero())
        for (const auto& [prime, e] : factor(r.b_std.den()).factors)
          c.check(e % 2 == 1, "even pole order survived");
      ASReduction r2 = hasse_reduce(r.b_std, i);
      c.check(r2.b_std == r.b_std && r2.shift.is_zero(), "idempotence");
    }
  }
  // 200 engineered characteristic-3 inputs with pole orders 3, 6, 9
  Field f3 = Field::make(3);
  Poly pool[3] = {Poly::x(f3), Poly::from_ints(f3, {1, 1}),
                  Poly::from_ints(f3, {1, 0, 1})};
  Rng rng(7300);
  int built = 0;
  for (int i = 0; built < 200 && i < 2000; ++i) {
    Poly den = Poly::one(f3);
    int bound = 0;
    for (int k = 0; k < 3; ++k) {
      if (rng() % 2 == 0) continue;
      int v = 3 * static_cast<int>(1 + rng() % 3);  // 3, 6, or 9
      den = den * pool[k].pow(static_cast<unsigned>(v));
      bound += v;
    }
    if (bound == 0) continue;
    Poly num = nonzero_poly(f3, 3, rng);
    if (!gcd(num, den).is_one()) continue;
    Char3Form form;
    try {
      form = char3_standard_form(RatFn(num, den), i);
    } catch (const Error& e) {
      c.check(e.code() == errc::reducible_input, "unexpected reduction error");
      continue;
    }
    ++built;
    c.check(static_cast<int>(form.trace.size()) <= bound,
            "trace longer than the total pole depth");
    if (!form.b.is_zero())
      for (const auto& [prime, e] : factor(form.b.den()).factors)
        c.check(e % 3 != 0, "pole order divisible by 3 survived");
  }
  c.check(built == 200, "not enough engineered inputs");
  return c.report(7);
}

static bool criterion8() {
  Crit c("field kernel exhaustives and factorization round-trips");
  // every prime power q <= 81
  std::vector<std::pair<std::uint64_t, unsigned>> fields;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                          47, 53, 59, 61, 67, 71, 73, 79}) {
    std::uint64_t q = p;
    unsigned n = 1;
    while (q <= 81) {
      fields.emplace_back(p, n);
      q *= p;
      ++n;
    }
  }
  for (auto [p, n] : fields) {
    Field f = Field::make(p, n);
    std::uint64_t q = f.order();
    std::uint64_t squares = 0;
    for (std::uint64_t i = 0; i < q; ++i) {
      FElem a = f.elem_at(i);
      c.check(f.frob(a) == f.pow(a, p), "frobenius is the p-th power");
      c.check(f.frob_root(f.frob(a)) == a, "frob_root inverts frob");
      c.check(f.frob(f.frob_root(a)) == a, "frob inverts frob_root");
      if (!f.is_zero(a)) c.check(f.is_one(f.mul(a, f.inv(a))), "inverse");
      if (f.is_square(a)) {
        ++squares;
        FElem s = f.sqrt(a);
        c.check(f.mul(s, s) == a, "sqrt squares back");
      }
    }
    std::uint64_t expect = (p == 2) ? q : (q - 1) / 2 + 1;
    c.check(squares == expect, "square count in GF(" + std::to_string(q) + ")");
  }
  // factorization round-trips, 1000 random polynomials per field
  for (auto spec : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 2}, {2, 3},
                    {2, 4}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2},
                    {7, 1}, {7, 2}}) {
    Field f = Field::make(spec.first, spec.second);
    Rng rng(8000 + spec.first * 16 + spec.second);
    for (int i = 0; i < 1000; ++i) {
      Poly a = nonzero_poly(f, 6, rng);
      Factorization fac = factor(a, i);
      c.check(fac.product(f) == a, "factor product mismatch");
      for (const auto& [prime, e] : fac.factors)
        c.check(e >= 1 && prime.is_monic() && is_irreducible(prime),
                "bad factor");
    }
  }
  return c.report(8);
}

int main() {
  std::vector<Report> all;
  bool ok = true;
  ok &= criterion1(all);
  ok &= criterion2(all);
  ok &= criterion3(all);
  ok &= criterion4(all);
  ok &= criterion5();
  ok &= criterion6(all);
  ok &= criterion7();
  ok &= criterion8();
  std::printf("%s\n", ok ? "ALL ACCEPTANCE CRITERIA PASSED"
                         : "ACCEPTANCE FAILURES PRESENT");
  return ok ? 0 : 1;
}
