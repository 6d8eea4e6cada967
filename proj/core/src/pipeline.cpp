#include "cubicbasis/pipeline.hpp"

#include <chrono>

namespace cubic {

RatFn reduce_general_cubic(const RatFn& b, const RatFn& c, const RatFn& d,
                           std::uint64_t seed) {
  const Field& f = b.field();
  require(f.p() != 3, errc::wrong_characteristic,
          "general-cubic reduction needs p != 3");
  CubicModel m{b, c, d};
  require(!m.disc().is_zero(), errc::reducible_cubic, "cubic has a repeated root");
  require(cubic_irreducible(m, seed), errc::reducible_cubic,
          "cubic has a root in F_q(x)");

  RatFn c1 = c, d1 = d;
  if (f.p() == 2) {
    require(b.is_zero(), errc::not_reducible_here,
            "char-2 input must already be depressed (no X^2 term)");
  } else {
    RatFn third = RatFn(Poly::from_ints(f, {3})).inverse();
    c1 = c - b * b * third;
    d1 = d - b * c * third + b * b * b * third * third * RatFn(Poly::from_ints(f, {2}));
  }
  require(!c1.is_zero(), errc::pure_cubic,
          "depressed cubic is X^3 + d: pure cubic extensions are out of scope");
  RatFn s2 = -(c1 * RatFn(Poly::from_ints(f, {3})).inverse());
  auto u = ratfn_sqrt(s2, seed);
  require(u.has_value(), errc::not_reducible_here,
          "-c/3 of the depressed cubic is not a square in F_q(x)");
  return -(d1 / (*u * *u * *u));
}

Report run_pipeline(const JobSpec& job) {
  auto start = std::chrono::steady_clock::now();
  const Field& f = job.field;
  require(f.valid(), errc::usage_error, "no field given");

  RatFn coeff;
  switch (job.mode) {
    case JobSpec::Mode::coeff_a:
      require(f.p() != 3, errc::usage_error, "p = 3 requires the b coefficient");
      coeff = job.coeff;
      break;
    case JobSpec::Mode::coeff_b:
      require(f.p() == 3, errc::usage_error, "the b coefficient is for p = 3");
      coeff = job.coeff;
      break;
    case JobSpec::Mode::general_cubic:
      require(f.p() != 3, errc::usage_error,
              "general-cubic input is supported for p != 3 only");
      coeff = reduce_general_cubic(job.cubic[0], job.cubic[1], job.cubic[2], job.seed);
      break;
  }

  Report rep;
  if (f.p() == 3) {
    rep.reduction3 = char3_standard_form(coeff, job.seed);
    coeff = rep.reduction3->b;
  }
  rep.normalized_coeff = coeff;
  rep.params = make_params(coeff, job.seed);
  rep.basis = build_basis(rep.params, job.seed);
  rep.verdicts = certify(rep.basis, rep.params.report, job.level, job.seed, job.budget);

  if (job.level == VerifyLevel::paranoid && rep.reduction3) {
    RatFn cur = job.coeff;
    for (const auto& step : rep.reduction3->trace) {
      CubicModel before{RatFn::zero(f), cur, cur * cur};
      CubicModel after{RatFn::zero(f), step.a_next, step.a_next * step.a_next};
      try {
        rep.verdicts.model_chain.push_back(
            same_field_check(before, after, job.seed));
      } catch (const Error& e) {
        if (e.code() != errc::budget_exceeded) throw;
        // over budget: skip rather than fail the run
      }
      cur = step.a_next;
    }
  }

  rep.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace cubic
