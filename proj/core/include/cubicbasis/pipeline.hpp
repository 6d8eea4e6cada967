#pragma once

#include "cubicbasis/standard_form.hpp"
#include "cubicbasis/verify.hpp"

namespace cubic {

struct JobSpec {
  enum class Mode { coeff_a, coeff_b, general_cubic };

  Field field;
  Mode mode = Mode::coeff_a;
  RatFn coeff;                 // a (p != 3) or b (p = 3)
  std::array<RatFn, 3> cubic;  // general_cubic: b, c, d of X^3+bX^2+cX+d
  VerifyLevel level = VerifyLevel::full;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1u << 16;
};

struct Report {
  CubicParams params;
  TriBasis basis;
  VerifyReport verdicts;
  std::optional<Char3Form> reduction3;  // p = 3 standard-form preprocessing
  RatFn normalized_coeff;               // coefficient actually used
  double elapsed_sec = 0;
};

/// Depress X^3 + bX^2 + cX + d (p >= 5; in char 2, b must already be zero)
/// and rescale to the standard coefficient a of y^3 - 3y - a. Only possible
/// when -c/3 of the depressed form is a square in F_q(x).
RatFn reduce_general_cubic(const RatFn& b, const RatFn& c, const RatFn& d,
                           std::uint64_t seed = 0);

Report run_pipeline(const JobSpec& job);

}  // namespace cubic
