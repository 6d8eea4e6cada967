#pragma once

#include "cubicbasis/basis.hpp"

namespace cubic {

enum class VerifyLevel { fast, full, paranoid };
const char* verify_level_name(VerifyLevel v) noexcept;

/// det(coords)^2 * disc(frame model), which must come out polynomial;
/// factored and monic-normalized for ideal comparison.
IdealFactored disc_of_basis(const TriBasis& basis, std::uint64_t seed = 0);

/// The module spanned by the basis is closed under multiplication.
bool mult_closed(const TriBasis& basis);

/// Brute-force local maximality at a finite place: true iff no nonzero
/// combination (c0 b0 + c1 b1 + c2 b2)/p with ci residue representatives is
/// integral. One representative per projective class is enumerated, so the
/// candidate count is q^2d + q^d + 1; above `budget` the call refuses.
bool pmax_oracle(const TriBasis& basis, const Place& p, std::uint64_t budget = 1u << 16);

struct VerifyReport {
  bool integral = false;
  bool closed = false;
  bool disc_match = false;
  std::vector<std::pair<Poly, bool>> pmax;  // index primes actually enumerated
  std::vector<Poly> pmax_skipped;           // index primes over budget
  std::vector<bool> model_chain;            // reduction-step field checks

  bool ok() const;
};

/// fast: integrality + closure + discriminant match. full: adds the
/// maximality oracle at every index prime within budget. (The model-chain
/// checks of the paranoid level are driven by the pipeline, which owns the
/// reduction trace.)
VerifyReport certify(const TriBasis& basis, const DiscReport& report,
                     VerifyLevel level, std::uint64_t seed = 0,
                     std::uint64_t budget = 1u << 16);

/// Do two irreducible monic cubics define the same cubic extension of
/// F_q(x)? Decided exactly: a root of g is sought in F_q(x)[y]/(f) by
/// solving the characteristic-polynomial equations, eliminating one unknown
/// with the linear trace condition and a second with a Sylvester resultant,
/// then enumerating rational roots. Small inputs only.
bool same_field_check(const CubicModel& f, const CubicModel& g,
                      std::uint64_t seed = 0, std::uint64_t budget = 1u << 22);

}  // namespace cubic
