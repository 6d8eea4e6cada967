#pragma once

#include "cubicbasis/disc_index.hpp"
#include "cubicbasis/model.hpp"

namespace cubic {

enum class Branch { podd, p2_galois, p2_nongalois, p3 };
const char* branch_name(Branch b) noexcept;

/// Everything the basis construction needs, derived once from the
/// normalized generator coefficient.
struct CubicParams {
  Branch branch;
  RatFn coeff;                       // a (p != 3) or b (p = 3)
  CubicModel frame;                  // y^3 - 3y - a, or z^3 + bz + b^2
  Poly omega_scale;                  // s with omega = s * generator integral
  std::optional<DecompPNe3> dec;
  std::optional<DecompP3> dec3;
  DiscReport report;
  Poly index_gen;                    // monic generator of the index ideal
  Poly alpha_I;                      // p = 2: the alpha part of the index
  std::optional<RatFn> galois_root;  // p = 2: root of the resolvent, if any
  std::optional<RatFn> shift_c;      // p = 2 non-Galois: accumulated shift

  const Field& field() const { return coeff.field(); }
  /// Monic cubic with polynomial coefficients satisfied by omega.
  CubicModel omega_model() const;
};

/// Dispatches on the characteristic; requires the model to be irreducible.
CubicParams make_params(const RatFn& coeff, std::uint64_t seed = 0);

/// (c0 + c1 g + c2 g^2) / den in the power basis of the frame generator,
/// with gcd(c0, c1, c2, den) = 1 and den monic.
struct BasisElem {
  Poly c0, c1, c2;
  Poly den;

  LElem coords() const;
  std::string str(const std::string& var) const;
};
BasisElem make_elem(const Poly& c0, const Poly& c1, const Poly& c2, const Poly& den);

struct TriBasis {
  CubicModel frame;
  Poly omega_scale;
  std::array<BasisElem, 3> elems;
  /// p != 3: the (T, V) pair behind the third row (omega^2 + T omega + V)/I.
  std::optional<std::pair<Poly, Poly>> tv;

  CubicModel omega_model() const;
  /// Element i rewritten in the power basis of omega.
  BasisElem elem_in_omega(int i) const;
};

/// {1, omega, omega^2} in frame coordinates.
TriBasis power_basis(const CubicModel& frame, const Poly& omega_scale);

TriBasis build_podd(const CubicParams& params, std::uint64_t seed = 0);
TriBasis build_p2(const CubicParams& params, std::uint64_t seed = 0);
TriBasis build_p3(const CubicParams& params, std::uint64_t seed = 0);
/// Branch dispatch.
TriBasis build_basis(const CubicParams& params, std::uint64_t seed = 0);

/// Direct solver for the two congruences the middle coefficient T must
/// satisfy (used when the closed-form recipe fails verification):
/// T^2 - (gamma beta1 beta2)^2 = 0 mod I and
/// T^3 - 3 (gamma beta1 beta2)^2 T - alpha beta1^2 beta2 = 0 mod I^2.
std::pair<Poly, Poly> solve_T_fallback(const CubicParams& params,
                                       std::uint64_t budget = 1u << 16);

/// The two congruence checks themselves (p != 3).
bool t_congruence_mod_I(const CubicParams& params, const Poly& T);
bool t_congruence_mod_I2(const CubicParams& params, const Poly& T);

}  // namespace cubic
