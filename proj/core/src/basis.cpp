#include "cubicbasis/basis.hpp"

#include <algorithm>

#include "cubicbasis/standard_form.hpp"
#include "cubicbasis/verify.hpp"

namespace cubic {

const char* branch_name(Branch b) noexcept {
  switch (b) {
    case Branch::podd: return "podd";
    case Branch::p2_galois: return "p2_galois";
    case Branch::p2_nongalois: return "p2_nongalois";
    case Branch::p3: return "p3";
  }
  return "?";
}

CubicModel CubicParams::omega_model() const {
  RatFn s(omega_scale);
  CubicModel m{frame.c2 * s, frame.c1 * s * s, frame.c0 * s * s * s};
  require(m.c2.is_poly() && m.c1.is_poly() && m.c0.is_poly(),
          errc::internal_inconsistency, "scaled generator is not integral");
  return m;
}

namespace {

CubicModel frame_pne3(const RatFn& a) {
  const Field& f = a.field();
  return {RatFn::zero(f), RatFn(Poly::from_ints(f, {-3})), -a};
}

CubicModel frame_p3(const RatFn& b) {
  return {RatFn::zero(b.field()), b, b * b};
}

}  // namespace

CubicParams make_params(const RatFn& coeff, std::uint64_t seed) {
  const Field& f = coeff.field();
  require(!coeff.is_zero(), errc::zero_input, "zero generator coefficient");
  CubicParams out;
  out.coeff = coeff;
  if (f.p() == 3) {
    out.branch = Branch::p3;
    out.frame = frame_p3(coeff);
    out.dec3 = decompose_p3(coeff, seed);
    out.report = disc_p3(*out.dec3, seed);
    out.omega_scale = out.dec3->beta;
    out.alpha_I = Poly::one(f);
  } else {
    out.frame = frame_pne3(coeff);
    out.dec = decompose_pne3(coeff, seed);
    out.omega_scale = out.dec->gamma * out.dec->beta1 * out.dec->beta2;
    if (f.p() == 2) {
      out.report = disc_index_p2(*out.dec, coeff, seed);
      out.alpha_I = Poly::one(f);
      for (const auto& [place, l] : out.report.ell) {
        int e = multiplicity(out.dec->alpha, place.prime()) - (l + 1) / 2;
        if (e > 0) out.alpha_I = out.alpha_I * place.prime().pow(static_cast<unsigned>(e));
      }
      RatFn b0 = coeff.pow(-2) + RatFn::one(f);
      if (auto root = as_root(b0, seed)) {
        out.branch = Branch::p2_galois;
        out.galois_root = *root;
      } else {
        out.branch = Branch::p2_nongalois;
        out.shift_c = out.report.resolvent->shift;
      }
    } else {
      out.branch = Branch::podd;
      out.report = disc_index_podd(*out.dec, seed);
      out.alpha_I = Poly::one(f);
    }
  }
  out.index_gen = out.report.index.generator(f);
  require(cubic_irreducible(out.frame, seed), errc::reducible_cubic,
          "generator equation is reducible over F_q(x)");
  return out;
}

LElem BasisElem::coords() const {
  RatFn d(den);
  return {RatFn(c0) / d, RatFn(c1) / d, RatFn(c2) / d};
}

std::string BasisElem::str(const std::string& var) const {
  std::string num;
  auto term = [&](const Poly& c, const std::string& mono) {
    if (c.is_zero()) return;
    if (!num.empty()) num += " + ";
    if (mono.empty() || !c.is_one()) {
      num += c.is_constant() || mono.empty() ? c.str() : "(" + c.str() + ")";
      if (!mono.empty()) num += "*";
    }
    num += mono;
  };
  term(c0, "");
  term(c1, var);
  term(c2, var + "^2");
  if (num.empty()) num = "0";
  if (den.is_one()) return num;
  return "(" + num + ")/(" + den.str() + ")";
}

BasisElem make_elem(const Poly& c0, const Poly& c1, const Poly& c2, const Poly& den) {
  require(!den.is_zero(), errc::zero_denominator, "basis element denominator");
  Poly content = den;
  for (const Poly* c : {&c0, &c1, &c2})
    if (!c->is_zero()) content = gcd(content, *c);
  BasisElem e{c0, c1, c2, den};
  if (content.degree() >= 1) {
    e.c0 = e.c0 / content;
    e.c1 = e.c1 / content;
    e.c2 = e.c2 / content;
    e.den = e.den / content;
  }
  const Field& f = den.field();
  FElem u = f.inv(e.den.lead());
  e.c0 = e.c0.scaled(u);
  e.c1 = e.c1.scaled(u);
  e.c2 = e.c2.scaled(u);
  e.den = e.den.scaled(u);
  return e;
}

CubicModel TriBasis::omega_model() const {
  RatFn s(omega_scale);
  return {frame.c2 * s, frame.c1 * s * s, frame.c0 * s * s * s};
}

BasisElem TriBasis::elem_in_omega(int i) const {
  const BasisElem& e = elems[static_cast<std::size_t>(i)];
  return make_elem(e.c0 * omega_scale * omega_scale, e.c1 * omega_scale, e.c2,
                   e.den * omega_scale * omega_scale);
}

TriBasis power_basis(const CubicModel& frame, const Poly& omega_scale) {
  const Field& f = frame.field();
  Poly one = Poly::one(f), zero = Poly::zero(f);
  return {frame,
          omega_scale,
          {make_elem(one, zero, zero, one), make_elem(zero, omega_scale, zero, one),
           make_elem(zero, zero, omega_scale * omega_scale, one)}};
}

namespace {

// {1, omega, (omega^2 + T omega + V)/I} written in frame coordinates
TriBasis assemble_pne3(const CubicParams& params, const Poly& T, const Poly& V) {
  const Field& f = params.field();
  const Poly& s = params.omega_scale;
  Poly one = Poly::one(f), zero = Poly::zero(f);
  TriBasis b{params.frame,
             s,
             {make_elem(one, zero, zero, one), make_elem(zero, s, zero, one),
              make_elem(V, T * s, s * s, params.index_gen)},
             std::make_pair(T, V)};
  return b;
}

Poly t_closed_form(const CubicParams& params, std::uint64_t seed) {
  const Field& f = params.field();
  const DecompPNe3& d = *params.dec;
  std::vector<std::pair<Poly, Poly>> congruences;
  if (params.branch == Branch::podd) {
    // T = -alpha / (2 gamma^2 beta2) mod eta2^2, T = 0 mod beta1^2
    const Poly& eta2 = params.report.eta->second;
    if (eta2.degree() >= 1) {
      Poly m1 = eta2 * eta2;
      Poly num = (-d.alpha_full()) % m1;
      Poly den = (Poly::from_ints(f, {2}) * d.gamma * d.gamma * d.beta2) % m1;
      congruences.emplace_back((num * mod_inverse(den, m1)) % m1, m1);
    }
    if (d.beta1.degree() >= 1)
      congruences.emplace_back(Poly::zero(f), d.beta1 * d.beta1);
  } else {
    // T = alpha*c / (gamma^2 beta2) mod alpha_I^2, T = 0 mod beta1, where c
    // is the resolvent root (Galois) or the reduction shift (non-Galois)
    RatFn c = params.galois_root ? *params.galois_root : *params.shift_c;
    RatFn target = RatFn(d.alpha_full()) * c /
                   RatFn(d.gamma * d.gamma * d.beta2);
    for (const auto& [prime, e] : factor(params.alpha_I, seed).factors) {
      Place place = Place::unchecked(prime);
      congruences.emplace_back(residue_at(target, place, 2 * e),
                               prime.pow(static_cast<unsigned>(2 * e)));
    }
    if (d.beta1.degree() >= 1) congruences.emplace_back(Poly::zero(f), d.beta1);
  }
  if (congruences.empty()) return Poly::zero(f);
  return crt(congruences);
}

Poly v_from_t(const CubicParams& params, const Poly& T) {
  const Field& f = params.field();
  if (params.index_gen.degree() < 1) return Poly::zero(f);
  Poly g2 = params.omega_scale * params.omega_scale;
  return (T * T - Poly::from_ints(f, {3}) * g2) % params.index_gen;
}

TriBasis build_pne3(const CubicParams& params, std::uint64_t seed) {
  Poly T = t_closed_form(params, seed);
  Poly V = v_from_t(params, T);
  TriBasis basis = assemble_pne3(params, T, V);
  if (certify(basis, params.report, VerifyLevel::fast, seed).ok()) return basis;
  auto [ft, fv] = solve_T_fallback(params);
  basis = assemble_pne3(params, ft, fv);
  require(certify(basis, params.report, VerifyLevel::fast, seed).ok(),
          errc::verify_failed, "fallback basis failed verification");
  return basis;
}

}  // namespace

TriBasis build_podd(const CubicParams& params, std::uint64_t seed) {
  require(params.branch == Branch::podd, errc::precondition_violated,
          "branch mismatch");
  return build_pne3(params, seed);
}

TriBasis build_p2(const CubicParams& params, std::uint64_t seed) {
  require(params.branch == Branch::p2_galois || params.branch == Branch::p2_nongalois,
          errc::precondition_violated, "branch mismatch");
  return build_pne3(params, seed);
}

TriBasis build_p3(const CubicParams& params, std::uint64_t seed) {
  require(params.branch == Branch::p3, errc::precondition_violated,
          "branch mismatch");
  const Field& f = params.field();
  const DecompP3& d = *params.dec3;
  Poly p1 = Poly::one(f), p2 = Poly::one(f);
  for (const auto& [place, l] : d.places) {
    p1 = p1 * place.prime().pow(static_cast<unsigned>(1 + (2 * l) / 3));
    p2 = p2 * place.prime().pow(static_cast<unsigned>(1 + (4 * l) / 3));
  }
  Poly one = Poly::one(f), zero = Poly::zero(f);
  TriBasis basis{params.frame,
                 params.omega_scale,
                 {make_elem(one, zero, zero, one), make_elem(zero, p1, zero, d.xi2),
                  make_elem(zero, zero, p2, d.xi1 * d.xi2 * d.xi2)}};
  require(certify(basis, params.report, VerifyLevel::fast, seed).ok(),
          errc::verify_failed, "constructed basis failed verification");
  return basis;
}

TriBasis build_basis(const CubicParams& params, std::uint64_t seed) {
  switch (params.branch) {
    case Branch::podd: return build_podd(params, seed);
    case Branch::p2_galois:
    case Branch::p2_nongalois: return build_p2(params, seed);
    case Branch::p3: return build_p3(params, seed);
  }
  fail(errc::internal_inconsistency, "unknown branch");
}

namespace {

// residues mod a prime of degree d, indexed like residue_rep
Poly prime_residue(const Field& f, const Poly& prime, std::uint64_t index) {
  std::vector<FElem> coeffs;
  std::uint64_t q = f.order();
  for (int i = 0; i < prime.degree(); ++i) {
    coeffs.push_back(f.elem_at(index % q));
    index /= q;
  }
  return Poly::from_coeffs(f, std::move(coeffs));
}

}  // namespace

std::pair<Poly, Poly> solve_T_fallback(const CubicParams& params,
                                       std::uint64_t budget) {
  require(params.branch != Branch::p3, errc::wrong_characteristic,
          "congruence solver applies to the p != 3 shape");
  const Field& f = params.field();
  const DecompPNe3& d = *params.dec;
  // the omega-model X^3 + c1 X + c0 evaluated at T must vanish mod I^2,
  // and T^2 - s^2 must vanish mod each prime power of the index
  Poly g2 = params.omega_scale * params.omega_scale;
  Poly c1 = -(Poly::from_ints(f, {3}) * g2);
  Poly c0 = -(d.alpha_full() * d.beta1 * d.beta1 * d.beta2);
  auto g = [&](const Poly& t, const Poly& mod) {
    return (((t * t) % mod) * t + c1 * t + c0) % mod;
  };
  std::vector<std::pair<Poly, Poly>> congruences;
  for (const auto& [prime, e] : params.report.index.factors) {
    std::uint64_t nres = 1;
    for (int i = 0; i < prime.degree(); ++i) {
      nres *= f.order();
      require(nres <= budget, errc::budget_exceeded, "residue field too large");
    }
    std::vector<Poly> cands;
    Poly mod = prime;
    for (std::uint64_t i = 0; i < nres; ++i) {
      Poly t = prime_residue(f, prime, i);
      if (g(t, mod).is_zero()) cands.push_back(t);
    }
    // Hensel-style lift to prime^(2e), branching where the derivative drops
    for (int k = 1; k < 2 * e; ++k) {
      Poly next_mod = mod * prime;
      std::vector<Poly> lifted;
      for (const Poly& t : cands) {
        Poly val = g(t, next_mod);
        Poly r = (val / mod) % prime;  // val = mod * r at this level
        Poly dg = (Poly::from_ints(f, {3}) * t * t + c1) % prime;
        if (!dg.is_zero()) {
          Poly step = (-r * mod_inverse(dg, prime)) % prime;
          lifted.push_back(t + mod * step);
        } else if (r.is_zero()) {
          for (std::uint64_t i = 0; i < nres; ++i)
            lifted.push_back(t + mod * prime_residue(f, prime, i));
        }
        require(lifted.size() <= budget, errc::budget_exceeded,
                "congruence candidate set too large");
      }
      cands = std::move(lifted);
      mod = next_mod;
    }
    // keep solutions of the quadratic side condition mod prime^e
    Poly mod_e = prime.pow(static_cast<unsigned>(e));
    std::optional<Poly> pick;
    for (const Poly& t : cands)
      if (((t * t - g2) % mod_e).is_zero() && (!pick || poly_less(t, *pick)))
        pick = t;
    require(pick.has_value(), errc::no_solution,
            "no congruence solution at " + prime.str());
    congruences.emplace_back(*pick, mod);
  }
  Poly T = congruences.empty() ? Poly::zero(f) : crt(congruences);
  return {T, v_from_t(params, T)};
}

bool t_congruence_mod_I(const CubicParams& params, const Poly& T) {
  if (params.index_gen.degree() < 1) return true;
  Poly g2 = params.omega_scale * params.omega_scale;
  return ((T * T - g2) % params.index_gen).is_zero();
}

bool t_congruence_mod_I2(const CubicParams& params, const Poly& T) {
  if (params.index_gen.degree() < 1) return true;
  const Field& f = params.field();
  const DecompPNe3& d = *params.dec;
  Poly g2 = params.omega_scale * params.omega_scale;
  Poly c1 = -(Poly::from_ints(f, {3}) * g2);
  Poly c0 = -(d.alpha_full() * d.beta1 * d.beta1 * d.beta2);
  Poly i2 = params.index_gen * params.index_gen;
  return ((((T * T) % i2) * T + c1 * T + c0) % i2).is_zero();
}

}  // namespace cubic
