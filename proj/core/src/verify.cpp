#include "cubicbasis/verify.hpp"

#include <algorithm>
#include <cmath>

namespace cubic {

const char* verify_level_name(VerifyLevel v) noexcept {
  switch (v) {
    case VerifyLevel::fast: return "fast";
    case VerifyLevel::full: return "full";
    case VerifyLevel::paranoid: return "paranoid";
  }
  return "?";
}

namespace {

using Mat3 = std::array<std::array<RatFn, 3>, 3>;

Mat3 coord_matrix(const TriBasis& b) {
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    LElem c = b.elems[static_cast<std::size_t>(i)].coords();
    m[static_cast<std::size_t>(i)] = {c.a0, c.a1, c.a2};
  }
  return m;
}

RatFn det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

IdealFactored disc_of_basis(const TriBasis& basis, std::uint64_t seed) {
  RatFn det = det3(coord_matrix(basis));
  require(!det.is_zero(), errc::singular_basis_matrix,
          "basis coordinate matrix is singular");
  RatFn d = det * det * basis.frame.disc();
  require(d.is_poly(), errc::verify_failed,
          "basis discriminant is not a polynomial");
  return IdealFactored::from_poly(d.num().monic(), seed);
}

bool mult_closed(const TriBasis& basis) {
  Mat3 c = coord_matrix(basis);
  RatFn det = det3(c);
  if (det.is_zero()) return false;
  // inv[k][j] = cofactor(j, k) / det
  Mat3 inv;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      int c0 = (k + 1) % 3, c1 = (k + 2) % 3;
      // minor with cyclic complement indices carries the sign already
      inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
          (c[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c0)] *
               c[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] -
           c[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c1)] *
               c[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c0)]) /
          det;
    }
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      LElem prod = lmul(basis.frame, basis.elems[static_cast<std::size_t>(i)].coords(),
                        basis.elems[static_cast<std::size_t>(j)].coords());
      std::array<RatFn, 3> v = {prod.a0, prod.a1, prod.a2};
      for (int col = 0; col < 3; ++col) {
        RatFn x = v[0] * inv[0][static_cast<std::size_t>(col)] +
                  v[1] * inv[1][static_cast<std::size_t>(col)] +
                  v[2] * inv[2][static_cast<std::size_t>(col)];
        if (!x.is_poly()) return false;
      }
    }
  return true;
}

namespace {

// residue representative with the given enumeration index: coefficients of
// x^0..x^(d-1) are the base-q digits
Poly residue_rep(const Field& f, std::uint64_t index, int d) {
  std::vector<FElem> coeffs;
  std::uint64_t q = f.order();
  for (int i = 0; i < d; ++i) {
    coeffs.push_back(f.elem_at(index % q));
    index /= q;
  }
  return Poly::from_coeffs(f, std::move(coeffs));
}

struct PolyVec3 {
  Poly a0, a1, a2;
};

// column_{k+1} = column_k * omega reduced by the monic model
PolyVec3 times_omega(const PolyVec3& v, const Poly& c2, const Poly& c1,
                     const Poly& c0) {
  return {-(v.a2 * c0), v.a0 - v.a2 * c1, v.a1 - v.a2 * c2};
}

bool divides(const Poly& d, const Poly& a) {
  return a.is_zero() || (a % d).is_zero();
}

}  // namespace

bool pmax_oracle(const TriBasis& basis, const Place& p, std::uint64_t budget) {
  const Field& f = basis.frame.field();
  int d = p.degree();
  long double qd = std::pow(static_cast<long double>(f.order()), d);
  require(qd * qd + qd + 1 <= static_cast<long double>(budget),
          errc::budget_exceeded,
          "residue enumeration at " + p.prime().str() + " over budget");
  std::uint64_t nres = static_cast<std::uint64_t>(qd);

  // work with polynomial data only: candidates are (c0 B0 + c1 B1 + c2 B2)
  // over a common denominator D, divided by the place
  CubicModel om = basis.omega_model();
  Poly c2 = om.c2.num(), c1 = om.c1.num(), c0 = om.c0.num();
  std::array<BasisElem, 3> oe = {basis.elem_in_omega(0), basis.elem_in_omega(1),
                                 basis.elem_in_omega(2)};
  Poly common = oe[0].den;
  for (int i = 1; i < 3; ++i) common = ((common * oe[i].den) / gcd(common, oe[i].den)).monic();
  std::array<PolyVec3, 3> vec;
  for (int i = 0; i < 3; ++i) {
    Poly s = common / oe[static_cast<std::size_t>(i)].den;
    const BasisElem& e = oe[static_cast<std::size_t>(i)];
    vec[static_cast<std::size_t>(i)] = {e.c0 * s, e.c1 * s, e.c2 * s};
  }
  Poly den1 = common * p.prime();
  Poly den2 = den1 * den1;
  Poly den3 = den2 * den1;

  // trace of multiplication by each basis numerator is linear in the
  // candidate coordinates: cheap first filter before the full 3x3 work
  Poly tr_w = -c2;                                             // trace(omega)
  Poly tr_w2 = c2 * c2 - Poly::constant(f, f.from_int(2)) * c1;  // trace(omega^2)
  std::array<Poly, 3> tau;
  for (int i = 0; i < 3; ++i) {
    const PolyVec3& v = vec[static_cast<std::size_t>(i)];
    tau[static_cast<std::size_t>(i)] =
        Poly::constant(f, f.from_int(3)) * v.a0 + tr_w * v.a1 + tr_w2 * v.a2;
  }

  // one representative per projective class: top nonzero coordinate = 1
  for (int top = 0; top < 3; ++top) {
    std::uint64_t count = 1;
    for (int i = 0; i < top; ++i) count *= nres;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::array<Poly, 3> cand = {Poly::zero(f), Poly::zero(f), Poly::zero(f)};
      cand[static_cast<std::size_t>(top)] = Poly::one(f);
      std::uint64_t rest = idx;
      for (int i = 0; i < top; ++i) {
        cand[static_cast<std::size_t>(i)] = residue_rep(f, rest % nres, d);
        rest /= nres;
      }
      Poly tr = Poly::zero(f);
      for (int i = 0; i < 3; ++i)
        tr = tr + cand[static_cast<std::size_t>(i)] * tau[static_cast<std::size_t>(i)];
      if (!divides(den1, tr)) continue;
      PolyVec3 n{Poly::zero(f), Poly::zero(f), Poly::zero(f)};
      for (int i = 0; i < 3; ++i) {
        const PolyVec3& v = vec[static_cast<std::size_t>(i)];
        const Poly& c = cand[static_cast<std::size_t>(i)];
        n.a0 = n.a0 + c * v.a0;
        n.a1 = n.a1 + c * v.a1;
        n.a2 = n.a2 + c * v.a2;
      }
      PolyVec3 col0 = n;
      PolyVec3 col1 = times_omega(col0, c2, c1, c0);
      PolyVec3 col2 = times_omega(col1, c2, c1, c0);
      Poly sig2 = (col0.a0 * col1.a1 - col1.a0 * col0.a1) +
                  (col0.a0 * col2.a2 - col2.a0 * col0.a2) +
                  (col1.a1 * col2.a2 - col2.a1 * col1.a2);
      if (!divides(den2, sig2)) continue;
      Poly det = col0.a0 * (col1.a1 * col2.a2 - col2.a1 * col1.a2) -
                 col1.a0 * (col0.a1 * col2.a2 - col2.a1 * col0.a2) +
                 col2.a0 * (col0.a1 * col1.a2 - col1.a1 * col0.a2);
      if (!divides(den3, det)) continue;
      return false;  // integral quotient found: the order is not maximal here
    }
  }
  return true;
}

bool VerifyReport::ok() const {
  if (!(integral && closed && disc_match)) return false;
  for (const auto& [prime, good] : pmax)
    if (!good) return false;
  for (bool good : model_chain)
    if (!good) return false;
  return true;
}

VerifyReport certify(const TriBasis& basis, const DiscReport& report,
                     VerifyLevel level, std::uint64_t seed, std::uint64_t budget) {
  VerifyReport out;
  out.integral = true;
  for (const auto& e : basis.elems)
    if (!is_integral(basis.frame, e.coords())) out.integral = false;
  out.closed = mult_closed(basis);
  try {
    out.disc_match = disc_of_basis(basis, seed) == report.disc;
  } catch (const Error&) {
    out.disc_match = false;
  }
  if (level != VerifyLevel::fast) {
    for (const auto& [prime, e] : report.index.factors) {
      try {
        out.pmax.emplace_back(prime,
                              pmax_oracle(basis, Place::unchecked(prime), budget));
      } catch (const Error& err) {
        if (err.code() != errc::budget_exceeded) throw;
        out.pmax_skipped.push_back(prime);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// same_field_check: polynomials in one or two auxiliary scalar unknowns with
// F_q(x) coefficients, enough to run the elimination.

namespace {

using UP = std::vector<RatFn>;  // univariate, lowest degree first

void up_trim(UP& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UP up_add(const UP& a, const UP& b) {
  UP out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size() && i < b.size()) out[i] = a[i] + b[i];
    else if (i < a.size()) out[i] = a[i];
    else out[i] = b[i];
  }
  up_trim(out);
  return out;
}

UP up_neg(const UP& a) {
  UP out = a;
  for (auto& c : out) c = -c;
  return out;
}

UP up_sub(const UP& a, const UP& b) { return up_add(a, up_neg(b)); }

UP up_mul(const UP& a, const UP& b) {
  if (a.empty() || b.empty()) return {};
  UP out(a.size() + b.size() - 1, RatFn::zero(a[0].field()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  up_trim(out);
  return out;
}

RatFn up_eval(const UP& a, const RatFn& v) {
  if (a.empty()) return RatFn::zero(v.field());
  RatFn out = a.back();
  for (std::size_t i = a.size() - 1; i-- > 0;) out = out * v + a[i];
  return out;
}

// bivariate in (s, t): c[i] is the coefficient of s^i, a polynomial in t
struct BP {
  std::vector<UP> c;
};

void bp_trim(BP& a) {
  while (!a.c.empty() && a.c.back().empty()) a.c.pop_back();
}

BP bp_const(const RatFn& v) {
  if (v.is_zero()) return {};
  return {{UP{v}}};
}

BP bp_add(const BP& a, const BP& b) {
  BP out;
  out.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    if (i < a.c.size() && i < b.c.size()) out.c[i] = up_add(a.c[i], b.c[i]);
    else if (i < a.c.size()) out.c[i] = a.c[i];
    else out.c[i] = b.c[i];
  }
  bp_trim(out);
  return out;
}

BP bp_sub(const BP& a, const BP& b) {
  BP nb;
  nb.c.reserve(b.c.size());
  for (const auto& u : b.c) nb.c.push_back(up_neg(u));
  return bp_add(a, nb);
}

BP bp_mul(const BP& a, const BP& b) {
  BP out;
  if (a.c.empty() || b.c.empty()) return out;
  out.c.resize(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = up_add(out.c[i + j], up_mul(a.c[i], b.c[j]));
  bp_trim(out);
  return out;
}

bool bp_zero(const BP& a) { return a.c.empty(); }

// substitute t -> t0, leaving a polynomial in s
UP bp_at_t(const BP& a, const RatFn& t0) {
  UP out;
  out.reserve(a.c.size());
  for (const auto& u : a.c) out.push_back(up_eval(u, t0));
  up_trim(out);
  return out;
}

struct BElem {
  BP a0, a1, a2;
};

BElem belem_mul(const CubicModel& m, const BElem& u, const BElem& v) {
  BP d0 = bp_mul(u.a0, v.a0);
  BP d1 = bp_add(bp_mul(u.a0, v.a1), bp_mul(u.a1, v.a0));
  BP d2 = bp_add(bp_add(bp_mul(u.a0, v.a2), bp_mul(u.a1, v.a1)),
                 bp_mul(u.a2, v.a0));
  BP d3 = bp_add(bp_mul(u.a1, v.a2), bp_mul(u.a2, v.a1));
  BP d4 = bp_mul(u.a2, v.a2);
  BP c2 = bp_const(m.c2), c1 = bp_const(m.c1), c0 = bp_const(m.c0);
  return {bp_add(bp_sub(d0, bp_mul(d3, c0)), bp_mul(d4, bp_mul(c2, c0))),
          bp_add(bp_sub(d1, bp_mul(d3, c1)),
                 bp_mul(d4, bp_sub(bp_mul(c2, c1), c0))),
          bp_add(bp_sub(d2, bp_mul(d3, c2)),
                 bp_mul(d4, bp_sub(bp_mul(c2, c2), c1)))};
}

// characteristic coefficients of a symbolic element
void belem_char(const CubicModel& m, const BElem& u, BP& e1, BP& e2, BP& e3) {
  const Field& f = m.field();
  BElem gen{bp_const(RatFn::zero(f)), bp_const(RatFn::one(f)), BP{}};
  BElem gen2{BP{}, BP{}, bp_const(RatFn::one(f))};
  BElem col0 = u;
  BElem col1 = belem_mul(m, u, gen);
  BElem col2 = belem_mul(m, u, gen2);
  e1 = bp_add(bp_add(col0.a0, col1.a1), col2.a2);
  auto minor2 = [](const BP& a, const BP& b, const BP& c, const BP& d) {
    return bp_sub(bp_mul(a, d), bp_mul(b, c));
  };
  e2 = bp_add(bp_add(minor2(col0.a0, col1.a0, col0.a1, col1.a1),
                     minor2(col0.a0, col2.a0, col0.a2, col2.a2)),
              minor2(col1.a1, col2.a1, col1.a2, col2.a2));
  e3 = bp_add(bp_sub(bp_mul(col0.a0, minor2(col1.a1, col2.a1, col1.a2, col2.a2)),
                     bp_mul(col1.a0, minor2(col0.a1, col2.a1, col0.a2, col2.a2))),
              bp_mul(col2.a0, minor2(col0.a1, col1.a1, col0.a2, col1.a2)));
}

UP det_up(std::vector<std::vector<UP>>& m);

UP det_up(std::vector<std::vector<UP>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  UP out;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].empty()) continue;
    std::vector<std::vector<UP>> sub(n - 1, std::vector<UP>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t col = 0; col < n; ++col) {
        if (col == j) continue;
        sub[r - 1][cc++] = m[r][col];
      }
    }
    UP term = up_mul(m[0][j], det_up(sub));
    out = (j % 2 == 0) ? up_add(out, term) : up_sub(out, term);
  }
  return out;
}

// resultant with respect to s of two bivariate polynomials (degree >= 1 each)
UP sylvester_res(const BP& a, const BP& b) {
  std::size_t m = a.c.size() - 1, n = b.c.size() - 1;
  std::size_t size = m + n;
  std::vector<std::vector<UP>> mat(size, std::vector<UP>(size));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) mat[i][i + k] = a.c[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) mat[n + i][i + k] = b.c[n - k];
  return det_up(mat);
}

std::vector<RatFn> up_roots(const UP& a, std::uint64_t seed, std::uint64_t budget) {
  if (a.size() <= 1) return {};  // constants handled by callers
  return ratfn_poly_roots(a, seed, budget);
}

// solutions (s, t) of A = B = 0, as far as the elimination can see;
// may also emit candidates with a free coordinate pinned to 0
std::vector<std::pair<RatFn, RatFn>> solve_pair(const Field& f, BP a, BP b,
                                                std::uint64_t seed,
                                                std::uint64_t budget) {
  std::vector<std::pair<RatFn, RatFn>> out;
  RatFn zero = RatFn::zero(f);
  if (bp_zero(a)) std::swap(a, b);
  require(!bp_zero(a), errc::budget_exceeded,
          "degenerate system: every candidate satisfies the equations");
  auto add_for_t = [&](const RatFn& t0) {
    UP as = bp_at_t(a, t0);
    UP bs = bp_at_t(b, t0);
    if (as.empty() && bs.empty()) {
      out.emplace_back(zero, t0);
      return;
    }
    const UP& first = as.empty() ? bs : as;
    const UP& other = as.empty() ? as : bs;
    if (first.size() == 1) return;  // nonzero constant: inconsistent at t0
    for (const RatFn& s0 : up_roots(first, seed, budget))
      if (other.empty() || up_eval(other, s0).is_zero()) out.emplace_back(s0, t0);
  };
  std::size_t da = a.c.size() - 1;
  std::size_t db = bp_zero(b) ? 0 : b.c.size() - 1;
  if (da == 0) {
    // a depends on t alone (zero-degree in s)
    for (const RatFn& t0 : up_roots(a.c[0], seed, budget)) add_for_t(t0);
    return out;
  }
  if (db == 0) {
    if (bp_zero(b)) {
      // single equation in two unknowns: pin one coordinate to 0
      UP as = bp_at_t(a, zero);
      if (as.size() > 1)
        for (const RatFn& s0 : up_roots(as, seed, budget)) out.emplace_back(s0, zero);
      if (!a.c[0].empty() && a.c[0].size() > 1)
        for (const RatFn& t0 : up_roots(a.c[0], seed, budget)) add_for_t(t0);
      return out;
    }
    for (const RatFn& t0 : up_roots(b.c[0], seed, budget)) add_for_t(t0);
    return out;
  }
  UP res = sylvester_res(a, b);
  if (res.empty()) {
    // common factor: fall back to scanning the roots of the leading data
    fail(errc::budget_exceeded, "vanishing resultant in the field check");
  }
  if (res.size() == 1) return out;  // nonzero constant: no common roots
  for (const RatFn& t0 : up_roots(res, seed, budget)) add_for_t(t0);
  return out;
}

}  // namespace

bool same_field_check(const CubicModel& f, const CubicModel& g,
                      std::uint64_t seed, std::uint64_t budget) {
  const Field& fld = f.field();
  require(!f.disc().is_zero() && !g.disc().is_zero(), errc::inseparable_model,
          "field check needs separable models");
  require(cubic_irreducible(f, seed, budget) && cubic_irreducible(g, seed, budget),
          errc::reducible_input, "field check needs irreducible models");
  if (f == g) return true;

  // trace condition: e1(c0 + c1 y + c2 y^2) = -g2 is linear in the c_i
  RatFn tau1 = char_poly_elem(f, {RatFn::zero(fld), RatFn::one(fld), RatFn::zero(fld)}).e1;
  RatFn tau2 = char_poly_elem(f, {RatFn::zero(fld), RatFn::zero(fld), RatFn::one(fld)}).e1;
  std::array<RatFn, 3> w = {RatFn(Poly::from_ints(fld, {3})), tau1, tau2};
  RatFn rhs = -g.c2;

  int pivot = -1;
  for (int i = 0; i < 3 && pivot < 0; ++i)
    if (!w[static_cast<std::size_t>(i)].is_zero()) pivot = i;
  if (pivot < 0) {
    if (!rhs.is_zero()) return false;  // trace equation unsatisfiable
    fail(errc::budget_exceeded,
         "all traces vanish: the elimination cannot reduce the system");
  }

  // affine parametrization of the trace plane: base + s*dir1 + t*dir2
  std::array<RatFn, 3> base = {RatFn::zero(fld), RatFn::zero(fld), RatFn::zero(fld)};
  base[static_cast<std::size_t>(pivot)] = rhs / w[static_cast<std::size_t>(pivot)];
  std::array<std::array<RatFn, 3>, 2> dirs;
  int free_idx = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == pivot) continue;
    std::array<RatFn, 3> dir = {RatFn::zero(fld), RatFn::zero(fld), RatFn::zero(fld)};
    dir[static_cast<std::size_t>(i)] = RatFn::one(fld);
    dir[static_cast<std::size_t>(pivot)] =
        -(w[static_cast<std::size_t>(i)] / w[static_cast<std::size_t>(pivot)]);
    dirs[static_cast<std::size_t>(free_idx++)] = dir;
  }

  auto lin = [&](int k) {
    // base_k + dir1_k * s + dir2_k * t
    BP out = bp_const(base[static_cast<std::size_t>(k)]);
    BP sterm;
    if (!dirs[0][static_cast<std::size_t>(k)].is_zero())
      sterm.c = {UP{}, UP{dirs[0][static_cast<std::size_t>(k)]}};
    BP tterm;
    if (!dirs[1][static_cast<std::size_t>(k)].is_zero())
      tterm.c = {UP{RatFn::zero(fld), dirs[1][static_cast<std::size_t>(k)]}};
    return bp_add(out, bp_add(sterm, tterm));
  };
  BElem u{lin(0), lin(1), lin(2)};
  BP e1, e2, e3;
  belem_char(f, u, e1, e2, e3);
  BP a = bp_sub(e2, bp_const(g.c1));
  BP b = bp_add(e3, bp_const(g.c0));
  if (bp_zero(a) && bp_zero(b)) return true;  // every trace-plane element works

  for (const auto& [s0, t0] : solve_pair(fld, a, b, seed, budget)) {
    LElem cand;
    RatFn* slots[3] = {&cand.a0, &cand.a1, &cand.a2};
    for (int k = 0; k < 3; ++k)
      *slots[k] = base[static_cast<std::size_t>(k)] +
                  dirs[0][static_cast<std::size_t>(k)] * s0 +
                  dirs[1][static_cast<std::size_t>(k)] * t0;
    CharPoly cp = char_poly_elem(f, cand);
    if (cp.e1 == -g.c2 && cp.e2 == g.c1 && cp.e3 == -g.c0) return true;
  }
  return false;
}

}  // namespace cubic
