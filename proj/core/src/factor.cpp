#include "cubicbasis/factor.hpp"

#include <algorithm>
#include <map>

namespace cubic {
namespace {

// p-th root of f, valid when f' = 0 (all exponents divisible by p);
// coefficientwise inverse Frobenius.
Poly pth_root(const Poly& f) {
  const Field& k = f.field();
  unsigned p = static_cast<unsigned>(k.p());
  std::vector<FElem> out;
  for (int i = 0; i * static_cast<int>(p) <= f.degree(); ++i)
    out.push_back(k.frob_root(f.coeff(i * static_cast<int>(p))));
  return Poly::from_coeffs(k, std::move(out));
}

struct PolyCmp {
  bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};
using FactorMap = std::map<Poly, int, PolyCmp>;

// squarefree decomposition in characteristic p (monic input)
void squarefree_decompose(const Poly& f, int mult, FactorMap& out) {
  if (f.degree() <= 0) return;
  Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree_decompose(pth_root(f), mult * static_cast<int>(f.field().p()), out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out[fac.monic()] += mult * i;
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() > 0)
    squarefree_decompose(pth_root(c), mult * static_cast<int>(f.field().p()), out);
}

// distinct-degree split of a squarefree monic f: list of (product, degree)
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const Field& k = f.field();
  Poly x = Poly::x(k);
  Poly h = x % f;
  int d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {
      out.emplace_back(f, f.degree());
      break;
    }
    h = powmod_q(h, f);
    Poly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  return out;
}

// equal-degree splitting (Cantor-Zassenhaus), f squarefree monic, all
// irreducible factors of degree d
void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const Field& k = f.field();
  const std::uint64_t p = k.p();
  const unsigned n = k.n();
  Poly g(k);
  while (true) {
    Poly a = random_poly(k, f.degree() - 1, rng);
    if (a.degree() < 1) continue;
    if (p == 2) {
      // additive version: trace of a over GF(2), Tr(a) = sum a^(2^i)
      Poly tr = a % f;
      Poly cur = tr;
      for (unsigned i = 1; i < n * static_cast<unsigned>(d); ++i) {
        cur = (cur * cur) % f;
        tr = tr + cur;
      }
      g = gcd(tr.is_zero() ? f : tr, f);
    } else {
      // a^((q^d-1)/2) - 1; the norm product handles the q^i part
      Poly acc = a % f;
      Poly t = acc;
      for (int i = 1; i < d; ++i) {
        t = powmod_q(t, f);
        acc = (acc * t) % f;
      }
      Poly b = powmod(acc, (k.order() - 1) / 2, f);
      g = gcd(b - Poly::one(k), f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) break;
  }
  equal_degree(g, d, rng, out);
  equal_degree(f / g, d, rng, out);
}

}  // namespace

Poly Factorization::product(const Field& f) const {
  Poly r = Poly::constant(f, unit);
  for (const auto& [fac, e] : factors) r = r * fac.pow(static_cast<unsigned>(e));
  return r;
}

Factorization factor(const Poly& a, std::uint64_t seed) {
  require(!a.is_zero(), errc::zero_polynomial, "cannot factor zero");
  Factorization out;
  out.unit = a.lead();
  if (a.degree() == 0) return out;
  Rng rng(seed);

  FactorMap sqf;
  squarefree_decompose(a.monic(), 1, sqf);

  FactorMap irred;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> pieces;
      equal_degree(block, d, rng, pieces);
      for (const auto& q : pieces) irred[q] += mult;
    }
  }
  out.factors.assign(irred.begin(), irred.end());

  for (const auto& [q, e] : out.factors)
    require(is_irreducible(q), errc::internal_inconsistency,
            "factor failed irreducibility re-check");
  require(out.product(a.field()) == a, errc::internal_inconsistency,
          "factorization does not reproduce the input");
  return out;
}

bool is_irreducible(const Poly& a) {
  int d = a.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const Poly f = a.monic();
  const Field& k = a.field();
  Poly x = Poly::x(k);
  auto frob_tower = [&](Poly h, int steps) {
    for (int i = 0; i < steps; ++i) h = powmod_q(h, f);
    return h;
  };
  if (frob_tower(x, d) != x % f) return false;
  int m = d;
  std::vector<int> primes;
  for (int q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      primes.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) primes.push_back(m);
  for (int r : primes) {
    Poly h = frob_tower(x, d / r);
    if (gcd(h - x, f).degree() != 0) return false;
  }
  return true;
}

bool is_squarefree(const Poly& a) {
  require(!a.is_zero(), errc::zero_polynomial, "squarefree test of zero");
  if (a.degree() == 0) return true;
  Poly d = a.derivative();
  if (d.is_zero()) return false;
  return gcd(a, d).degree() == 0;
}

SqfreeCubefree sqfree_cubefree(const Poly& a, std::uint64_t seed) {
  require(!a.is_zero(), errc::zero_polynomial, "decomposition of zero");
  const Field& f = a.field();
  SqfreeCubefree out{Poly::one(f), Poly::one(f), std::nullopt};
  for (const auto& [q, e] : factor(a, seed).factors) {
    if (e >= 3) {
      out.cube_witness = q;
      return out;
    }
    if (e == 1) out.beta1 = out.beta1 * q;
    else out.beta2 = out.beta2 * q;
  }
  return out;
}

Poly crt(const std::vector<std::pair<Poly, Poly>>& residue_modulus) {
  require(!residue_modulus.empty(), errc::zero_input, "empty congruence system");
  require(residue_modulus.front().second.degree() >= 1, errc::non_coprime_moduli,
          "constant modulus");
  Poly r = residue_modulus.front().first % residue_modulus.front().second;
  Poly m = residue_modulus.front().second;
  for (size_t i = 1; i < residue_modulus.size(); ++i) {
    const auto& [ri, mi] = residue_modulus[i];
    require(mi.degree() >= 1, errc::non_coprime_moduli, "constant modulus");
    auto e = xgcd(m, mi);
    require(e.g.degree() == 0, errc::non_coprime_moduli,
            "CRT moduli are not coprime");
    // x = r + m*s*(ri - r), reduced mod m*mi
    Poly total = m * mi;
    r = (r + m * e.s * (ri - r)) % total;
    m = std::move(total);
  }
  return r;
}

Poly mod_inverse(const Poly& a, const Poly& m) {
  auto e = xgcd(a, m);
  require(e.g.degree() == 0, errc::not_invertible, "element not invertible mod m");
  return e.s % m;
}

Poly cubic_disc(const Poly& b, const Poly& c, const Poly& d) {
  const Field& f = b.field();
  auto k = [&](std::int64_t v) { return Poly::constant(f, f.from_int(v)); };
  return b * b * c * c - k(4) * c * c * c - k(4) * b * b * b * d -
         k(27) * d * d + k(18) * b * c * d;
}

Poly random_poly(const Field& f, int max_degree, Rng& rng) {
  std::uniform_int_distribution<int> degree_dist(0, max_degree);
  std::uniform_int_distribution<std::uint64_t> coeff_dist(0, f.order() - 1);
  int deg = degree_dist(rng);
  std::vector<FElem> coeffs;
  for (int i = 0; i <= deg; ++i) coeffs.push_back(f.elem_at(coeff_dist(rng)));
  return Poly::from_coeffs(f, std::move(coeffs));
}

}  // namespace cubic
