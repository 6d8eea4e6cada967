#include "cubicbasis/gf.hpp"

#include <algorithm>
#include <sstream>

namespace cubic {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMaxPrime = (u64{1} << 31) - 1;

bool is_prime_u64(u64 v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (u64 d = 3; d * d <= v; d += 2)
    if (v % d == 0) return false;
  return true;
}

// ---- arithmetic in Z_p ----

inline u64 addp(u64 a, u64 b, u64 p) { u64 s = a + b; return s >= p ? s - p : s; }
inline u64 subp(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mulp(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 invp(u64 a, u64 p) {
  // extended Euclid
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
    tmp = r - q * newr; r = newr; newr = tmp;
  }
  require(r == 1, errc::division_by_zero, "no inverse mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<u64>(t);
}

// ---- dense polynomials over Z_p (coefficient vectors, lowest first) ----

using ZPoly = std::vector<u64>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = addp(r[i + j], mulp(a[i], b[j], p), p);
  }
  ztrim(r);
  return r;
}

// a mod b, b nonzero
ZPoly zmod(ZPoly a, const ZPoly& b, u64 p) {
  u64 lcinv = invp(b.back(), p);
  while (zdeg(a) >= zdeg(b)) {
    u64 f = mulp(a.back(), lcinv, p);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = subp(a[shift + i], mulp(f, b[i], p), p);
    ztrim(a);
  }
  return a;
}

ZPoly zgcd(ZPoly a, ZPoly b, u64 p) {
  while (!b.empty()) {
    ZPoly r = zmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    u64 s = invp(a.back(), p);
    for (auto& c : a) c = mulp(c, s, p);
  }
  return a;
}

// base^e mod m in Z_p[t]
ZPoly zpowmod(ZPoly base, u64 e, const ZPoly& m, u64 p) {
  ZPoly r{1};
  base = zmod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = zmod(zmul(r, base, p), m, p);
    base = zmod(zmul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

// irreducibility over Z_p via Rabin's test
bool zirreducible(const ZPoly& f, u64 p) {
  int d = zdeg(f);
  if (d < 1) return false;
  if (d == 1) return true;
  ZPoly t{0, 1};
  // x^(p^k) mod f by iterating k times base -> base^p
  auto frob_iter = [&](ZPoly h, int k) {
    for (int i = 0; i < k; ++i) h = zpowmod(std::move(h), p, f, p);
    return h;
  };
  ZPoly full = frob_iter(t, d);
  ZPoly tm = zmod(t, f, p);
  if (full != tm) return false;
  std::vector<int> prime_divs;
  int m = d;
  for (int q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      prime_divs.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) prime_divs.push_back(m);
  for (int r : prime_divs) {
    ZPoly h = frob_iter(t, d / r);
    // gcd(h - t, f) must be 1
    ZPoly diff = h;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = subp(diff[1], 1, p);
    ztrim(diff);
    ZPoly g = zgcd(f, diff, p);
    if (zdeg(g) != 0) return false;
  }
  return true;
}

}  // namespace

struct Field::Rep {
  u64 p = 0;
  unsigned n = 1;
  std::vector<u64> modulus;  // length n+1, monic (for n = 1: {0, 1}, i.e. t)
  bool q_fits = true;
  u64 q = 0;
};

Field Field::make(u64 p, unsigned n) {
  require(n >= 1, errc::degree_mismatch, "extension degree must be >= 1");
  if (n == 1) return make(p, 1, {0, 1});
  require(is_prime_u64(p) && p <= kMaxPrime, errc::non_prime_p,
          "p must be a word-sized prime");
  // deterministic scan for the first irreducible monic polynomial of degree n
  // (coefficient tuple read as a base-p counter, c0 least significant)
  std::vector<u64> mod(n + 1, 0);
  mod[n] = 1;
  while (true) {
    if (zirreducible(mod, p)) break;
    unsigned i = 0;
    while (i < n) {
      mod[i] += 1;
      if (mod[i] == p) { mod[i] = 0; ++i; } else break;
    }
    require(i < n, errc::internal_inconsistency, "no irreducible modulus found");
  }
  return make(p, n, mod);
}

Field Field::make(u64 p, unsigned n, const std::vector<u64>& modulus) {
  require(is_prime_u64(p) && p <= kMaxPrime, errc::non_prime_p,
          "p must be a word-sized prime");
  require(n >= 1, errc::degree_mismatch, "extension degree must be >= 1");
  require(modulus.size() == n + 1, errc::degree_mismatch,
          "modulus must have degree n");
  auto rep = std::make_shared<Rep>();
  rep->p = p;
  rep->n = n;
  rep->modulus = modulus;
  for (auto& c : rep->modulus) c %= p;
  require(rep->modulus[n] == 1, errc::degree_mismatch, "modulus must be monic");
  if (n > 1)
    require(zirreducible(rep->modulus, p), errc::reducible_modulus,
            "modulus is reducible over GF(p)");
  u128 q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > ~u64{0}) { rep->q_fits = false; break; }
  }
  if (rep->q_fits) rep->q = static_cast<u64>(q);
  Field f;
  f.rep_ = std::move(rep);
  return f;
}

u64 Field::p() const { return rep_->p; }
unsigned Field::n() const { return rep_->n; }
const std::vector<u64>& Field::modulus() const { return rep_->modulus; }
bool Field::order_fits_u64() const { return rep_->q_fits; }

u64 Field::order() const {
  require(rep_->q_fits, errc::unsupported, "field order exceeds 64 bits");
  return rep_->q;
}

bool Field::operator==(const Field& other) const {
  if (rep_ == other.rep_) return true;
  if (!rep_ || !other.rep_) return false;
  return rep_->p == other.rep_->p && rep_->n == other.rep_->n &&
         rep_->modulus == other.rep_->modulus;
}

FElem Field::zero() const {
  FElem e;
  e.c.resize(rep_->n, 0);
  return e;
}

FElem Field::one() const { return from_int(1); }

FElem Field::gen() const {
  require(rep_->n > 1, errc::degree_mismatch, "prime field has no generator t");
  FElem e = zero();
  e.c[1] = 1;
  return e;
}

FElem Field::from_int(std::int64_t v) const {
  FElem e = zero();
  std::int64_t m = v % static_cast<std::int64_t>(rep_->p);
  if (m < 0) m += static_cast<std::int64_t>(rep_->p);
  e.c[0] = static_cast<u64>(m);
  return e;
}

FElem Field::from_coeffs(const std::vector<u64>& coeffs) const {
  require(coeffs.size() <= rep_->n, errc::degree_mismatch,
          "too many coordinates for this field");
  FElem e = zero();
  for (size_t i = 0; i < coeffs.size(); ++i) e.c[i] = coeffs[i] % rep_->p;
  return e;
}

bool Field::is_zero(const FElem& a) const {
  return std::all_of(a.c.begin(), a.c.end(), [](u64 v) { return v == 0; });
}

bool Field::is_one(const FElem& a) const {
  if (a.c.empty() || a.c[0] != 1) return false;
  for (size_t i = 1; i < a.c.size(); ++i)
    if (a.c[i] != 0) return false;
  return true;
}

FElem Field::add(const FElem& a, const FElem& b) const {
  FElem r = a;
  for (unsigned i = 0; i < rep_->n; ++i) r.c[i] = addp(r.c[i], b.c[i], rep_->p);
  return r;
}

FElem Field::sub(const FElem& a, const FElem& b) const {
  FElem r = a;
  for (unsigned i = 0; i < rep_->n; ++i) r.c[i] = subp(r.c[i], b.c[i], rep_->p);
  return r;
}

FElem Field::neg(const FElem& a) const {
  FElem r = a;
  for (unsigned i = 0; i < rep_->n; ++i) r.c[i] = subp(0, r.c[i], rep_->p);
  return r;
}

FElem Field::mul(const FElem& a, const FElem& b) const {
  const u64 p = rep_->p;
  const unsigned n = rep_->n;
  if (n == 1) {
    FElem r = zero();
    r.c[0] = mulp(a.c[0], b.c[0], p);
    return r;
  }
  absl::InlinedVector<u64, 8> prod(2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (a.c[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j)
      prod[i + j] = addp(prod[i + j], mulp(a.c[i], b.c[j], p), p);
  }
  // reduce by the monic modulus
  for (int i = static_cast<int>(prod.size()) - 1; i >= static_cast<int>(n); --i) {
    u64 f = prod[i];
    if (f == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < n; ++j)
      prod[i - n + j] = subp(prod[i - n + j], mulp(f, rep_->modulus[j], p), p);
  }
  FElem r = zero();
  for (unsigned i = 0; i < n; ++i) r.c[i] = prod[i];
  return r;
}

FElem Field::inv(const FElem& a) const {
  require(!is_zero(a), errc::division_by_zero, "inverse of zero");
  const u64 p = rep_->p;
  if (rep_->n == 1) {
    FElem r = zero();
    r.c[0] = invp(a.c[0], p);
    return r;
  }
  // extended Euclid in Z_p[t] against the modulus
  ZPoly r0(rep_->modulus), r1(a.c.begin(), a.c.end());
  ztrim(r1);
  ZPoly s0{}, s1{1};
  while (!r1.empty()) {
    // divide r0 by r1
    ZPoly q;
    ZPoly rem = r0;
    u64 lcinv = invp(r1.back(), p);
    if (zdeg(rem) >= zdeg(r1)) q.resize(rem.size() - r1.size() + 1, 0);
    while (zdeg(rem) >= zdeg(r1)) {
      u64 f = mulp(rem.back(), lcinv, p);
      size_t shift = rem.size() - r1.size();
      q[shift] = f;
      for (size_t i = 0; i < r1.size(); ++i)
        rem[shift + i] = subp(rem[shift + i], mulp(f, r1[i], p), p);
      ztrim(rem);
    }
    ZPoly s2 = s0;  // s2 = s0 - q*s1
    ZPoly qs = zmul(q, s1, p);
    s2.resize(std::max(s2.size(), qs.size()), 0);
    for (size_t i = 0; i < qs.size(); ++i) s2[i] = subp(s2[i], qs[i], p);
    ztrim(s2);
    r0 = std::move(r1); r1 = std::move(rem);
    s0 = std::move(s1); s1 = std::move(s2);
  }
  require(zdeg(r0) == 0, errc::internal_inconsistency, "modulus not irreducible");
  u64 scale = invp(r0[0], p);
  FElem out = zero();
  for (size_t i = 0; i < s0.size(); ++i) out.c[i] = mulp(s0[i], scale, p);
  return out;
}

FElem Field::div(const FElem& a, const FElem& b) const { return mul(a, inv(b)); }

FElem Field::pow(const FElem& a, u64 e) const {
  FElem base = a, r = one();
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FElem Field::frob(const FElem& a) const { return pow(a, rep_->p); }

FElem Field::frob_root(const FElem& a) const {
  FElem r = a;
  for (unsigned i = 0; i + 1 < rep_->n; ++i) r = frob(r);
  return r;
}

bool Field::is_square(const FElem& a) const {
  if (rep_->p == 2 || is_zero(a)) return true;
  FElem t = pow(a, (order() - 1) / 2);
  return is_one(t);
}

FElem Field::sqrt(const FElem& a) const {
  if (is_zero(a)) return a;
  if (rep_->p == 2) {
    // squaring is bijective: root = a^(q/2)
    FElem r = a;
    u64 m = rep_->n;  // q = 2^n, apply n-1 squarings
    for (u64 i = 0; i + 1 < m; ++i) r = mul(r, r);
    return r;
  }
  require(is_square(a), errc::no_solution, "element is not a square");
  // desk-scale search, smallest index first
  u64 q = order();
  for (u64 i = 1; i < q; ++i) {
    FElem cand = elem_at(i);
    if (mul(cand, cand) == a) return cand;
  }
  fail(errc::internal_inconsistency, "square root not found");
}

FElem Field::elem_at(u64 index) const {
  FElem e = zero();
  for (unsigned i = 0; i < rep_->n; ++i) {
    e.c[i] = index % rep_->p;
    index /= rep_->p;
  }
  require(index == 0, errc::degree_mismatch, "element index out of range");
  return e;
}

u64 Field::index_of(const FElem& a) const {
  u64 idx = 0;
  for (unsigned i = rep_->n; i-- > 0;) idx = idx * rep_->p + a.c[i];
  return idx;
}

std::string Field::to_string(const FElem& a) const {
  if (rep_->n == 1) return std::to_string(a.c[0]);
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < rep_->n; ++i) {
    if (a.c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || a.c[i] != 1) os << a.c[i];
    if (i > 0 && a.c[i] != 1) os << "*";
    if (i == 1) os << "t";
    if (i > 1) os << "t^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace cubic
