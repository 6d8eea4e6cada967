#include "cubicbasis/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cubic {

void Poly::trim() {
  while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  require(field_ == o.field_, errc::mixed_fields,
          "operands live in different fields");
}

Poly Poly::x(const Field& f) {
  Poly r(f);
  r.coeffs_ = {f.zero(), f.one()};
  return r;
}

Poly Poly::constant(const Field& f, const FElem& c) {
  Poly r(f);
  if (!f.is_zero(c)) r.coeffs_ = {c};
  return r;
}

Poly Poly::from_coeffs(const Field& f, std::vector<FElem> coeffs) {
  Poly r(f);
  r.coeffs_ = std::move(coeffs);
  r.trim();
  return r;
}

Poly Poly::from_ints(const Field& f, std::initializer_list<std::int64_t> coeffs) {
  Poly r(f);
  for (auto v : coeffs) r.coeffs_.push_back(f.from_int(v));
  r.trim();
  return r;
}

bool Poly::is_one() const {
  return coeffs_.size() == 1 && field_.is_one(coeffs_[0]);
}

bool Poly::is_monic() const {
  return !coeffs_.empty() && field_.is_one(coeffs_.back());
}

FElem Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_.zero();
  return coeffs_[i];
}

const FElem& Poly::lead() const {
  require(!coeffs_.empty(), errc::zero_polynomial, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero() || field_.is_one(coeffs_.back())) return *this;
  return scaled(field_.inv(coeffs_.back()));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = field_.neg(c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  Poly r(field_);
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), field_.zero());
  for (size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] = field_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_same(o);
  Poly r(field_);
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), field_.zero());
  for (size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] = field_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Poly(field_);
  Poly r(field_);
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (field_.is_zero(coeffs_[i])) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] =
          field_.add(r.coeffs_[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const FElem& s) const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = field_.mul(c, s);
  r.trim();
  return r;
}

Poly Poly::shifted(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  Poly r(field_);
  r.coeffs_.assign(k, field_.zero());
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::one(field_), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  a.check_same(b);
  require(!b.is_zero(), errc::division_by_zero, "polynomial division by zero");
  const Field& f = a.field_;
  Poly q(f), r = a;
  if (a.degree() >= b.degree())
    q.coeffs_.assign(a.degree() - b.degree() + 1, f.zero());
  FElem lcinv = f.inv(b.lead());
  while (r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    FElem fct = f.mul(r.lead(), lcinv);
    q.coeffs_[shift] = fct;
    for (size_t i = 0; i < b.coeffs_.size(); ++i)
      r.coeffs_[shift + i] =
          f.sub(r.coeffs_[shift + i], f.mul(fct, b.coeffs_[i]));
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly Poly::operator/(const Poly& o) const { return divrem(*this, o).first; }
Poly Poly::operator%(const Poly& o) const { return divrem(*this, o).second; }

Poly Poly::derivative() const {
  Poly r(field_);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    r.coeffs_.push_back(field_.mul(coeffs_[i], field_.from_int(static_cast<std::int64_t>(i))));
  r.trim();
  return r;
}

FElem Poly::eval(const FElem& v) const {
  FElem acc = field_.zero();
  for (size_t i = coeffs_.size(); i-- > 0;)
    acc = field_.add(field_.mul(acc, v), coeffs_[i]);
  return acc;
}

bool Poly::operator==(const Poly& o) const {
  return field_ == o.field_ && coeffs_ == o.coeffs_;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  bool ext = field_.n() > 1;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (field_.is_zero(coeffs_[i])) continue;
    if (!first) os << "+";
    first = false;
    bool unit = field_.is_one(coeffs_[i]);
    std::string cs = field_.to_string(coeffs_[i]);
    bool needs_parens = ext && cs.find('+') != std::string::npos;
    if (i == 0) {
      os << (needs_parens ? "(" + cs + ")" : cs);
      continue;
    }
    if (!unit) os << (needs_parens ? "(" + cs + ")" : cs) << "*";
    os << (i == 1 ? "x" : "x^" + std::to_string(i));
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  require(!(a.is_zero() && b.is_zero()), errc::both_zero, "gcd(0, 0)");
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = u % v;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
  require(!(a.is_zero() && b.is_zero()), errc::both_zero, "xgcd(0, 0)");
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(f), s1 = Poly::zero(f);
  Poly t0 = Poly::zero(f), t1 = Poly::one(f);
  while (!r1.is_zero()) {
    auto [q, r2] = Poly::divrem(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  FElem scale = f.inv(r0.lead());
  return {r0.scaled(scale), s0.scaled(scale), t0.scaled(scale)};
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::one(base.field());
  Poly b = base % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

Poly powmod_q(const Poly& base, const Poly& m) {
  Poly r = base % m;
  for (unsigned i = 0; i < base.field().n(); ++i)
    r = powmod(r, base.field().p(), m);
  return r;
}

int multiplicity(const Poly& a, const Poly& prime) {
  require(!a.is_zero(), errc::zero_polynomial, "multiplicity in zero polynomial");
  int count = 0;
  Poly cur = a;
  while (cur.degree() >= prime.degree()) {
    auto [q, r] = Poly::divrem(cur, prime);
    if (!r.is_zero()) break;
    ++count;
    cur = std::move(q);
  }
  return count;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const Field& f = a.field();
  for (int i = a.degree(); i >= 0; --i) {
    auto ia = f.index_of(a.coeff(i)), ib = f.index_of(b.coeff(i));
    if (ia != ib) return ia < ib;
  }
  return false;
}

}  // namespace cubic
