#include "cubicbasis/ratfunc.hpp"

namespace cubic {

RatFn::RatFn(const Poly& num, const Poly& den) {
  require(!den.is_zero(), errc::zero_denominator, "zero denominator");
  const Field& f = num.field();
  require(f == den.field(), errc::mixed_fields, "num/den field mismatch");
  if (num.is_zero()) {
    num_ = Poly::zero(f);
    den_ = Poly::one(f);
    return;
  }
  Poly g = gcd(num, den);
  Poly n = num / g, d = den / g;
  FElem lc = d.lead();
  if (!f.is_one(lc)) {
    FElem s = f.inv(lc);
    n = n.scaled(s);
    d = d.scaled(s);
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RatFn RatFn::operator-() const { return RatFn(-num_, den_); }

RatFn RatFn::operator+(const RatFn& o) const {
  return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const {
  return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn& o) const {
  return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const {
  require(!o.is_zero(), errc::division_by_zero, "division by zero");
  return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::inverse() const {
  require(!is_zero(), errc::division_by_zero, "inverse of zero");
  return RatFn(den_, num_);
}

RatFn RatFn::scaled(const FElem& s) const { return RatFn(num_.scaled(s), den_); }

RatFn RatFn::pow(int e) const {
  if (e == 0) return RatFn::one(field());
  RatFn base = e > 0 ? *this : inverse();
  unsigned k = static_cast<unsigned>(e > 0 ? e : -e);
  RatFn r = RatFn::one(field());
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool RatFn::operator==(const RatFn& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

std::string RatFn::str() const {
  if (is_poly()) return num_.str();
  std::string n = num_.str(), d = den_.str();
  auto wrap = [](const std::string& s) {
    return s.find('+') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(n) + "/" + wrap(d);
}

RatFn cubic_disc(const RatFn& b, const RatFn& c, const RatFn& d) {
  const Field& f = b.field();
  auto k = [&](std::int64_t v) { return RatFn(Poly::constant(f, f.from_int(v))); };
  return b * b * c * c - k(4) * c * c * c - k(4) * b * b * b * d -
         k(27) * d * d + k(18) * b * c * d;
}

}  // namespace cubic
