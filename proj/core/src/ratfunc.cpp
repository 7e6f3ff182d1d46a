#include "skein/ratfunc.hpp"

#include <algorithm>

#include "skein/error.hpp"

namespace skein {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero();
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  mpq_class lc = den_.leading().c;
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator-() const { return RatFunc(Raw{}, -num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFunc(RatFunc::Raw{}, a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ + b.num_, a.den_);
  }
  // monomial denominators: common denominator is the monomial lcm
  if (a.den_.is_monomial() && b.den_.is_monomial()) {
    const auto& ta = a.den_.leading();
    const auto& tb = b.den_.leading();
    int lq = std::max(ta.dq, tb.dq), lz = std::max(ta.dz, tb.dz);
    Poly n = a.num_.shifted(lq - ta.dq, lz - ta.dz) + b.num_.shifted(lq - tb.dq, lz - tb.dz);
    return RatFunc(n, Poly::monomial(1, lq, lz));
  }
  Poly g = gcd(a.den_, b.den_);
  Poly ad = a.den_.exact_div(g), bd = b.den_.exact_div(g);
  return RatFunc(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(RatFunc::Raw{}, a.num_ * b.num_, a.den_);
  if (a.den_.is_monomial() && b.den_.is_monomial())
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  // cross-cancel before multiplying to keep sizes down
  Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  Poly n = a.num_.exact_div(g1) * b.num_.exact_div(g2);
  Poly d = a.den_.exact_div(g2) * b.den_.exact_div(g1);
  mpq_class lc = d.leading().c;
  if (lc != 1) {
    n = n.scaled(1 / lc);
    d = d.scaled(1 / lc);
  }
  return RatFunc(RatFunc::Raw{}, n, d);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw DivisionByZero();
  RatFunc r(Raw{}, den_, num_);
  mpq_class lc = r.den_.leading().c;
  if (lc != 1) {
    r.num_ = r.num_.scaled(1 / lc);
    r.den_ = r.den_.scaled(1 / lc);
  }
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  return RatFunc(Raw{}, num_.pow(e), den_.pow(e));
}

mpq_class RatFunc::eval(const mpq_class& qv, const mpq_class& zv) const {
  mpq_class d = den_.eval(qv, zv);
  if (sgn(d) == 0) throw DivisionByZero();
  return num_.eval(qv, zv) / d;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace skein
