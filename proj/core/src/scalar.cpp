#include "skein/scalar.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

#include "skein/error.hpp"

namespace skein {

Scalar operator+(const Scalar& x, const Scalar& y) {
  if (x.b_.is_zero() && y.b_.is_zero()) return Scalar(x.a_ + y.a_);
  return Scalar(x.a_ + y.a_, x.b_ + y.b_);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  if (x.b_.is_zero() && y.b_.is_zero()) return Scalar(x.a_ - y.a_);
  return Scalar(x.a_ - y.a_, x.b_ - y.b_);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.b_.is_zero() && y.b_.is_zero()) return Scalar(x.a_ * y.a_);
  if (x.b_.is_zero()) return Scalar(x.a_ * y.a_, x.a_ * y.b_);
  if (y.b_.is_zero()) return Scalar(x.a_ * y.a_, x.b_ * y.a_);
  return Scalar(x.a_ * y.a_ + x.b_ * y.b_ * lambda(), x.a_ * y.b_ + x.b_ * y.a_);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (b_.is_zero()) return Scalar(a_.inv());
  // (a + b w)^-1 = (a - b w)/(a^2 - b^2 lambda)
  RatFunc norm = a_ * a_ - b_ * b_ * lambda();
  RatFunc ni = norm.inv();
  return Scalar(a_ * ni, -b_ * ni);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  Scalar r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Scalar::Fraction Scalar::fraction() const {
  Poly den = a_.den();
  if (!b_.is_zero() && b_.den() != den) {
    Poly g = gcd(den, b_.den());
    den = den * b_.den().exact_div(g);
  }
  Poly an = a_.num() * den.exact_div(a_.den());
  Poly bn = b_.is_zero() ? Poly() : b_.num() * den.exact_div(b_.den());

  struct T {
    int dq, dz, dw;
    mpq_class c;
  };
  std::vector<T> terms;
  for (auto& t : an.terms()) terms.push_back({t.dq, t.dz, 0, t.c});
  for (auto& t : bn.terms()) terms.push_back({t.dq, t.dz, 1, t.c});
  std::sort(terms.begin(), terms.end(), [](const T& x, const T& y) {
    int dx = x.dq + x.dz + x.dw, dy = y.dq + y.dz + y.dw;
    return std::make_tuple(dx, x.dq, x.dz) > std::make_tuple(dy, y.dq, y.dz);
  });
  std::string num;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const T& t = terms[i];
    mpq_class c = abs(t.c);
    bool neg = sgn(t.c) < 0;
    std::string mono;
    auto var = [&mono](const char* v, int d) {
      if (d == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (d > 1) mono += "^" + std::to_string(d);
    };
    var("q", t.dq);
    var("z", t.dz);
    var("w", t.dw);
    std::string body = mono.empty() ? c.get_str() : (c == 1 ? mono : c.get_str() + "*" + mono);
    if (i == 0) num += neg ? "-" + body : body;
    else num += (neg ? " - " : " + ") + body;
  }
  if (num.empty()) num = "0";
  return {num, den.str()};
}

std::string Scalar::str() const {
  Fraction f = fraction();
  if (f.den == "1") return f.num;
  return "(" + f.num + ")/(" + f.den + ")";
}

Scalar add(const Scalar& x, const Scalar& y) { return x + y; }
Scalar mul(const Scalar& x, const Scalar& y) { return x * y; }
Scalar neg(const Scalar& x) { return -x; }
Scalar inv(const Scalar& x) { return x.inv(); }
bool eq(const Scalar& x, const Scalar& y) { return x == y; }

const RatFunc& lambda() {
  static const RatFunc value(Poly::z() + Poly(1) - Poly::q(), Poly::monomial(1, 1, 1));
  return value;
}

const Scalar& delta() {
  static const Scalar value = [] {
    Scalar one_minus_lq = Scalar(1) - Scalar(lambda() * RatFunc::q());
    Scalar denom = Scalar::w() * Scalar(RatFunc(1) - RatFunc::q());
    return -(one_minus_lq / denom);
  }();
  return value;
}

Scalar sqrt_lambda_pow(int e) {
  int half = e >= 0 ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
  RatFunc base = lambda().pow(half);
  if (e - 2 * half == 0) return Scalar(base);
  return Scalar(RatFunc(0), base);
}

std::string render_combination(const std::vector<std::pair<Scalar, std::string>>& terms) {
  std::string s;
  for (auto& [c, basis] : terms) {
    if (c.is_zero()) continue;
    bool neg = false;
    Scalar shown = c;
    // pull a leading minus out of single-term coefficients
    if (!c.has_w() && c.rational_part().num().is_monomial() &&
        sgn(c.rational_part().num().leading().c) < 0) {
      neg = true;
      shown = -c;
    }
    Scalar::Fraction f = shown.fraction();
    std::string cs = shown.str();
    if (f.den == "1" && cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
    std::string term;
    if (basis == "1") term = cs;
    else if (shown.is_one()) term = basis;
    else term = cs + " * " + basis;
    if (s.empty()) s = neg ? "-" + term : term;
    else s += (neg ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

}  // namespace skein
