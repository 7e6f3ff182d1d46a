#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skein/ratfunc.hpp"

namespace skein {

// a + b*w in Q(q,z)[w]/(w^2 - lambda), lambda = (z+1-q)/(q z).
class Scalar {
public:
  Scalar() = default;
  Scalar(long c) : a_(c) {}  // NOLINT
  Scalar(const RatFunc& a) : a_(a) {}  // NOLINT
  Scalar(const Poly& a) : a_(a) {}  // NOLINT
  Scalar(const RatFunc& a, const RatFunc& b) : a_(a), b_(b) {}

  static Scalar q() { return RatFunc::q(); }
  static Scalar z() { return RatFunc::z(); }
  static Scalar w() { return Scalar(RatFunc(0), RatFunc(1)); }

  const RatFunc& rational_part() const { return a_; }
  const RatFunc& w_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool has_w() const { return !b_.is_zero(); }

  Scalar operator-() const { return Scalar(-a_, -b_); }
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inv() const;
  Scalar pow(int e) const;

  friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  std::size_t hash() const { return a_.hash() * 131 + b_.hash(); }

  // Common-denominator form (A + B*w)/D; numerator and denominator rendered
  // separately, expanded in graded-lex order q > z > w.
  struct Fraction {
    std::string num;
    std::string den;
  };
  Fraction fraction() const;
  std::string str() const;

private:
  RatFunc a_;
  RatFunc b_;
};

Scalar add(const Scalar& x, const Scalar& y);
Scalar mul(const Scalar& x, const Scalar& y);
Scalar neg(const Scalar& x);
Scalar inv(const Scalar& x);
bool eq(const Scalar& x, const Scalar& y);

const RatFunc& lambda();
// -(1 - lambda q)/(sqrt(lambda) (1 - q)); equals 1/(z w).
const Scalar& delta();
Scalar sqrt_lambda_pow(int e);

// Renders sum c_i * basis_i, e.g. "(q - 1) * t1 s1 + q * t1"; basis "1" is
// printed as the bare coefficient. "0" for an empty list.
std::string render_combination(const std::vector<std::pair<Scalar, std::string>>& terms);

}  // namespace skein
