#pragma once

#include <string>

#include "skein/poly.hpp"

namespace skein {

// Element of Q(q,z): reduced fraction, denominator with leading coefficient 1.
class RatFunc {
public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc q() { return Poly::q(); }
  static RatFunc z() { return Poly::z(); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool has_monomial_den() const { return den_.is_monomial(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc inv() const;
  RatFunc pow(int e) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  mpq_class eval(const mpq_class& qv, const mpq_class& zv) const;
  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }
  // "num" or "(num)/(den)"
  std::string str() const;

private:
  struct Raw {};
  RatFunc(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();
  Poly num_;
  Poly den_;
};

}  // namespace skein
