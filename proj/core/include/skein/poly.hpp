#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace skein {

// Sparse polynomial in q and z with rational coefficients.
// Terms are kept sorted in graded-lex order (q > z), highest first.
class Poly {
public:
  struct Term {
    int dq = 0;
    int dz = 0;
    mpq_class c;
  };

  Poly() = default;
  Poly(long c);  // NOLINT: implicit on purpose, constants appear everywhere
  explicit Poly(const mpq_class& c);
  static Poly monomial(const mpq_class& c, int dq, int dz);
  static Poly q() { return monomial(1, 1, 0); }
  static Poly z() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int degree() const;
  int degree_q() const;
  int degree_z() const;
  int min_degree_q() const;
  int min_degree_z() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpq_class& c) const;
  Poly shifted(int dq, int dz) const;
  Poly pow(unsigned e) const;

  // Exact division; throws if b does not divide *this.
  Poly exact_div(const Poly& b) const;
  // Same polynomial scaled so the leading coefficient is 1.
  Poly monic() const;

  // Evaluation at rational points, used by property tests.
  mpq_class eval(const mpq_class& qv, const mpq_class& zv) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::size_t hash() const;
  // Expanded rendering, e.g. "q^2*z - 2*q + 1".
  std::string str() const;

  static Poly from_terms(std::vector<Term> terms);

private:
  void normalize();
  std::vector<Term> terms_;
};

// Greatest common divisor, normalized to leading coefficient 1 (0 if both zero).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace skein
