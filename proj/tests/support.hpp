#pragma once

#include <random>
#include <string>

#include "skein/braid_word.hpp"
#include "skein/scalar.hpp"
#include "skein/trace.hpp"

namespace skein::testing {

// fixed seeds keep failures reproducible
inline std::mt19937& rng() {
  static std::mt19937 gen(20240531u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline int nonzero(int bound) {
  int v = uniform(1, bound);
  return uniform(0, 1) ? v : -v;
}

inline Poly random_poly(int max_deg = 2, int coeff = 3) {
  Poly p;
  int terms = uniform(1, 3);
  for (int i = 0; i < terms; ++i) {
    int dq = uniform(0, max_deg), dz = uniform(0, max_deg - dq);
    p += Poly::monomial(uniform(-coeff, coeff), dq, dz);
  }
  return p;
}

inline RatFunc random_ratfunc() {
  Poly den;
  while (den.is_zero()) den = random_poly();
  return RatFunc(random_poly(), den);
}

inline Scalar random_scalar() {
  return uniform(0, 2) ? Scalar(random_ratfunc(), random_ratfunc()) : Scalar(random_ratfunc());
}

inline Scalar random_nonzero_scalar() {
  Scalar s;
  while (s.is_zero()) s = random_scalar();
  return s;
}

// Random mixed braid word: t, sigma and loop letters with small exponents.
inline MixedBraidWord random_word(int n, int length, bool loops = true) {
  MixedBraidWord wd{n, {}};
  for (int i = 0; i < length; ++i) {
    int pick = uniform(0, n == 1 ? 0 : (loops ? 3 : 1));
    Letter l;
    switch (pick) {
      case 0: l = {LetterKind::T, 0, nonzero(2)}; break;
      case 1: l = {LetterKind::Sigma, uniform(1, n - 1), nonzero(1)}; break;
      case 2: l = {LetterKind::TLoop, uniform(1, n - 1), nonzero(1)}; break;
      default: l = {LetterKind::TLoopPrime, uniform(1, n - 1), nonzero(1)}; break;
    }
    wd.letters.push_back(l);
  }
  return wd;
}

inline SMonomial random_smonomial(int max_index = 6, int max_degree = 5) {
  std::vector<int> idx;
  int d = uniform(1, max_degree);
  for (int i = 0; i < d; ++i) idx.push_back(nonzero(max_index));
  return SMonomial::from_indices(idx);
}

inline Scalar q() { return Scalar::q(); }
inline Scalar z() { return Scalar::z(); }
inline Scalar lam() { return Scalar(lambda()); }

}  // namespace skein::testing
