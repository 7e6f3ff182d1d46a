#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skein/braid_word.hpp"
#include "skein/scalar.hpp"

namespace skein {

// Product of descending runs (g_h g_{h-1} .. g_l), heads strictly increasing.
struct TypeAWord {
  struct Run {
    int head;
    int low;
  };
  std::vector<Run> runs;

  std::vector<int> letters() const;  // generator indices, left to right
  friend bool operator==(const TypeAWord&, const TypeAWord&) = default;
};

// Basis word X^a T_w of H_{1,n}(q). X_1 = t and X_{i+1} = q^-i t_i are the
// commuting Bernstein loops; w is a permutation in one-line notation (1-based).
// In the loop basis the same word is t^a T_w, scaled by q^(sum i*a_i).
struct NormalWord {
  std::vector<int> exps;
  std::vector<int> perm;

  int strands() const { return static_cast<int>(perm.size()); }
  // Nonzero loop exponents as (index, exponent), index 0 meaning t.
  std::vector<std::pair<int, int>> loops() const;
  TypeAWord tail() const;
  // Power of q relating X^a to t^a: t^a = q^weight X^a.
  int loop_weight() const;
  // Loop-basis rendering, e.g. "t^2 t1^-1 s2 s1"; "1" for the identity.
  std::string str() const;

  friend bool operator==(const NormalWord&, const NormalWord&) = default;
  friend bool operator<(const NormalWord& a, const NormalWord& b) {
    return a.exps != b.exps ? a.exps < b.exps : a.perm < b.perm;
  }
};

struct NormalWordHash {
  std::size_t operator()(const NormalWord& w) const;
};

std::vector<int> identity_perm(int n);
// Reduced word of a permutation in the run form of TypeAWord.
TypeAWord type_a_word(const std::vector<int>& perm);
int perm_length(const std::vector<int>& perm);

class AlgebraElement {
public:
  using TermMap = std::unordered_map<NormalWord, Scalar, NormalWordHash>;

  explicit AlgebraElement(int n = 1);
  static AlgebraElement identity(int n);
  static AlgebraElement word(const NormalWord& w, const Scalar& c = 1);
  // g_j^e, e may be negative
  static AlgebraElement generator(int n, int j, int e);
  // X_i^k with 1-based i
  static AlgebraElement bernstein(int n, int i, int k);
  // t_i^k with t_0 = t
  static AlgebraElement loop(int n, int i, int k);

  int strands() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(const NormalWord& w, const Scalar& c);
  // Coefficient of t^a T_w (loop basis) for a stored word.
  Scalar loop_coefficient(const NormalWord& w) const;
  // Terms sorted deterministically.
  std::vector<std::pair<NormalWord, Scalar>> sorted_terms() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  // Embedding into more strands (identity on the new ones).
  AlgebraElement embedded(int n) const;
  // "c1 * w1 + c2 * w2" in the loop basis; "0" if empty.
  std::string str() const;

private:
  int n_;
  TermMap terms_;
};

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement right_multiply_generator(const AlgebraElement& x, int j, int e);

// Image of a braid word in H_{1,n}(q), in normal form.
AlgebraElement to_algebra(const MixedBraidWord& wd);
// Normal form of a linear combination of words on n strands.
AlgebraElement reduce(const std::vector<std::pair<Scalar, MixedBraidWord>>& words, int n);

// One gap-closing step, equal to t_i^(eps*k) * a only up to conjugation:
// q^(eps(k-1)) t_{i-1}^(eps k) g_i^eps a g_i^eps
//   + sum_{u=1}^{k-1} q^(eps(u-1)) (q^eps - 1) t_{i-1}^(eps u) t_i^(eps(k-u)) a g_i^eps
AlgebraElement gap_rewrite(int index, int k, int eps, const AlgebraElement& a);

// Drops memoized products of the calling thread.
void clear_hecke_caches();

}  // namespace skein
