#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skein/braid_word.hpp"
#include "skein/hecke.hpp"
#include "skein/scalar.hpp"

namespace skein {

// Product of trace parameters s_k: multiset of nonzero indices.
// The empty multiset is s_0 = 1.
class SMonomial {
public:
  SMonomial() = default;
  // Zero indices are dropped (s_0 = 1).
  static SMonomial from_indices(const std::vector<int>& indices);
  static SMonomial single(int k) { return from_indices({k}); }

  // (index, multiplicity), indices ascending
  const std::vector<std::pair<int, int>>& factors() const { return factors_; }
  // indices with repetition, ascending
  std::vector<int> indices() const;
  bool is_one() const { return factors_.empty(); }
  // sum of index * multiplicity
  long level() const;
  // total multiplicity
  int degree() const;
  // largest |index|, -1 for the empty monomial
  int max_abs_index() const;

  friend SMonomial operator*(const SMonomial& a, const SMonomial& b);
  friend bool operator==(const SMonomial&, const SMonomial&) = default;
  // canonical encoding order: lexicographic on (index, multiplicity) pairs
  friend bool operator<(const SMonomial& a, const SMonomial& b) { return a.factors_ < b.factors_; }

  std::size_t hash() const;
  // "s-1 s1^2"; "1" when empty
  std::string str() const;

private:
  std::vector<std::pair<int, int>> factors_;
};

// s-monomial syntax: space-separated factors such as "s-5 s1 s1 s3" (also
// "s1^2"); "1" or the empty string is the unit.
SMonomial parse_smonomial(std::string_view text);

class TraceValue {
public:
  using TermMap = std::map<SMonomial, Scalar>;

  TraceValue() = default;
  TraceValue(const SMonomial& m, const Scalar& c) { add(m, c); }
  static TraceValue one() { return TraceValue(SMonomial(), Scalar(1)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const SMonomial& m) const;
  void add(const SMonomial& m, const Scalar& c);

  TraceValue& operator+=(const TraceValue& o);
  TraceValue& operator-=(const TraceValue& o);
  TraceValue& operator*=(const Scalar& c);
  friend TraceValue operator+(TraceValue a, const TraceValue& b) { return a += b; }
  friend TraceValue operator-(TraceValue a, const TraceValue& b) { return a -= b; }
  friend TraceValue operator*(TraceValue a, const Scalar& c) { return a *= c; }
  // multiplication by a monomial
  TraceValue times(const SMonomial& m) const;
  friend bool operator==(const TraceValue&, const TraceValue&) = default;

  // "coeff * s1^2 s3 + ..." in canonical monomial order; "0" if empty
  std::string str() const;

private:
  TermMap terms_;
};

TraceValue markov_trace(const AlgebraElement& x);
TraceValue markov_trace(const MixedBraidWord& wd);
// Delta^(n-1) (sqrt lambda)^e tr(wd), e the exponent sum
TraceValue invariant_X(const MixedBraidWord& wd);

// Closed-form recursions for tr(t^p t_1^k g_1^sign) and tr(t^p t_1^k);
// kept independent of markov_trace for cross-checking. k >= 1.
TraceValue oracle_tr_tp_t1k_g1(int p, int k, int sign);
TraceValue oracle_tr_tp_t1k(int p, int k);

void clear_trace_caches();

}  // namespace skein
