#pragma once

#include <compare>
#include <string>
#include <vector>

#include "skein/braid_word.hpp"
#include "skein/trace.hpp"

namespace skein {

// Gap-free loop monomial t^{k0} t_1^{k1} .. t_m^{km}, all exponents nonzero.
// primed selects t'_i letters instead of t_i.
struct LambdaMonomial {
  std::vector<int> exponents;
  bool primed = false;

  long exponent_sum() const;
  int index() const { return static_cast<int>(exponents.size()) - 1; }
  // member of the ordered basis: k_i >= k_{i+1}
  bool is_ordered() const;
  MixedBraidWord word() const;
  std::string str() const;

  friend bool operator==(const LambdaMonomial&, const LambdaMonomial&) = default;
};

// Exponent sum, then highest index, then exponents compared from the top
// loop down (smaller |k| is smaller; on equal |k| the larger k is smaller).
std::strong_ordering cmp_lambda(const LambdaMonomial& a, const LambdaMonomial& b);

// Level, then number of factors, then largest |index|, then the index
// lists sorted descending: at the first difference the smaller entry wins
// the larger monomial.
std::strong_ordering cmp_s(const SMonomial& u, const SMonomial& v);

// All gap-free monomials with m <= max_index, 0 < |k_i| <= max_exp and
// exponent sum k, ascending under cmp_lambda.
std::vector<LambdaMonomial> enumerate_lambda_aug(int k, int max_index, int max_exp);

// s_{k0} s_{k1} .. s_{km}
SMonomial trace_image(const LambdaMonomial& m);

SMonomial min_of_level(int k);
SMonomial max_of_level(int k);

std::string to_string(std::strong_ordering o);

}  // namespace skein
