#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skein {

enum class LetterKind { T, Sigma, TLoop, TLoopPrime };

struct Letter {
  LetterKind kind = LetterKind::T;
  int index = 0;     // 0 for T, 1..n-1 for Sigma, 1..n-1 for loops
  int exponent = 1;  // nonzero

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Word on one fixed strand plus n moving strands.
struct MixedBraidWord {
  int n = 1;
  std::vector<Letter> letters;

  friend bool operator==(const MixedBraidWord&, const MixedBraidWord&) = default;
};

// Smallest strand count that accommodates a letter.
int strands_needed(const Letter& l);

// Grammar: word := ws? (term ws?)*, term := base ("^" int)?,
// base := "t" | "t" nat | "t" nat "'" | "s" nat.
// Without `strands` the count is the largest index plus one.
MixedBraidWord parse_word(std::string_view text, std::optional<int> strands = std::nullopt);
std::string render(const MixedBraidWord& wd);
std::string render(const Letter& l);

MixedBraidWord concat(const MixedBraidWord& a, const MixedBraidWord& b);
MixedBraidWord inverse(const MixedBraidWord& wd);
// Merges adjacent letters with the same generator and drops zero exponents.
MixedBraidWord free_reduce(const MixedBraidWord& wd);

// Only T and Sigma letters remain; loops are spelled out.
MixedBraidWord expand_loops(const MixedBraidWord& wd);
// Sum of Sigma exponents after expand_loops.
long exponent_sum(const MixedBraidWord& wd);

// Braid band move on the first moving strand: indices shift up by one
// and sigma_1^sign is appended.
MixedBraidWord bbm(const MixedBraidWord& wd, int sign);
// g^-1 wd g
MixedBraidWord conjugate(const MixedBraidWord& wd, const MixedBraidWord& g);
// wd sigma_n^sign on n+1 strands
MixedBraidWord stabilize(const MixedBraidWord& wd, int sign);
// t^sign wd t^-sign
MixedBraidWord loop_conjugate(const MixedBraidWord& wd, int sign);

}  // namespace skein
