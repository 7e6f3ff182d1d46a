#include "doctest.h"
#include "support.hpp"

#include "skein/braid_word.hpp"
#include "skein/error.hpp"

using namespace skein;
using namespace skein::testing;

namespace {

std::size_t parse_error_position(const std::string& text) {
  try {
    parse_word(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for: " << text);
  return 0;
}

// t^{k0} t1^{k1} ... tm^{km}
MixedBraidWord loop_word(const std::vector<int>& k) {
  MixedBraidWord wd{static_cast<int>(k.size()), {}};
  for (std::size_t i = 0; i < k.size(); ++i)
    wd.letters.push_back({i == 0 ? LetterKind::T : LetterKind::TLoop, static_cast<int>(i), k[i]});
  return wd;
}

}  // namespace

TEST_CASE("parse: letters, exponents and strand count") {
  auto wd = parse_word("t^2 t1^3 s1^-1");
  CHECK(wd.n == 2);
  REQUIRE(wd.letters.size() == 3);
  CHECK(wd.letters[0] == Letter{LetterKind::T, 0, 2});
  CHECK(wd.letters[1] == Letter{LetterKind::TLoop, 1, 3});
  CHECK(wd.letters[2] == Letter{LetterKind::Sigma, 1, -1});

  auto id = parse_word("");
  CHECK(id.letters.empty());
  CHECK(id.n == 1);

  auto pr = parse_word("t1'^-2");
  REQUIRE(pr.letters.size() == 1);
  CHECK(pr.letters[0] == Letter{LetterKind::TLoopPrime, 1, -2});

  CHECK(parse_word("s3").n == 4);
  CHECK(parse_word("t", 3).n == 3);
  CHECK(parse_word("  t  s1 ").letters.size() == 2);
}

TEST_CASE("parse errors carry a position") {
  CHECK(parse_error_position("t x") == 2);
  CHECK(parse_error_position("s0") == 1);
  CHECK(parse_error_position("t^") == 2);
  CHECK(parse_error_position("t^0") == 2);
  CHECK_THROWS_WITH_AS(parse_word("t^0"), doctest::Contains("zero exponent"), ParseError);
  CHECK_THROWS_AS(parse_word("s3", 2), InputError);
  CHECK_THROWS_AS(parse_word("t2'", 2), InputError);
}

TEST_CASE("render and parse round-trip") {
  for (int trial = 0; trial < 200; ++trial) {
    int n = uniform(1, 4);
    auto wd = random_word(n, uniform(0, 8));
    auto back = parse_word(render(wd), n);
    CHECK(back == wd);
  }
  CHECK(render(parse_word("t^-1 t2' s1")) == "t^-1 t2' s1");
  CHECK(render(parse_word("")) == "");
}

TEST_CASE("loop expansion") {
  CHECK(render(expand_loops(parse_word("t1"))) == "s1 t s1");
  CHECK(render(expand_loops(parse_word("t1'^-1"))) == "s1 t^-1 s1^-1");
  CHECK(render(expand_loops(parse_word("t"))) == "t");
  CHECK(render(expand_loops(parse_word("t2"))) == "s2 s1 t s1 s2");
  // t'_i^k collapses to a conjugate of t^k
  CHECK(render(expand_loops(parse_word("t1'^3"))) == "s1 t^3 s1^-1");
  for (auto& l : expand_loops(parse_word("t2^2 t1'^-1 s1")).letters)
    CHECK((l.kind == LetterKind::T || l.kind == LetterKind::Sigma));
}

TEST_CASE("loop expansion is multiplicative") {
  for (int trial = 0; trial < 100; ++trial) {
    int n = uniform(1, 4);
    auto u = random_word(n, uniform(0, 5)), v = random_word(n, uniform(0, 5));
    CHECK(expand_loops(concat(u, v)) == free_reduce(concat(expand_loops(u), expand_loops(v))));
  }
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sum(parse_word("")) == 0);
  for (int k = -3; k <= 3; ++k) {
    if (k == 0) continue;
    CHECK(exponent_sum(bbm(loop_word({k}), 1)) == 2 * k + 1);
    CHECK(exponent_sum(bbm(loop_word({k}), -1)) == 2 * k - 1);
  }
  for (int trial = 0; trial < 100; ++trial) {
    int m = uniform(0, 3);
    std::vector<int> k(m + 1);
    for (auto& x : k) x = nonzero(3);
    long e1 = 0, e2 = 0;
    for (int i = 0; i <= m; ++i) {
      e1 += 2L * i * k[i];
      e2 += 2L * (i + 1) * k[i];
    }
    auto tau = loop_word(k);
    CHECK(exponent_sum(tau) == e1);
    int s = uniform(0, 1) ? 1 : -1;
    CHECK(exponent_sum(bbm(tau, s)) == e2 + s);
  }
}

TEST_CASE("braid band move shifts indices and appends sigma_1") {
  auto a = bbm(parse_word("t^3"), 1);
  CHECK(a.n == 2);
  CHECK(render(a) == "t1^3 s1");
  CHECK(render(bbm(parse_word("t^2 t1^-1"), 1)) == "t1^2 t2^-1 s1");
  auto u = bbm(parse_word(""), -1);
  CHECK(u.n == 2);
  CHECK(render(u) == "s1^-1");
  CHECK(render(bbm(parse_word("s1 s2"), 1)) == "s2 s3 s1");
  CHECK_THROWS_AS(bbm(parse_word("t"), 0), InputError);
}

TEST_CASE("Markov moves as words") {
  CHECK(render(conjugate(parse_word("s1"), parse_word("s1"))) == "s1^-1 s1 s1");
  auto st = stabilize(parse_word("t"), 1);
  CHECK(st.n == 2);
  CHECK(render(st) == "t s1");
  CHECK(render(stabilize(parse_word("t s1"), -1)) == "t s1 s2^-1");
  CHECK(render(loop_conjugate(parse_word("s1"), 1)) == "t s1 t^-1");
  CHECK(render(loop_conjugate(parse_word("s1"), -1)) == "t^-1 s1 t");
}

TEST_CASE("inverse and free reduction") {
  for (int trial = 0; trial < 100; ++trial) {
    auto wd = random_word(uniform(1, 4), uniform(0, 8), false);
    CHECK(free_reduce(concat(wd, inverse(wd))).letters.empty());
  }
  CHECK(render(free_reduce(parse_word("t t^-1 s1 s1"))) == "s1^2");
}
