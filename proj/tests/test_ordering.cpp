#include "doctest.h"
#include "support.hpp"

#include <algorithm>
#include <set>

#include "skein/error.hpp"
#include "skein/ordering.hpp"

using namespace skein;
using namespace skein::testing;

namespace {

SMonomial S(const std::string& text) { return parse_smonomial(text); }
LambdaMonomial L(std::vector<int> k, bool primed = false) { return {std::move(k), primed}; }

// every gap-free exponent vector with the given bounds, no sorting
std::vector<LambdaMonomial> brute_force(int k, int M, int E) {
  std::vector<LambdaMonomial> out;
  for (int m = 0; m <= M; ++m) {
    std::vector<int> cur(m + 1, -E);
    while (true) {
      long sum = 0;
      bool ok = true;
      for (int x : cur) {
        sum += x;
        ok = ok && x != 0;
      }
      if (ok && sum == k) out.push_back(L(cur));
      int i = 0;
      while (i <= m && cur[i] == E) cur[i++] = -E;
      if (i > m) break;
      ++cur[i];
    }
  }
  return out;
}

std::vector<LambdaMonomial> ordered_primed(int k, int M, int E) {
  std::vector<LambdaMonomial> out;
  for (auto m : enumerate_lambda_aug(k, M, E))
    if (m.is_ordered()) {
      m.primed = true;
      out.push_back(m);
    }
  return out;
}

}  // namespace

TEST_CASE("loop monomial order examples") {
  CHECK(cmp_lambda(L({1}), L({2})) < 0);
  CHECK(cmp_lambda(L({2}, true), L({1, 1}, true)) < 0);
  // equal sum and index: top exponents -1 vs 2, the smaller absolute value is smaller
  CHECK(cmp_lambda(L({2, -1}, true), L({-1, 2}, true)) < 0);
  // equal absolute value: the positive exponent is smaller
  CHECK(cmp_lambda(L({-1, 2}), L({3, -2})) < 0);
  CHECK(cmp_lambda(L({1, 2, -1}), L({1, 2, -1})) == 0);
  CHECK_THROWS_AS(cmp_lambda(L({1}, true), L({1})), Error);
}

TEST_CASE("loop monomial order is a total order on gap-free monomials") {
  auto all = enumerate_lambda_aug(1, 2, 2);
  for (auto& a : all)
    for (auto& b : all) {
      CHECK((cmp_lambda(a, b) == 0) == (a == b));
      CHECK(cmp_lambda(a, b) == (0 <=> cmp_lambda(b, a)));
    }
  for (int trial = 0; trial < 2000; ++trial) {
    auto& a = all[uniform(0, static_cast<int>(all.size()) - 1)];
    auto& b = all[uniform(0, static_cast<int>(all.size()) - 1)];
    auto& c = all[uniform(0, static_cast<int>(all.size()) - 1)];
    if (cmp_lambda(a, b) <= 0 && cmp_lambda(b, c) <= 0) CHECK(cmp_lambda(a, c) <= 0);
  }
}

TEST_CASE("s-monomial order examples") {
  CHECK(cmp_s(S("s1 s3^2"), S("s2^2 s3 s4")) < 0);
  CHECK(cmp_s(S("s2^2"), S("s1^2 s2")) < 0);
  CHECK(cmp_s(S("s1^2 s2"), S("s1^4")) < 0);
  CHECK(cmp_s(S("s2 s2"), S("s1 s3")) < 0);
  CHECK(cmp_s(S("s-5 s1 s4 s5"), S("s-5 s3^2 s4")) < 0);
  CHECK(cmp_s(S("s-5 s1 s4 s5"), S("s-5 s2 s3 s5")) < 0);
  CHECK(cmp_s(S("s-2 s1 s1 s3"), S("s-2 s1 s1 s3")) == 0);
}

TEST_CASE("s-monomial order laws on random triples") {
  for (int trial = 0; trial < 10000; ++trial) {
    auto a = random_smonomial(), b = random_smonomial(), c = random_smonomial();
    CHECK((cmp_s(a, b) == 0) == (a == b));
    CHECK(cmp_s(a, b) == (0 <=> cmp_s(b, a)));
    if (cmp_s(a, b) <= 0 && cmp_s(b, c) <= 0) CHECK(cmp_s(a, c) <= 0);
  }
}

TEST_CASE("s_k is the least element of its level") {
  for (int k = -5; k <= 5; ++k) CHECK(min_of_level(k) == SMonomial::single(k));
  CHECK(min_of_level(0).is_one());
  CHECK(min_of_level(3) == S("s3"));
  CHECK(max_of_level(3) == S("s1^3"));
  CHECK(min_of_level(1) == max_of_level(1));
  CHECK_THROWS(max_of_level(0));
  for (int trial = 0; trial < 3000; ++trial) {
    auto u = random_smonomial();
    CHECK(cmp_s(min_of_level(static_cast<int>(u.level())), u) <= 0);
  }
}

TEST_CASE("largest element of positive levels") {
  for (int trial = 0; trial < 3000; ++trial) {
    auto u = random_smonomial(4, 5);
    bool positive = true;
    for (int i : u.indices()) positive = positive && i > 0;
    if (!positive) continue;
    CHECK(cmp_s(u, max_of_level(static_cast<int>(u.level()))) <= 0);
  }
}

TEST_CASE("enumeration examples") {
  auto one = enumerate_lambda_aug(1, 0, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].str() == "t");
  auto zero = enumerate_lambda_aug(0, 1, 1);
  REQUIRE(zero.size() == 2);
  CHECK(zero[0].str() == "t^-1 t1");
  CHECK(zero[1].str() == "t t1^-1");
  std::vector<std::string> two;
  for (auto& m : enumerate_lambda_aug(2, 1, 2)) two.push_back(m.str());
  CHECK(two == std::vector<std::string>{"t^2", "t t1"});
  CHECK_THROWS_AS(enumerate_lambda_aug(1, -1, 1), InputError);
}

TEST_CASE("enumeration matches brute force") {
  for (int k = -3; k <= 4; ++k)
    for (int M = 0; M <= 2; ++M)
      for (int E = 1; E <= 3; ++E) {
        auto got = enumerate_lambda_aug(k, M, E);
        auto want = brute_force(k, M, E);
        std::set<std::vector<int>> a, b;
        for (auto& m : got) a.insert(m.exponents);
        for (auto& m : want) b.insert(m.exponents);
        CHECK(a == b);
        CHECK(got.size() == want.size());
        CHECK(std::is_sorted(got.begin(), got.end(), [](auto& x, auto& y) { return cmp_lambda(x, y) < 0; }));
      }
}

TEST_CASE("trace images of distinct monomials may coincide") {
  CHECK(trace_image(L({2, 1}, true)) == trace_image(L({1, 2}, true)));
  CHECK(trace_image(L({2, 1}, true)) == S("s1 s2"));
}

TEST_CASE("ordering of loop monomials versus their trace images: a counterexample") {
  // t^3 t'1 < t^2 t'1^2, yet s1 s3 > s2^2
  auto a = L({3, 1}, true), b = L({2, 2}, true);
  CHECK(cmp_lambda(a, b) < 0);
  CHECK(cmp_s(trace_image(a), trace_image(b)) > 0);
}

TEST_CASE("ordering of loop monomials is respected by trace images" * doctest::test_suite("respects")) {
  for (int k = -3; k <= 4; ++k) {
    auto basis = ordered_primed(k, 2, 3);
    for (auto& a : basis)
      for (auto& b : basis)
        if (cmp_lambda(a, b) < 0) {
          INFO(a.str(), " < ", b.str());
          CHECK(cmp_s(trace_image(a), trace_image(b)) < 0);
        }
  }
}
