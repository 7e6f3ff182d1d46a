#include "doctest.h"
#include "support.hpp"

#include "skein/budget.hpp"
#include "skein/error.hpp"
#include "skein/hecke.hpp"
#include "skein/trace.hpp"

using namespace skein;
using namespace skein::testing;

namespace {

SMonomial S(std::initializer_list<int> idx) { return SMonomial::from_indices(idx); }
TraceValue tr(const std::string& text, int n) { return markov_trace(parse_word(text, n)); }
std::string pw(const std::string& base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); }

// (lambda / z) [q(q-1) + (q^2-q+1) z]
Scalar k1_ratio() { return lam() / z() * (q() * (q() - 1) + (q() * q() - q() + 1) * z()); }

}  // namespace

TEST_CASE("s-monomials") {
  auto m = parse_smonomial("s-5 s1 s1 s3");
  CHECK(m.str() == "s-5 s1^2 s3");
  CHECK(m.level() == 0);
  CHECK(m.degree() == 4);
  CHECK(m.max_abs_index() == 5);
  CHECK(parse_smonomial("s1^2") == S({1, 1}));
  CHECK(parse_smonomial("1").is_one());
  CHECK(parse_smonomial("").is_one());
  CHECK(S({0, 2, 0}) == S({2}));
  CHECK(SMonomial().str() == "1");
  CHECK(S({1}) * S({-1, 1}) == S({-1, 1, 1}));
  CHECK_THROWS_AS(parse_smonomial("s0"), InputError);
  CHECK_THROWS_AS(parse_smonomial("s1 x"), InputError);
}

TEST_CASE("unit and primed loop monomials") {
  CHECK(tr("", 1) == TraceValue::one());
  CHECK(tr("", 3) == TraceValue::one());
  for (int k0 : {-2, 1, 3})
    for (int k1 : {-1, 2})
      for (int k2 : {-3, 1}) {
        auto w = pw("t", k0) + " " + pw("t1'", k1) + " " + pw("t2'", k2);
        CHECK(tr(w, 3) == TraceValue(S({k2, k1, k0}), 1));
      }
}

TEST_CASE("t^p t1 and t^k g1^3") {
  for (int p = -3; p <= 3; ++p) {
    std::string w = (p == 0 ? std::string() : pw("t", p) + " ") + "t1";
    TraceValue expect = TraceValue(S({1, p}), q()) + TraceValue(S({p + 1}), (q() - 1) * z());
    CHECK(tr(w, 2) == expect);
  }
  for (int k = -2; k <= 3; ++k) {
    if (k == 0) continue;
    CHECK(tr(pw("t", k) + " s1^3", 2) == TraceValue(S({k}), (q() * q() - q() + 1) * z() + q() * (q() - 1)));
  }
}

TEST_CASE("invariant examples") {
  CHECK(invariant_X(parse_word("t")) == TraceValue(S({1}), 1));
  CHECK(invariant_X(parse_word("t1 s1", 2)) == TraceValue(S({1}), k1_ratio()));
  CHECK(invariant_X(parse_word("")) == TraceValue::one());
}

TEST_CASE("oracle examples") {
  for (int p = -2; p <= 2; ++p) {
    CHECK(oracle_tr_tp_t1k_g1(p, 1, 1) ==
          oracle_tr_tp_t1k(p, 1) * (q() - 1) + TraceValue(S({p + 1}), q() * z()));
    CHECK(oracle_tr_tp_t1k_g1(p, 2, -1) ==
          TraceValue(S({p + 2}), q() * z()) + oracle_tr_tp_t1k(p + 1, 1) * (q() - 1));
    CHECK(oracle_tr_tp_t1k(p, 1) == TraceValue(S({1, p}), q()) + TraceValue(S({p + 1}), (q() - 1) * z()));
  }
  CHECK(oracle_tr_tp_t1k(0, 1) == TraceValue(S({1}), q() + q() * z() - z()));
  auto g = oracle_tr_tp_t1k_g1(0, 1, 1);
  CHECK(g == TraceValue(S({1}), (q() * q() - q() + 1) * z() + q() * (q() - 1)));
  CHECK(g == tr("t1 s1", 2));
}

TEST_CASE("oracles agree with the trace engine") {
  int checked = 0;
  for (int p = -3; p <= 3; ++p) {
    for (int k = 1; k <= 5; ++k) {
      std::string base = (p == 0 ? std::string() : pw("t", p) + " ") + pw("t1", k);
      CHECK(tr(base, 2) == oracle_tr_tp_t1k(p, k));
      CHECK(tr(base + " s1", 2) == oracle_tr_tp_t1k_g1(p, k, 1));
      CHECK(tr(base + " s1^-1", 2) == oracle_tr_tp_t1k_g1(p, k, -1));
      checked += 3;
    }
  }
  CHECK(checked == 105);
}

TEST_CASE("rule 1: trace is a class function") {
  for (int trial = 0; trial < 40; ++trial) {
    int n = uniform(1, 4);
    auto x = to_algebra(random_word(n, uniform(1, 5))), y = to_algebra(random_word(n, uniform(1, 5)));
    CHECK(markov_trace(x * y) == markov_trace(y * x));
  }
}

TEST_CASE("rule 3: top generator contributes z") {
  for (int trial = 0; trial < 40; ++trial) {
    int n = uniform(2, 4);
    auto x = to_algebra(random_word(n - 1, uniform(0, 6)));
    auto lifted = x.embedded(n) * AlgebraElement::generator(n, n - 1, 1);
    CHECK(markov_trace(lifted) == markov_trace(x) * z());
  }
}

TEST_CASE("rule 4: top primed loop contributes s_k") {
  for (int trial = 0; trial < 40; ++trial) {
    int n = uniform(2, 4);
    int k = nonzero(3);
    auto x = to_algebra(random_word(n - 1, uniform(0, 6)));
    MixedBraidWord top{n, {{LetterKind::TLoopPrime, n - 1, k}}};
    CHECK(markov_trace(x.embedded(n) * to_algebra(top)) == markov_trace(x).times(SMonomial::single(k)));
  }
}

TEST_CASE("trace is linear") {
  for (int trial = 0; trial < 20; ++trial) {
    int n = uniform(1, 3);
    auto x = to_algebra(random_word(n, 4)), y = to_algebra(random_word(n, 4));
    Scalar a = random_scalar(), b = random_scalar();
    CHECK(markov_trace(x * a + y * b) == markov_trace(x) * a + markov_trace(y) * b);
  }
}

TEST_CASE("invariant under Markov moves") {
  for (int trial = 0; trial < 30; ++trial) {
    int n = uniform(1, 3);
    auto wd = random_word(n, uniform(0, 8));
    auto x = invariant_X(wd);
    auto g = random_word(n, uniform(1, 4));
    CHECK(invariant_X(conjugate(wd, g)) == x);
    CHECK(invariant_X(stabilize(wd, 1)) == x);
    CHECK(invariant_X(stabilize(wd, -1)) == x);
    CHECK(invariant_X(loop_conjugate(wd, 1)) == x);
    CHECK(invariant_X(loop_conjugate(wd, -1)) == x);
  }
}

TEST_CASE("exponent bookkeeping for gap-free loop monomials") {
  for (int trial = 0; trial < 30; ++trial) {
    int m = uniform(0, 2);
    std::string w;
    long e1 = 0;
    for (int i = 0; i <= m; ++i) {
      int k = nonzero(2);
      e1 += 2L * i * k;
      w += (i ? " " : "") + pw(i == 0 ? "t" : "t" + std::to_string(i), k);
    }
    auto wd = parse_word(w, m + 1);
    Scalar pre = inv(Scalar::w() * z()).pow(m) * sqrt_lambda_pow(static_cast<int>(e1));
    CHECK(invariant_X(wd) == markov_trace(wd) * pre);
  }
}

TEST_CASE("different loop monomials with the same trace image") {
  auto a = tr("t^2 t1'", 2), b = tr("t t1'^2", 2);
  CHECK(a == b);
  CHECK(a == TraceValue(S({1, 2}), 1));
  CHECK(parse_word("t^2 t1'") != parse_word("t t1'^2"));
}

TEST_CASE("rendering") {
  CHECK(tr("t t1", 2).str() == "q * s1^2 + (q*z - z) * s2");
  CHECK(TraceValue().str() == "0");
  CHECK(TraceValue::one().str() == "1");
}

TEST_CASE("budget exhaustion is reported, never silent") {
  clear_hecke_caches();
  clear_trace_caches();
  StepBudget budget(1, "a test");
  CHECK_THROWS_WITH_AS(markov_trace(parse_word("t^3 t1^-2 t2 s1 s2", 3)), doctest::Contains("a test"), BudgetExhausted);
}
