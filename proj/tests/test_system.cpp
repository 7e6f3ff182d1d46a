#include "doctest.h"
#include "support.hpp"

#include "skein/error.hpp"
#include "skein/system.hpp"

using namespace skein;
using namespace skein::testing;

namespace {

SMonomial S(const std::string& text) { return parse_smonomial(text); }

Scalar k1_ratio() { return lam() / z() * (q() * (q() - 1) + (q() * q() - q() + 1) * z()); }

const Equation& find(const LevelSystem& sys, const std::string& source) {
  for (auto& eq : sys.equations)
    if (eq.source() == source) return eq;
  FAIL("no equation " << source);
  return sys.equations.front();
}

}  // namespace

TEST_CASE("level 1 with a single loop") {
  auto sys = build_system(1, 0, 1);
  REQUIRE(sys.equations.size() == 2);
  CHECK(sys.unknowns == std::vector<SMonomial>{S("s1")});
  auto& plus = find(sys, "t, +");
  CHECK(plus.lhs == TraceValue(S("s1"), 1 - k1_ratio()));
  CHECK(find(sys, "t, -").degenerate());

  auto sol = eliminate(sys);
  CHECK(sol.minimal == S("s1"));
  REQUIRE(sol.torsion.size() == 1);
  Scalar b = sol.torsion[0];
  CHECK(b == 1 - k1_ratio());
  CHECK(!b.is_zero());
  // cleared denominators, expanded by hand
  Poly Q = Poly::q(), Z = Poly::z();
  Poly num = Q.pow(3) * Z - Q * Q * Z * Z + Q.pow(3) - Q * Q * Z * 3 + Q * Z * Z * 2 - Q * Q * 2 + Q * Z * 3 - Z * Z + Q - Z;
  CHECK(b == Scalar(RatFunc(num, Q * Z * Z)));
  CHECK(sol.relations.empty());
  CHECK(sol.undetermined.empty());
}

TEST_CASE("unknot yields 0 = 0 for both signs") {
  CHECK(band_move_equation(std::nullopt, 1).degenerate());
  CHECK(band_move_equation(std::nullopt, -1).degenerate());
  auto sys = build_system(0, 0, 1);
  REQUIRE(sys.equations.size() == 2);
  CHECK(sys.equations[0].source() == "1, +");
  CHECK(sys.unknowns.empty());
  auto sol = eliminate(sys);
  CHECK(sol.relations.empty());
  CHECK(sol.torsion.empty());
  CHECK(sol.rank == 0);
}

TEST_CASE("a system of trivial equations gives an empty report") {
  LevelSystem sys;
  sys.level = 2;
  sys.equations.push_back(Equation{});
  auto sol = eliminate(sys);
  CHECK(sol.rank == 0);
  CHECK(sol.relations.empty());
  CHECK(sol.torsion.empty());
  CHECK(sol.undetermined.empty());
}

TEST_CASE("band move equations agree with the closed-form recursions") {
  for (int k = 1; k <= 3; ++k) {
    for (int sign : {1, -1}) {
      auto eq = band_move_equation(LambdaMonomial{{k}, false}, sign);
      // X(t^k) = s_k and X(t1^k g1^sign) = Delta w^(2k + sign) tr(t1^k g1^sign)
      Scalar pre = delta() * sqrt_lambda_pow(2 * k + sign);
      TraceValue expect = TraceValue(SMonomial::single(k), 1) - oracle_tr_tp_t1k_g1(0, k, sign) * pre;
      CHECK(eq.lhs == expect);
    }
  }
}

TEST_CASE("level 0: the product s-1 s1 is tied to the unit") {
  auto sys = build_system(0, 1, 1);
  CHECK(sys.equations.size() == 6);
  auto sol = eliminate(sys);
  CHECK(sol.minimal.is_one());
  REQUIRE(sol.relations.size() == 1);
  CHECK(sol.relations[0].unknown == S("s-1 s1"));
  CHECK(sol.relations[0].coefficient == z() * (z() + 1 - q()) / q());
  // every nontrivial row gives the same value
  for (auto& eq : sys.equations) {
    if (eq.degenerate()) continue;
    Scalar c = -eq.lhs.coefficient(SMonomial()) / eq.lhs.coefficient(S("s-1 s1"));
    CHECK(c == z() * (z() + 1 - q()) / q());
  }
}

TEST_CASE("unknowns stay in their level") {
  for (int k = -2; k <= 3; ++k) {
    auto sys = build_system(k, 1, 2);
    for (auto& u : sys.unknowns) CHECK(u.level() == k);
    for (std::size_t i = 1; i < sys.unknowns.size(); ++i) CHECK(cmp_s(sys.unknowns[i - 1], sys.unknowns[i]) > 0);
  }
}

TEST_CASE("the minimal unknown through products of lower ones") {
  for (int k = 2; k <= 4; ++k) {
    auto sys = build_system(k, 1, k);
    auto via = express_via_products(sys);
    REQUIRE(via.has_value());
    CHECK(!via->empty());
    for (auto& [m, c] : *via) {
      CHECK(m.degree() == 2);
      CHECK(m.level() == k);
      CHECK(!c.is_zero());
    }
  }
}

TEST_CASE("sign selection and determinism") {
  BuildOptions plus;
  plus.signs = SignChoice::Plus;
  auto a = build_system(2, 1, 2, plus);
  CHECK(a.equations.size() == 2);
  for (auto& eq : a.equations) CHECK(eq.sign == 1);

  BuildOptions one, two;
  one.threads = 1;
  two.threads = 2;
  auto x = build_system(1, 2, 2, one), y = build_system(1, 2, 2, two);
  CHECK(render(x) == render(y));
  CHECK(render(eliminate(x)) == render(eliminate(y)));
}

TEST_CASE("budget exhaustion names the offending tau") {
  clear_hecke_caches();
  clear_trace_caches();
  CHECK_THROWS_WITH_AS(band_move_equation(LambdaMonomial{{2, 1}, false}, 1, 1), doctest::Contains("tau = t^2 t1, +"),
                       BudgetExhausted);
  BuildOptions tight;
  tight.budget = 1;
  tight.threads = 1;
  CHECK_THROWS_AS(build_system(2, 1, 2, tight), BudgetExhausted);
}

TEST_CASE("rendering of a solved system") {
  auto text = render(eliminate(build_system(1, 0, 1)));
  CHECK(text.find("level 1, minimal unknown s1") != std::string::npos);
  CHECK(text.find("torsion witnesses (b * s1 = 0):") != std::string::npos);
}
