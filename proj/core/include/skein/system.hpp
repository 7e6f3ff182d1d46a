#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skein/budget.hpp"
#include "skein/ordering.hpp"
#include "skein/trace.hpp"

namespace skein {

enum class SignChoice { Plus, Minus, Both };

// lhs = 0, where lhs = X(tau) - X(bbm(tau, sign)) divided by the prefactor
// of X(tau), so tr(tau) enters with coefficient 1.
struct Equation {
  TraceValue lhs;
  std::optional<LambdaMonomial> tau;  // empty: the unknot (identity braid)
  int sign = 1;

  bool degenerate() const { return lhs.is_zero(); }
  std::string source() const;  // "t^-1 t1, +"
};

struct LevelSystem {
  int level = 0;
  int max_index = 0;
  int max_exp = 1;
  std::vector<Equation> equations;
  std::vector<SMonomial> unknowns;  // cmp_s descending
};

struct BuildOptions {
  SignChoice signs = SignChoice::Both;
  std::uint64_t budget = StepBudget::kDefaultLimit;  // per equation
  unsigned threads = 0;                              // 0: hardware concurrency
};

// Equation for one tau and sign; tau empty means the unknot.
Equation band_move_equation(const std::optional<LambdaMonomial>& tau, int sign,
                            std::uint64_t budget = StepBudget::kDefaultLimit);

// Level-k truncation: one equation per tau in enumerate_lambda_aug(k, M, E)
// and per requested sign; at k = 0 the unknot comes first.
LevelSystem build_system(int k, int max_index, int max_exp, const BuildOptions& opts = {});

struct Relation {
  SMonomial unknown;
  Scalar coefficient;  // unknown = coefficient * s_k
};

struct Pivot {
  SMonomial column;
  std::size_t equation;
};

struct SolvedSystem {
  int level = 0;
  SMonomial minimal;                  // s_k
  std::vector<SMonomial> columns;     // elimination order
  std::size_t rank = 0;
  std::vector<Pivot> pivots;
  std::vector<Relation> relations;
  std::vector<SMonomial> undetermined;
  std::vector<Scalar> torsion;        // b with b * s_k = 0, b != 0
};

// Ordered Gaussian elimination, highest unknown first (cmp_s descending).
// Rows are combined without rescaling, so a row that collapses onto s_k
// keeps its natural coefficient as torsion witness. Relations are reported
// modulo those witnesses.
SolvedSystem eliminate(const LevelSystem& sys);

// Tries to write s_k as sum A_i s_i s_{k-i} (1 <= i <= k-1) from the system,
// eliminating every other unknown first. Returns the coefficients keyed by
// the product monomial, or nothing if the system does not determine it.
std::optional<std::map<SMonomial, Scalar>> express_via_products(const LevelSystem& sys);

std::string render(const LevelSystem& sys);
std::string render(const SolvedSystem& sol);

}  // namespace skein
