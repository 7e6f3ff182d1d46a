#include "skein/system.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <future>
#include <thread>

#include "skein/error.hpp"

namespace skein {

std::string Equation::source() const {
  return (tau ? tau->str() : std::string("1")) + ", " + (sign > 0 ? "+" : "-");
}

Equation band_move_equation(const std::optional<LambdaMonomial>& tau, int sign, std::uint64_t budget) {
  Equation eq;
  eq.tau = tau;
  eq.sign = sign;
  StepBudget guard(budget, "building the equation for tau = " + eq.source());
  MixedBraidWord w = tau ? tau->word() : MixedBraidWord{1, {}};
  MixedBraidWord moved = bbm(w, sign);
  // X(tau) - X(moved), divided by the prefactor of X(tau)
  Scalar ratio = delta().pow(moved.n - w.n) *
                 sqrt_lambda_pow(static_cast<int>(exponent_sum(moved) - exponent_sum(w)));
  TraceValue lhs = markov_trace(w) - markov_trace(moved) * ratio;
  for (auto& [m, c] : lhs.terms())
    if (c.has_w()) throw Error("band move equation for " + eq.source() + " is not rational after normalization");
  eq.lhs = std::move(lhs);
  return eq;
}

LevelSystem build_system(int k, int max_index, int max_exp, const BuildOptions& opts) {
  LevelSystem sys;
  sys.level = k;
  sys.max_index = max_index;
  sys.max_exp = max_exp;

  std::vector<std::optional<LambdaMonomial>> taus;
  if (k == 0) taus.emplace_back(std::nullopt);
  {
    StepBudget guard(opts.budget, "enumerating level " + std::to_string(k));
    for (auto& m : enumerate_lambda_aug(k, max_index, max_exp)) taus.emplace_back(m);
  }
  std::vector<int> signs;
  if (opts.signs != SignChoice::Minus) signs.push_back(1);
  if (opts.signs != SignChoice::Plus) signs.push_back(-1);

  struct Task {
    const std::optional<LambdaMonomial>* tau;
    int sign;
  };
  std::vector<Task> tasks;
  for (auto& t : taus)
    for (int s : signs) tasks.push_back({&t, s});

  std::vector<Equation> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = band_move_equation(*tasks[i].tau, tasks[i].sign, opts.budget);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::future<void>> pool;
    for (unsigned t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<SMonomial> unknowns;
  for (auto& eq : results) {
    for (auto& [m, c] : eq.lhs.terms()) {
      if (m.level() != k)
        throw Error("unknown " + m.str() + " from " + eq.source() + " has level " + std::to_string(m.level()) +
                    ", expected " + std::to_string(k));
      unknowns.push_back(m);
    }
  }
  std::sort(unknowns.begin(), unknowns.end(), [](const SMonomial& a, const SMonomial& b) { return cmp_s(a, b) > 0; });
  unknowns.erase(std::unique(unknowns.begin(), unknowns.end()), unknowns.end());
  sys.unknowns = std::move(unknowns);
  sys.equations = std::move(results);
  return sys;
}

namespace {

using Row = std::vector<Scalar>;

std::vector<Row> to_matrix(const LevelSystem& sys, const std::vector<SMonomial>& cols) {
  std::map<SMonomial, std::size_t> where;
  for (std::size_t c = 0; c < cols.size(); ++c) where[cols[c]] = c;
  std::vector<Row> rows;
  for (auto& eq : sys.equations) {
    Row r(cols.size());
    for (auto& [m, c] : eq.lhs.terms()) {
      auto it = where.find(m);
      if (it == where.end()) throw Error("unknown " + m.str() + " missing from the column order");
      r[it->second] = c;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

void subtract_multiple(Row& target, const Row& src, std::size_t from, const Scalar& f) {
  for (std::size_t c = from; c < target.size(); ++c)
    if (!src[c].is_zero()) target[c] -= f * src[c];
}

struct Forward {
  std::vector<int> pivot_row;              // per column, -1 if none
  std::vector<std::size_t> pivot_columns;  // in order found
  std::vector<Scalar> collapsed_last;      // rows that reduced onto the last column
};

// Column-ordered elimination below pivots; the first remaining row in
// equation order becomes the pivot.
Forward forward_eliminate(std::vector<Row>& rows, std::size_t ncols) {
  Forward f;
  f.pivot_row.assign(ncols, -1);
  std::vector<bool> used(rows.size(), false);
  for (std::size_t c = 0; c < ncols; ++c) {
    int p = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i][c].is_zero()) continue;
      if (c + 1 == ncols) {
        const Scalar& b = rows[i][c];
        if (std::find(f.collapsed_last.begin(), f.collapsed_last.end(), b) == f.collapsed_last.end())
          f.collapsed_last.push_back(b);
      }
      if (p < 0) {
        p = static_cast<int>(i);
        continue;
      }
      Scalar factor = rows[i][c] / rows[p][c];
      subtract_multiple(rows[i], rows[p], c, factor);
    }
    if (p >= 0) {
      used[p] = true;
      f.pivot_row[c] = p;
      f.pivot_columns.push_back(c);
    }
  }
  return f;
}

}  // namespace

SolvedSystem eliminate(const LevelSystem& sys) {
  SolvedSystem sol;
  sol.level = sys.level;
  sol.minimal = min_of_level(sys.level);
  std::vector<SMonomial> cols;
  for (auto& u : sys.unknowns)
    if (!(u == sol.minimal)) cols.push_back(u);
  std::sort(cols.begin(), cols.end(), [](const SMonomial& a, const SMonomial& b) { return cmp_s(a, b) > 0; });
  cols.push_back(sol.minimal);
  sol.columns = cols;
  std::size_t last = cols.size() - 1;

  std::vector<Row> rows = to_matrix(sys, cols);
  Forward f = forward_eliminate(rows, cols.size());
  sol.rank = f.pivot_columns.size();
  for (std::size_t c : f.pivot_columns) sol.pivots.push_back({cols[c], static_cast<std::size_t>(f.pivot_row[c])});
  if (f.pivot_row[last] >= 0) sol.torsion = f.collapsed_last;

  // back substitution among pivots other than s_k, so relations hold modulo torsion
  std::vector<std::size_t> upper;
  for (std::size_t c : f.pivot_columns)
    if (c != last) upper.push_back(c);
  for (std::size_t a = upper.size(); a-- > 0;) {
    Row& ra = rows[f.pivot_row[upper[a]]];
    for (std::size_t b = a + 1; b < upper.size(); ++b) {
      std::size_t c = upper[b];
      if (ra[c].is_zero()) continue;
      const Row& rb = rows[f.pivot_row[c]];
      subtract_multiple(ra, rb, c, ra[c] / rb[c]);
    }
  }
  for (std::size_t c = 0; c < last; ++c) {
    if (f.pivot_row[c] < 0) {
      sol.undetermined.push_back(cols[c]);
      continue;
    }
    const Row& r = rows[f.pivot_row[c]];
    bool free_left = false;
    for (std::size_t d = c + 1; d < last; ++d)
      if (!r[d].is_zero()) free_left = true;
    if (free_left) sol.undetermined.push_back(cols[c]);
    else sol.relations.push_back({cols[c], -(r[last] / r[c])});
  }
  return sol;
}

std::optional<std::map<SMonomial, Scalar>> express_via_products(const LevelSystem& sys) {
  int k = sys.level;
  SMonomial target = min_of_level(k);
  std::vector<SMonomial> products;
  for (int i = 1; i <= k - 1; ++i) {
    SMonomial m = SMonomial::from_indices({i, k - i});
    if (std::find(products.begin(), products.end(), m) == products.end()) products.push_back(m);
  }
  auto desc = [](const SMonomial& a, const SMonomial& b) { return cmp_s(a, b) > 0; };
  std::sort(products.begin(), products.end(), desc);
  std::vector<SMonomial> others;
  for (auto& u : sys.unknowns)
    if (!(u == target) && std::find(products.begin(), products.end(), u) == products.end()) others.push_back(u);
  std::sort(others.begin(), others.end(), desc);
  std::vector<SMonomial> cols = others;
  std::size_t tcol = cols.size();
  cols.push_back(target);
  cols.insert(cols.end(), products.begin(), products.end());

  std::vector<Row> rows = to_matrix(sys, cols);
  Forward f = forward_eliminate(rows, cols.size());
  if (f.pivot_row[tcol] < 0) return std::nullopt;
  const Row& r = rows[f.pivot_row[tcol]];
  std::map<SMonomial, Scalar> out;
  for (std::size_t c = tcol + 1; c < cols.size(); ++c)
    if (!r[c].is_zero()) out.emplace(cols[c], -(r[c] / r[tcol]));
  return out;
}

std::string render(const LevelSystem& sys) {
  std::string s = "level " + std::to_string(sys.level) + ", max strand index " + std::to_string(sys.max_index) +
                  ", max exponent " + std::to_string(sys.max_exp) + "\n";
  s += "unknowns:";
  for (auto& u : sys.unknowns) s += " [" + u.str() + "]";
  s += "\nequations: " + std::to_string(sys.equations.size()) + "\n";
  for (auto& eq : sys.equations) s += "  [" + eq.source() + "] " + eq.lhs.str() + " = 0\n";
  return s;
}

std::string render(const SolvedSystem& sol) {
  std::string s = "level " + std::to_string(sol.level) + ", minimal unknown " + sol.minimal.str() + "\n";
  s += "rank " + std::to_string(sol.rank) + "\n";
  s += "pivots:";
  if (sol.pivots.empty()) s += " none";
  for (auto& p : sol.pivots) s += " [" + p.column.str() + "] <- eq " + std::to_string(p.equation);
  s += "\nrelations:\n";
  if (sol.relations.empty()) s += "  none\n";
  for (auto& r : sol.relations)
    s += "  " + r.unknown.str() + " = " + TraceValue(sol.minimal, r.coefficient).str() + "\n";
  s += "undetermined at these bounds:";
  if (sol.undetermined.empty()) s += " none";
  for (auto& u : sol.undetermined) s += " [" + u.str() + "]";
  s += "\ntorsion witnesses (b * " + sol.minimal.str() + " = 0):\n";
  if (sol.torsion.empty()) s += "  none\n";
  for (auto& b : sol.torsion) s += "  b = " + b.str() + "\n";
  return s;
}

}  // namespace skein
