#include "skein/ordering.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "skein/budget.hpp"
#include "skein/error.hpp"

namespace skein {

long LambdaMonomial::exponent_sum() const {
  long s = 0;
  for (int k : exponents) s += k;
  return s;
}

bool LambdaMonomial::is_ordered() const {
  for (std::size_t i = 0; i + 1 < exponents.size(); ++i)
    if (exponents[i] < exponents[i + 1]) return false;
  return true;
}

MixedBraidWord LambdaMonomial::word() const {
  MixedBraidWord w;
  w.n = std::max<int>(1, static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) throw Error("loop monomial with zero exponent");
    if (i == 0) w.letters.push_back({LetterKind::T, 0, exponents[i]});
    else w.letters.push_back({primed ? LetterKind::TLoopPrime : LetterKind::TLoop, static_cast<int>(i), exponents[i]});
  }
  return w;
}

std::string LambdaMonomial::str() const {
  std::string r = render(word());
  return r.empty() ? "1" : r;
}

std::strong_ordering cmp_lambda(const LambdaMonomial& a, const LambdaMonomial& b) {
  if (a.primed != b.primed) throw Error("cannot compare primed and unprimed monomials");
  if (auto c = a.exponent_sum() <=> b.exponent_sum(); c != 0) return c;
  if (auto c = a.index() <=> b.index(); c != 0) return c;
  for (int i = a.index(); i >= 0; --i) {
    int x = a.exponents[i], y = b.exponents[i];
    if (x == y) continue;
    if (std::abs(x) != std::abs(y)) return std::abs(x) <=> std::abs(y);
    return y <=> x;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_s(const SMonomial& u, const SMonomial& v) {
  if (auto c = u.level() <=> v.level(); c != 0) return c;
  if (auto c = u.degree() <=> v.degree(); c != 0) return c;
  if (auto c = u.max_abs_index() <=> v.max_abs_index(); c != 0) return c;
  std::vector<int> a = u.indices(), b = v.indices();
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return a.size() <=> b.size();
}

std::vector<LambdaMonomial> enumerate_lambda_aug(int k, int max_index, int max_exp) {
  if (max_index < 0) throw InputError("max strand index must be nonnegative");
  if (max_exp < 1) throw InputError("max exponent must be positive");
  std::vector<LambdaMonomial> out;
  std::vector<int> cur;
  std::function<void(int, long)> rec = [&](int remaining, long target) {
    if (remaining == 0) {
      if (target == 0) out.push_back({cur, false});
      return;
    }
    StepBudget::charge();
    for (int e = -max_exp; e <= max_exp; ++e) {
      if (e == 0) continue;
      long rest = target - e;
      if (rest < -static_cast<long>(remaining - 1) * max_exp || rest > static_cast<long>(remaining - 1) * max_exp)
        continue;
      if (remaining - 1 == 0 && rest != 0) continue;
      cur.push_back(e);
      rec(remaining - 1, rest);
      cur.pop_back();
    }
  };
  for (int m = 0; m <= max_index; ++m) rec(m + 1, k);
  std::stable_sort(out.begin(), out.end(),
                   [](const LambdaMonomial& a, const LambdaMonomial& b) { return cmp_lambda(a, b) < 0; });
  return out;
}

SMonomial trace_image(const LambdaMonomial& m) { return SMonomial::from_indices(m.exponents); }

SMonomial min_of_level(int k) { return SMonomial::single(k); }

SMonomial max_of_level(int k) {
  if (k < 1) throw Error("max_of_level requires k >= 1");
  return SMonomial::from_indices(std::vector<int>(k, 1));
}

std::string to_string(std::strong_ordering o) {
  if (o < 0) return "<";
  if (o > 0) return ">";
  return "=";
}

}  // namespace skein
