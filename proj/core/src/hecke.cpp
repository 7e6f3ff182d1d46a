#include "skein/hecke.hpp"

#include <algorithm>
#include <functional>

#include "skein/budget.hpp"
#include "skein/error.hpp"
#include "hecke_kernel.hpp"

namespace skein {

namespace kernel {

const Scalar& q_s() {
  static const Scalar v = Scalar::q();
  return v;
}
const Scalar& qm1() {
  static const Scalar v = Scalar::q() - 1;
  return v;
}
const Scalar& qinv() {
  static const Scalar v = Scalar::q().inv();
  return v;
}
const Scalar& qinv_m1() {
  static const Scalar v = Scalar::q().inv() - 1;
  return v;
}

void accumulate(AlgebraElement::TermMap& m, NormalWord w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = m.find(w);
  if (it == m.end()) {
    m.emplace(std::move(w), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

EntryList to_entries(AlgebraElement::TermMap&& m) {
  EntryList out;
  out.reserve(m.size());
  for (auto& [w, c] : m) out.push_back({w.exps, w.perm, c});
  return out;
}

// T_w g_j as a list of (perm, coefficient)
void perm_times_g(const std::vector<int>& w, int j, PermList& out, const Scalar& c) {
  std::vector<int> ws = w;
  std::swap(ws[j - 1], ws[j]);
  if (w[j - 1] < w[j]) {
    out.emplace_back(std::move(ws), c);
  } else {
    out.emplace_back(w, c * qm1());
    out.emplace_back(std::move(ws), c * q_s());
  }
}

// Bernstein correction D_j(X^a) = (q-1) X_{j+1} (f - s_j f)/(X_{j+1} - X_j) as
// (sign, exponents); each term carries coefficient sign*(q-1).
std::vector<std::pair<int, std::vector<int>>> bernstein_d(const std::vector<int>& alpha, int j) {
  std::vector<std::pair<int, std::vector<int>>> out;
  int a = alpha[j - 1], b = alpha[j];
  if (a == b) return out;
  int lo = std::min(a, b), d = std::abs(a - b), sign = a > b ? -1 : 1;
  for (int i = 0; i < d; ++i) {
    std::vector<int> na = alpha;
    na[j - 1] = lo + i;
    na[j] = lo + d - i;
    out.emplace_back(sign, std::move(na));
  }
  return out;
}

static thread_local std::unordered_map<std::vector<int>, EntryList, VecHash> tx_cache;
static thread_local std::unordered_map<std::vector<int>, PermList, VecHash> pp_cache;

// T_w X^beta in normal form
const EntryList& perm_times_bernstein(const std::vector<int>& w, const std::vector<int>& beta) {
  std::vector<int> key = w;
  key.insert(key.end(), beta.begin(), beta.end());
  auto it = tx_cache.find(key);
  if (it != tx_cache.end()) return it->second;

  int n = static_cast<int>(w.size());
  int j = 0;
  for (int i = 1; i < n; ++i)
    if (w[i - 1] > w[i]) {
      j = i;
      break;
    }
  EntryList result;
  if (j == 0) {
    result.push_back({beta, w, Scalar(1)});
  } else {
    StepBudget::charge();
    std::vector<int> ws = w;
    std::swap(ws[j - 1], ws[j]);
    AlgebraElement::TermMap acc;
    std::vector<int> sb = beta;
    std::swap(sb[j - 1], sb[j]);
    std::vector<std::pair<std::vector<int>, Scalar>> tmp;
    for (const Entry& e : perm_times_bernstein(ws, sb)) {
      tmp.clear();
      perm_times_g(e.perm, j, tmp, e.c);
      for (auto& [p, c] : tmp) accumulate(acc, NormalWord{e.exps, p}, c);
    }
    for (auto& [sign, al] : bernstein_d(beta, j)) {
      Scalar f = sign > 0 ? qm1() : -qm1();
      for (const Entry& e : perm_times_bernstein(ws, al)) accumulate(acc, NormalWord{e.exps, e.perm}, e.c * f);
    }
    result = to_entries(std::move(acc));
  }
  return tx_cache.emplace(std::move(key), std::move(result)).first->second;
}

// T_u T_v
const PermList& perm_times_perm(const std::vector<int>& u, const std::vector<int>& v) {
  std::vector<int> key = u;
  key.insert(key.end(), v.begin(), v.end());
  auto it = pp_cache.find(key);
  if (it != pp_cache.end()) return it->second;
  PermList cur{{u, Scalar(1)}}, next;
  for (int j : type_a_word(v).letters()) {
    StepBudget::charge(cur.size());
    next.clear();
    for (auto& [p, c] : cur) perm_times_g(p, j, next, c);
    // merge duplicates
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    cur.clear();
    for (auto& e : next) {
      if (!cur.empty() && cur.back().first == e.first) cur.back().second += e.second;
      else cur.push_back(e);
    }
    cur.erase(std::remove_if(cur.begin(), cur.end(), [](const auto& e) { return e.second.is_zero(); }),
              cur.end());
  }
  return pp_cache.emplace(std::move(key), std::move(cur)).first->second;
}

AlgebraElement right_multiply_bernstein(const AlgebraElement& x, const std::vector<int>& beta) {
  AlgebraElement::TermMap acc;
  for (auto& [w, c] : x.terms()) {
    for (const Entry& e : perm_times_bernstein(w.perm, beta)) {
      StepBudget::charge();
      NormalWord nw{w.exps, e.perm};
      for (std::size_t i = 0; i < nw.exps.size(); ++i) nw.exps[i] += e.exps[i];
      accumulate(acc, std::move(nw), c * e.c);
    }
  }
  AlgebraElement r(x.strands());
  for (auto& [w, c] : acc) r.add_term(w, c);
  return r;
}

}  // namespace kernel

using namespace kernel;

std::vector<int> TypeAWord::letters() const {
  std::vector<int> out;
  for (auto& r : runs)
    for (int j = r.head; j >= r.low; --j) out.push_back(j);
  return out;
}

std::size_t NormalWordHash::operator()(const NormalWord& w) const {
  VecHash h;
  return h(w.exps) * 1000003u ^ h(w.perm);
}

std::vector<std::pair<int, int>> NormalWord::loops() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] != 0) out.emplace_back(static_cast<int>(i), exps[i]);
  return out;
}

TypeAWord NormalWord::tail() const { return type_a_word(perm); }

int NormalWord::loop_weight() const {
  int s = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) s += static_cast<int>(i) * exps[i];
  return s;
}

std::string NormalWord::str() const {
  std::string s;
  auto add = [&s](const std::string& x) {
    if (!s.empty()) s += ' ';
    s += x;
  };
  for (auto [i, k] : loops()) {
    std::string l = i == 0 ? "t" : "t" + std::to_string(i);
    if (k != 1) l += "^" + std::to_string(k);
    add(l);
  }
  for (int j : tail().letters()) add("s" + std::to_string(j));
  return s.empty() ? "1" : s;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

TypeAWord type_a_word(const std::vector<int>& perm) {
  std::vector<int> w = perm;
  TypeAWord out;
  for (int m = static_cast<int>(w.size()); m >= 2; --m) {
    int j = static_cast<int>(std::find(w.begin(), w.begin() + m, m) - w.begin()) + 1;
    if (j > m) throw Error("malformed permutation");
    if (j < m) out.runs.push_back({m - 1, j});
    std::vector<int> wp(m - 1);
    for (int x = 1; x <= m - 1; ++x) wp[x - 1] = w[(x < j ? x : x + 1) - 1];
    w = std::move(wp);
  }
  std::reverse(out.runs.begin(), out.runs.end());
  return out;
}

int perm_length(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv;
}

AlgebraElement::AlgebraElement(int n) : n_(n) {
  if (n < 1) throw Error("an algebra needs at least one moving strand");
}

AlgebraElement AlgebraElement::identity(int n) {
  AlgebraElement r(n);
  r.terms_.emplace(NormalWord{std::vector<int>(n, 0), identity_perm(n)}, Scalar(1));
  return r;
}

AlgebraElement AlgebraElement::word(const NormalWord& w, const Scalar& c) {
  AlgebraElement r(w.strands());
  r.add_term(w, c);
  return r;
}

AlgebraElement AlgebraElement::generator(int n, int j, int e) {
  return right_multiply_generator(identity(n), j, e);
}

AlgebraElement AlgebraElement::bernstein(int n, int i, int k) {
  if (i < 1 || i > n) throw Error("loop index out of range");
  NormalWord w{std::vector<int>(n, 0), identity_perm(n)};
  w.exps[i - 1] = k;
  return word(w);
}

AlgebraElement AlgebraElement::loop(int n, int i, int k) {
  return bernstein(n, i + 1, k) * Scalar(RatFunc::q().pow(i * k));
}

void AlgebraElement::add_term(const NormalWord& w, const Scalar& c) {
  if (w.strands() != n_ || static_cast<int>(w.exps.size()) != n_) throw StrandMismatch(w.strands(), n_);
  accumulate(terms_, w, c);
}

Scalar AlgebraElement::loop_coefficient(const NormalWord& w) const {
  auto it = terms_.find(w);
  if (it == terms_.end()) return Scalar();
  return it->second * Scalar(RatFunc::q().pow(-w.loop_weight()));
}

std::vector<std::pair<NormalWord, Scalar>> AlgebraElement::sorted_terms() const {
  std::vector<std::pair<NormalWord, Scalar>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int la = perm_length(a.first.perm), lb = perm_length(b.first.perm);
    if (la != lb) return la < lb;
    return a.first < b.first;
  });
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.n_ != n_) throw StrandMismatch(n_, o.n_);
  for (auto& [w, c] : o.terms_) accumulate(terms_, w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.n_ != n_) throw StrandMismatch(n_, o.n_);
  for (auto& [w, c] : o.terms_) accumulate(terms_, w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

AlgebraElement AlgebraElement::embedded(int n) const {
  if (n < n_) throw StrandMismatch(n_, n);
  if (n == n_) return *this;
  AlgebraElement r(n);
  for (auto& [w, c] : terms_) {
    NormalWord nw = w;
    nw.exps.resize(n, 0);
    for (int i = n_; i < n; ++i) nw.perm.push_back(i + 1);
    r.terms_.emplace(std::move(nw), c);
  }
  return r;
}

std::string AlgebraElement::str() const {
  std::vector<std::pair<Scalar, std::string>> parts;
  for (auto& [w, c] : sorted_terms()) parts.emplace_back(c * Scalar(RatFunc::q().pow(-w.loop_weight())), w.str());
  return render_combination(parts);
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.strands() != y.strands()) throw StrandMismatch(x.strands(), y.strands());
  AlgebraElement::TermMap acc;
  for (auto& [w1, c1] : x.terms()) {
    for (auto& [w2, c2] : y.terms()) {
      Scalar c12 = c1 * c2;
      for (const Entry& e : perm_times_bernstein(w1.perm, w2.exps)) {
        std::vector<int> exps = w1.exps;
        for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += e.exps[i];
        Scalar ce = c12 * e.c;
        for (auto& [p, c3] : perm_times_perm(e.perm, w2.perm)) {
          StepBudget::charge();
          accumulate(acc, NormalWord{exps, p}, ce * c3);
        }
      }
    }
  }
  AlgebraElement r(x.strands());
  for (auto& [w, c] : acc) r.add_term(w, c);
  return r;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return multiply(x, y); }

AlgebraElement right_multiply_generator(const AlgebraElement& x, int j, int e) {
  int n = x.strands();
  if (j < 1 || j >= n) throw Error("generator index " + std::to_string(j) + " out of range for " +
                                   std::to_string(n) + " strands");
  AlgebraElement cur = x;
  std::vector<std::pair<std::vector<int>, Scalar>> tmp;
  for (int rep = 0; rep < std::abs(e); ++rep) {
    AlgebraElement::TermMap acc;
    for (auto& [w, c] : cur.terms()) {
      StepBudget::charge();
      tmp.clear();
      perm_times_g(w.perm, j, tmp, c);
      for (auto& [p, cc] : tmp) {
        // g^-1 = q^-1 g + (q^-1 - 1)
        accumulate(acc, NormalWord{w.exps, p}, e > 0 ? cc : cc * qinv());
      }
      if (e < 0) accumulate(acc, w, c * qinv_m1());
    }
    AlgebraElement next(n);
    for (auto& [w, c] : acc) next.add_term(w, c);
    cur = std::move(next);
  }
  return cur;
}

AlgebraElement to_algebra(const MixedBraidWord& wd) {
  int n = wd.n;
  AlgebraElement r = AlgebraElement::identity(n);
  auto times_x = [&](int i, int k) {
    std::vector<int> beta(n, 0);
    beta[i - 1] = k;
    r = right_multiply_bernstein(r, beta);
  };
  for (const Letter& l : wd.letters) {
    if (strands_needed(l) > n) throw InputError("letter " + render(l) + " exceeds " + std::to_string(n) + " strands");
    switch (l.kind) {
      case LetterKind::T: times_x(1, l.exponent); break;
      case LetterKind::Sigma: r = right_multiply_generator(r, l.index, l.exponent); break;
      case LetterKind::TLoop:
        times_x(l.index + 1, l.exponent);
        r *= Scalar(RatFunc::q().pow(l.index * l.exponent));
        break;
      case LetterKind::TLoopPrime:
        // t'_i^k = g_i..g_1 t^k g_1^-1..g_i^-1
        for (int j = l.index; j >= 1; --j) r = right_multiply_generator(r, j, 1);
        times_x(1, l.exponent);
        for (int j = 1; j <= l.index; ++j) r = right_multiply_generator(r, j, -1);
        break;
    }
  }
  return r;
}

AlgebraElement reduce(const std::vector<std::pair<Scalar, MixedBraidWord>>& words, int n) {
  AlgebraElement r(n);
  for (auto& [c, wd] : words) {
    if (wd.n > n) throw StrandMismatch(wd.n, n);
    MixedBraidWord w = wd;
    w.n = n;
    r += to_algebra(w) * c;
  }
  return r;
}

AlgebraElement gap_rewrite(int index, int k, int eps, const AlgebraElement& a) {
  int n = a.strands();
  if (index < 1 || index >= n) throw Error("gap_rewrite needs 1 <= index < strands");
  if (k < 1) throw Error("gap_rewrite needs k >= 1");
  if (eps != 1 && eps != -1) throw Error("gap_rewrite needs eps = +1 or -1");
  const RatFunc q = RatFunc::q();
  AlgebraElement g = AlgebraElement::generator(n, index, eps);
  AlgebraElement r = AlgebraElement::loop(n, index - 1, eps * k) * g * a * g * Scalar(q.pow(eps * (k - 1)));
  Scalar qe_m1 = Scalar(q.pow(eps)) - 1;
  for (int u = 1; u <= k - 1; ++u) {
    AlgebraElement m = AlgebraElement::loop(n, index - 1, eps * u) * AlgebraElement::loop(n, index, eps * (k - u));
    r += m * a * g * (Scalar(q.pow(eps * (u - 1))) * qe_m1);
  }
  return r;
}

void clear_hecke_caches() {
  tx_cache.clear();
  pp_cache.clear();
}

}  // namespace skein
