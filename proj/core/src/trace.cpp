#include "skein/trace.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "hecke_kernel.hpp"
#include "skein/budget.hpp"
#include "skein/error.hpp"

namespace skein {

using kernel::bernstein_d;
using kernel::Entry;
using kernel::perm_times_bernstein;
using kernel::perm_times_perm;
using kernel::VecHash;

SMonomial SMonomial::from_indices(const std::vector<int>& indices) {
  std::vector<int> v;
  for (int k : indices)
    if (k != 0) v.push_back(k);
  std::sort(v.begin(), v.end());
  SMonomial m;
  for (int k : v) {
    if (!m.factors_.empty() && m.factors_.back().first == k) ++m.factors_.back().second;
    else m.factors_.emplace_back(k, 1);
  }
  return m;
}

std::vector<int> SMonomial::indices() const {
  std::vector<int> out;
  for (auto [k, m] : factors_) out.insert(out.end(), m, k);
  return out;
}

long SMonomial::level() const {
  long s = 0;
  for (auto [k, m] : factors_) s += static_cast<long>(k) * m;
  return s;
}

int SMonomial::degree() const {
  int s = 0;
  for (auto [k, m] : factors_) s += m;
  return s;
}

int SMonomial::max_abs_index() const {
  int r = -1;
  for (auto [k, m] : factors_) r = std::max(r, std::abs(k));
  return r;
}

SMonomial operator*(const SMonomial& a, const SMonomial& b) {
  if (a.factors_.empty()) return b;
  if (b.factors_.empty()) return a;
  SMonomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i].first < b.factors_[j].first)) {
      r.factors_.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() || b.factors_[j].first < a.factors_[i].first) {
      r.factors_.push_back(b.factors_[j++]);
    } else {
      r.factors_.emplace_back(a.factors_[i].first, a.factors_[i].second + b.factors_[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::size_t SMonomial::hash() const {
  std::size_t h = factors_.size();
  for (auto [k, m] : factors_) {
    h ^= std::hash<int>()(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<int>()(m) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string SMonomial::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (auto [k, m] : factors_) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(k);
    if (m != 1) s += "^" + std::to_string(m);
  }
  return s;
}

SMonomial parse_smonomial(std::string_view text) {
  std::vector<int> idx;
  std::size_t pos = 0;
  auto ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto integer = [&](bool allow_sign, const char* what) {
    std::size_t start = pos;
    bool neg = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(pos, std::string("expected ") + what);
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos++] - '0');
      if (v > 1'000'000) throw ParseError(start, "number too large");
    }
    return static_cast<int>(neg ? -v : v);
  };
  ws();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    ws();
    if (pos != text.size()) throw ParseError(pos, "unexpected input after unit monomial");
    return {};
  }
  while (pos < text.size()) {
    if (text[pos] != 's') throw ParseError(pos, std::string("expected 's', got '") + text[pos] + "'");
    ++pos;
    std::size_t ipos = pos;
    int k = integer(true, "index after 's'");
    if (k == 0) throw ParseError(ipos, "index 0 is not a trace parameter (s0 = 1)");
    int mult = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t epos = pos;
      mult = integer(false, "multiplicity");
      if (mult == 0) throw ParseError(epos, "zero multiplicity");
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != 's')
      throw ParseError(pos, std::string("unexpected character '") + text[pos] + "'");
    idx.insert(idx.end(), mult, k);
    ws();
  }
  return SMonomial::from_indices(idx);
}

Scalar TraceValue::coefficient(const SMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void TraceValue::add(const SMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TraceValue& TraceValue::operator+=(const TraceValue& o) {
  for (auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

TraceValue& TraceValue::operator-=(const TraceValue& o) {
  for (auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

TraceValue& TraceValue::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

TraceValue TraceValue::times(const SMonomial& m) const {
  TraceValue r;
  for (auto& [k, c] : terms_) r.terms_.emplace(k * m, c);
  return r;
}

std::string TraceValue::str() const {
  std::vector<std::pair<Scalar, std::string>> parts;
  for (auto& [m, c] : terms_) parts.emplace_back(c, m.str());
  return render_combination(parts);
}

// Trace by conditional expectations: eps_n maps H_{1,n+1} to H_{1,n}[s]
// and satisfies eps_n(g_n u g_n^-1) = eps_{n-1}(u), so the top strand is
// removed one level at a time.

namespace {

struct StageKey {
  SMonomial m;
  std::vector<int> exps;
  std::vector<int> perm;
  friend bool operator==(const StageKey&, const StageKey&) = default;
};

struct StageHash {
  std::size_t operator()(const StageKey& k) const {
    VecHash h;
    return k.m.hash() * 1000003u ^ h(k.exps) * 7919u ^ h(k.perm);
  }
};

using Stage = std::unordered_map<StageKey, Scalar, StageHash>;

void put(Stage& s, StageKey k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = s.emplace(std::move(k), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) s.erase(it);
}

// central part: (monomial, exponents of X_1..X_n)
struct Central {
  SMonomial m;
  std::vector<int> exps;
  Scalar c;
};
using CentralList = std::vector<Central>;

struct CentralKeyHash {
  std::size_t operator()(const std::pair<int, int>& k) const {
    return std::hash<long long>()((static_cast<long long>(k.first) << 32) ^ static_cast<unsigned>(k.second));
  }
};

thread_local std::unordered_map<std::pair<int, int>, CentralList, CentralKeyHash> expect_cache;

const Scalar& z_s() {
  static const Scalar v = Scalar::z();
  return v;
}

// eps_n(X_{n+1}^k), a Laurent polynomial in X_1..X_n with s-coefficients
const CentralList& expect_top(int n, int k) {
  auto key = std::make_pair(n, k);
  auto it = expect_cache.find(key);
  if (it != expect_cache.end()) return it->second;

  using Acc = std::unordered_map<StageKey, Scalar, StageHash>;
  Acc acc;
  auto add = [&acc](const SMonomial& m, std::vector<int> exps, const Scalar& c) {
    put(acc, StageKey{m, std::move(exps), {}}, c);
  };
  CentralList result;
  if (k == 0) {
    result.push_back({SMonomial(), std::vector<int>(n, 0), Scalar(1)});
  } else if (n == 0) {
    result.push_back({SMonomial::single(k), {}, Scalar(1)});
  } else {
    StepBudget::charge();
    for (const Central& e : expect_top(n - 1, k)) {
      std::vector<int> x = e.exps;
      x.push_back(0);
      add(e.m, std::move(x), e.c);
    }
    auto xn_times = [&](int r, const Scalar& coef, const CentralList& src) {
      for (const Central& e : src) {
        std::vector<int> x = e.exps;
        x[n - 1] += r;
        add(e.m, std::move(x), e.c * coef);
      }
    };
    const Scalar& qm1 = kernel::qm1();
    const Scalar& qinv = kernel::qinv();
    if (k > 0) {
      std::vector<int> x(n, 0);
      x[n - 1] = k;
      add(SMonomial(), x, qm1 * Scalar(k) * z_s() * qinv);
      Scalar base = qm1 * (Scalar(1) - qinv);
      for (int r = 1; r < k; ++r) {
        // copy: the recursive call may rehash the cache
        CentralList sub = expect_top(n, k - r);
        xn_times(r, base * Scalar(r), sub);
      }
    } else {
      std::vector<int> full(n + 1, 0);
      full[n - 1] = k;
      for (auto& [sign, al] : bernstein_d(full, n)) {
        Scalar coef = sign > 0 ? qm1 : -qm1;
        int a = al[n - 1], b = al[n];
        CentralList eb = expect_top(n, b);
        xn_times(a, -coef * kernel::qinv_m1(), eb);
        std::vector<int> x(n, 0);
        x[n - 1] = a + b;
        add(SMonomial(), x, -coef * qinv * z_s());
        std::vector<int> fb(n + 1, 0);
        fb[n - 1] = b;
        for (auto& [sign2, al2] : bernstein_d(fb, n)) {
          Scalar coef2 = sign2 > 0 ? qm1 : -qm1;
          CentralList sub = expect_top(n, al2[n]);
          xn_times(a + al2[n - 1], coef * coef2 * qinv, sub);
        }
      }
    }
    for (auto& [key2, c] : acc) result.push_back({key2.m, key2.exps, c});
  }
  return expect_cache.emplace(key, std::move(result)).first->second;
}

// X^alpha T_w X_n^a T_c, c = g_{n-1}..g_j, on n strands
void word_times_loop_run(const std::vector<int>& alpha, const std::vector<int>& w, int a,
                         const std::vector<int>& cperm, std::vector<Entry>& out) {
  int n = static_cast<int>(w.size());
  std::vector<int> beta(n, 0);
  beta[n - 1] = a;
  out.clear();
  for (const Entry& e : perm_times_bernstein(w, beta)) {
    std::vector<int> x = alpha;
    for (int i = 0; i < n; ++i) x[i] += e.exps[i];
    for (auto& [p, c] : perm_times_perm(e.perm, cperm)) out.push_back({x, p, e.c * c});
  }
}

Stage expect(int n, const Stage& s) {
  Stage out;
  std::vector<Entry> buf;
  for (auto& [key, c] : s) {
    StepBudget::charge();
    const std::vector<int>& al = key.exps;
    const std::vector<int>& w = key.perm;
    int k = al[n];
    std::vector<int> alp(al.begin(), al.begin() + n);
    int j = static_cast<int>(std::find(w.begin(), w.end(), n + 1) - w.begin()) + 1;
    // w = w' c with c = g_n .. g_j and w' fixing n+1
    std::vector<int> wp(n);
    for (int x = 1; x <= n; ++x) wp[x - 1] = w[(x < j ? x : x + 1) - 1];
    if (j == n + 1) {
      CentralList ek = expect_top(n, k);
      for (const Central& e : ek) {
        std::vector<int> x = alp;
        for (int i = 0; i < n; ++i) x[i] += e.exps[i];
        put(out, StageKey{key.m * e.m, std::move(x), wp}, c * e.c);
      }
      continue;
    }
    // c' = g_{n-1} .. g_j on n strands: value n sits at position j
    std::vector<int> cperm(n);
    for (int x = 1; x <= n; ++x) cperm[x - 1] = x < j ? x : (x == j ? n : x - 1);
    word_times_loop_run(alp, wp, k, cperm, buf);
    for (const Entry& e : buf) put(out, StageKey{key.m, e.exps, e.perm}, c * e.c * z_s());
    std::vector<int> full(n + 1, 0);
    full[n - 1] = k;
    for (auto& [sign, d] : bernstein_d(full, n)) {
      Scalar coef = sign > 0 ? kernel::qm1() : -kernel::qm1();
      int a = d[n - 1], b = d[n];
      word_times_loop_run(alp, wp, a, cperm, buf);
      CentralList eb = expect_top(n, b);
      for (const Entry& e : buf) {
        Scalar ce = -c * coef * e.c;
        for (const Central& f : eb) {
          std::vector<int> x = e.exps;
          for (int i = 0; i < n; ++i) x[i] += f.exps[i];
          put(out, StageKey{key.m * f.m, std::move(x), e.perm}, ce * f.c);
        }
      }
    }
  }
  return out;
}

}  // namespace

TraceValue markov_trace(const AlgebraElement& x) {
  Stage s;
  for (auto& [w, c] : x.terms()) put(s, StageKey{SMonomial(), w.exps, w.perm}, c);
  for (int n = x.strands() - 1; n >= 0; --n) s = expect(n, s);
  TraceValue r;
  for (auto& [key, c] : s) r.add(key.m, c);
  return r;
}

TraceValue markov_trace(const MixedBraidWord& wd) { return markov_trace(to_algebra(wd)); }

TraceValue invariant_X(const MixedBraidWord& wd) {
  TraceValue tr = markov_trace(wd);
  Scalar factor = delta().pow(wd.n - 1) * sqrt_lambda_pow(static_cast<int>(exponent_sum(wd)));
  return tr * factor;
}

void clear_trace_caches() {
  expect_cache.clear();
  clear_hecke_caches();
}

}  // namespace skein
