// Closed forms for traces of t^p t_1^k (g_1^{+-1}), evaluated by recursion on k.
// Independent of the conditional-expectation engine in trace.cpp.

#include <map>
#include <utility>

#include "skein/error.hpp"
#include "skein/trace.hpp"

namespace skein {

namespace {

thread_local std::map<std::pair<int, int>, TraceValue> plain_cache;

SMonomial s(int a, int b = 0) { return SMonomial::from_indices({a, b}); }

}  // namespace

// tr(t^p t_1^k) = q^k s_k s_p - k q^k (q^-1 - 1) z s_{p+k}
//   - sum_{j=1}^{k} sum_{i=0}^{k-1-j} q^(j+i) (q^-1 - 1)(q - 1) tr(t^(p+i+j) t_1^(k-i-j))
TraceValue oracle_tr_tp_t1k(int p, int k) {
  if (k < 1) throw Error("oracle requires k >= 1");
  auto key = std::make_pair(p, k);
  if (auto it = plain_cache.find(key); it != plain_cache.end()) return it->second;
  const RatFunc q = RatFunc::q();
  const Scalar z = Scalar::z();
  const Scalar qinv_m1 = Scalar(q.inv()) - 1;
  const Scalar qm1 = Scalar(q) - 1;
  TraceValue r(s(k, p), Scalar(q.pow(k)));
  r.add(s(p + k), -Scalar(k) * Scalar(q.pow(k)) * qinv_m1 * z);
  for (int j = 1; j <= k; ++j)
    for (int i = 0; i <= k - 1 - j; ++i)
      r -= oracle_tr_tp_t1k(p + i + j, k - i - j) * (Scalar(q.pow(j + i)) * qinv_m1 * qm1);
  plain_cache.emplace(key, r);
  return r;
}

// sign +1: q^k z s_{p+k} + sum_{j=0}^{k-1} q^j (q-1) tr(t^(p+j) t_1^(k-j))
// sign -1: q^(k-1) z s_{p+k} + sum_{j=0}^{k-2} q^j (q-1) tr(t^(p+1+j) t_1^(k-1-j))
TraceValue oracle_tr_tp_t1k_g1(int p, int k, int sign) {
  if (k < 1) throw Error("oracle requires k >= 1");
  const RatFunc q = RatFunc::q();
  const Scalar qm1 = Scalar(q) - 1;
  const Scalar z = Scalar::z();
  TraceValue r;
  if (sign == 1) {
    r.add(s(p + k), Scalar(q.pow(k)) * z);
    for (int j = 0; j <= k - 1; ++j) r += oracle_tr_tp_t1k(p + j, k - j) * (Scalar(q.pow(j)) * qm1);
  } else if (sign == -1) {
    r.add(s(p + k), Scalar(q.pow(k - 1)) * z);
    for (int j = 0; j <= k - 2; ++j) r += oracle_tr_tp_t1k(p + 1 + j, k - 1 - j) * (Scalar(q.pow(j)) * qm1);
  } else {
    throw Error("oracle sign must be +1 or -1");
  }
  return r;
}

}  // namespace skein
