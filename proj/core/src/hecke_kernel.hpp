#pragma once

// Internal building blocks shared by the Hecke and trace implementations.

#include <functional>
#include <utility>
#include <vector>

#include "skein/hecke.hpp"

namespace skein::kernel {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h ^= std::hash<int>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct Entry {
  std::vector<int> exps;
  std::vector<int> perm;
  Scalar c;
};
using EntryList = std::vector<Entry>;
using PermList = std::vector<std::pair<std::vector<int>, Scalar>>;

const Scalar& q_s();
const Scalar& qm1();
const Scalar& qinv();
const Scalar& qinv_m1();

void accumulate(AlgebraElement::TermMap& m, NormalWord w, const Scalar& c);
void perm_times_g(const std::vector<int>& w, int j, PermList& out, const Scalar& c);
std::vector<std::pair<int, std::vector<int>>> bernstein_d(const std::vector<int>& alpha, int j);
// T_w X^beta
const EntryList& perm_times_bernstein(const std::vector<int>& w, const std::vector<int>& beta);
// T_u T_v
const PermList& perm_times_perm(const std::vector<int>& u, const std::vector<int>& v);

}  // namespace skein::kernel
