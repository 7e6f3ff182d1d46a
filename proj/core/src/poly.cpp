#include "skein/poly.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

#include "skein/error.hpp"

namespace skein {

namespace {

// graded lex, q > z; true when a sorts before b (a is larger)
bool term_before(int aq, int az, int bq, int bz) {
  int da = aq + az, db = bq + bz;
  if (da != db) return da > db;
  return aq > bq;
}

bool same_exp(const Poly::Term& a, const Poly::Term& b) {
  return a.dq == b.dq && a.dz == b.dz;
}

}  // namespace

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({0, 0, mpq_class(c)});
}

Poly::Poly(const mpq_class& c) {
  if (sgn(c) != 0) terms_.push_back({0, 0, c});
}

Poly Poly::monomial(const mpq_class& c, int dq, int dz) {
  Poly p;
  if (sgn(c) != 0) p.terms_.push_back({dq, dz, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return term_before(a.dq, a.dz, b.dq, b.dz);
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && same_exp(out.back(), t)) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].dz == 0);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].dz == 0 && terms_[0].c == 1;
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_[0].dq + terms_[0].dz; }

int Poly::degree_q() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, t.dq);
  return d;
}

int Poly::degree_z() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, t.dz);
  return d;
}

int Poly::min_degree_q() const {
  if (terms_.empty()) return 0;
  int d = terms_[0].dq;
  for (auto& t : terms_) d = std::min(d, t.dq);
  return d;
}

int Poly::min_degree_z() const {
  if (terms_.empty()) return 0;
  int d = terms_[0].dz;
  for (auto& t : terms_) d = std::min(d, t.dz);
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

static std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a,
                                     const std::vector<Poly::Term>& b, bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() ||
        (i < a.size() && term_before(a[i].dq, a[i].dz, b[j].dq, b[j].dz))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_before(b[j].dq, b[j].dz, a[i].dq, a[i].dz)) {
      out.push_back(b[j]);
      if (subtract) out.back().c = -out.back().c;
      ++j;
    } else {
      mpq_class c = subtract ? mpq_class(a[i].c - b[j].c) : mpq_class(a[i].c + b[j].c);
      if (sgn(c) != 0) out.push_back({a[i].dq, a[i].dz, c});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.terms_.size() == 1) return a.scaled(b.terms_[0].c).shifted(b.terms_[0].dq, b.terms_[0].dz);
  if (a.terms_.size() == 1) return b.scaled(a.terms_[0].c).shifted(a.terms_[0].dq, a.terms_[0].dz);
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (auto& x : a.terms_)
    for (auto& y : b.terms_) prod.push_back({x.dq + y.dq, x.dz + y.dz, x.c * y.c});
  return Poly::from_terms(std::move(prod));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const mpq_class& c) const {
  if (sgn(c) == 0) return {};
  Poly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

Poly Poly::shifted(int dq, int dz) const {
  Poly r = *this;
  for (auto& t : r.terms_) {
    t.dq += dq;
    t.dz += dz;
    if (t.dq < 0 || t.dz < 0) throw Error("negative exponent in polynomial shift");
  }
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

Poly Poly::exact_div(const Poly& b) const {
  if (b.is_zero()) throw DivisionByZero();
  if (b.is_monomial()) {
    const Term& lb = b.terms_[0];
    Poly r = *this;
    for (auto& t : r.terms_) {
      t.dq -= lb.dq;
      t.dz -= lb.dz;
      if (t.dq < 0 || t.dz < 0) throw Error("inexact polynomial division");
      t.c /= lb.c;
    }
    return r;
  }
  Poly quo, rem = *this;
  const Term& lb = b.leading();
  std::vector<Term> qterms;
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    int dq = lr.dq - lb.dq, dz = lr.dz - lb.dz;
    if (dq < 0 || dz < 0) throw Error("inexact polynomial division");
    mpq_class c = lr.c / lb.c;
    qterms.push_back({dq, dz, c});
    rem -= b.scaled(c).shifted(dq, dz);
  }
  return from_terms(std::move(qterms));
}

Poly Poly::monic() const {
  if (terms_.empty()) return {};
  mpq_class inv = 1 / terms_[0].c;
  return scaled(inv);
}

mpq_class Poly::eval(const mpq_class& qv, const mpq_class& zv) const {
  mpq_class acc = 0;
  for (auto& t : terms_) {
    mpq_class m = t.c;
    for (int i = 0; i < t.dq; ++i) m *= qv;
    for (int i = 0; i < t.dz; ++i) m *= zv;
    acc += m;
  }
  return acc;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!same_exp(a.terms_[i], b.terms_[i]) || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

std::size_t Poly::hash() const {
  std::size_t h = terms_.size();
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (auto& t : terms_) {
    mix(std::hash<int>()(t.dq));
    mix(std::hash<int>()(t.dz));
    mix(std::hash<std::string>()(t.c.get_str()));
  }
  return h;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& t : terms_) {
    mpq_class c = t.c;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    std::string mono;
    auto var = [&mono](const char* v, int d) {
      if (d == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (d > 1) mono += "^" + std::to_string(d);
    };
    var("q", t.dq);
    var("z", t.dz);
    std::string body;
    if (mono.empty()) body = c.get_str();
    else if (c == 1) body = mono;
    else body = c.get_str() + "*" + mono;
    if (first) out += neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

// gcd via primitive remainder sequences in Q[q][z]

namespace {

using UPoly = std::vector<mpq_class>;  // dense in q, index = degree
using ZPoly = std::vector<UPoly>;      // dense in z, coefficients in Q[q]

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void trim(ZPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// a = quo*b + rem
void udivmod(const UPoly& a, const UPoly& b, UPoly& quo, UPoly& rem) {
  rem = a;
  quo.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (!rem.empty() && rem.size() >= b.size()) {
    std::size_t shift = rem.size() - b.size();
    mpq_class c = rem.back() / b.back();
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[i + shift] -= c * b[i];
    trim(rem);
  }
  trim(quo);
}

UPoly umonic(UPoly a) {
  if (a.empty()) return a;
  mpq_class inv = 1 / a.back();
  for (auto& c : a) c *= inv;
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly quo, rem;
    udivmod(a, b, quo, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  return umonic(std::move(a));
}

ZPoly to_z(const Poly& p) {
  ZPoly r(p.degree_z() + 1);
  for (auto& t : p.terms()) {
    auto& u = r[t.dz];
    if (u.size() <= static_cast<std::size_t>(t.dq)) u.resize(t.dq + 1, mpq_class(0));
    u[t.dq] = t.c;
  }
  for (auto& u : r) trim(u);
  trim(r);
  return r;
}

Poly from_z(const ZPoly& p) {
  std::vector<Poly::Term> terms;
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].size(); ++i)
      if (sgn(p[j][i]) != 0)
        terms.push_back({static_cast<int>(i), static_cast<int>(j), p[j][i]});
  return Poly::from_terms(std::move(terms));
}

UPoly content(const ZPoly& p) {
  UPoly g;
  for (auto& u : p) {
    if (u.empty()) continue;
    g = g.empty() ? umonic(u) : ugcd(g, u);
    if (g.size() == 1) break;
  }
  return g;
}

ZPoly primitive(const ZPoly& p) {
  UPoly c = content(p);
  if (c.empty()) return p;
  ZPoly r(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j].empty()) continue;
    UPoly quo, rem;
    udivmod(p[j], c, quo, rem);
    r[j] = std::move(quo);
  }
  return r;
}

ZPoly prem(ZPoly a, const ZPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    UPoly la = a.back();
    for (auto& u : a) u = umul(u, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = usub(a[i + shift], umul(la, b[i]));
    trim(a);
  }
  return a;
}

Poly monomial_gcd(const Poly& a, const Poly& b) {
  return Poly::monomial(1, std::min(a.min_degree_q(), b.min_degree_q()),
                        std::min(a.min_degree_z(), b.min_degree_z()));
}

}  // namespace

// Heuristic gcd over Z: evaluate, take an integer gcd, rebuild by
// symmetric xi-adic expansion and accept only after trial division.

namespace {

using ZVec = std::vector<mpz_class>;  // dense integer polynomial in q

// integer primitive part with positive leading coefficient
Poly primitive_integer(const Poly& p) {
  mpz_class den = 1, num = 0;
  for (auto& t : p.terms()) den = lcm(den, mpz_class(t.c.get_den()));
  std::vector<Poly::Term> out;
  for (auto& t : p.terms()) {
    mpz_class v = mpz_class(t.c.get_num()) * (den / t.c.get_den());
    num = gcd(num, v);
    out.push_back({t.dq, t.dz, mpq_class(v)});
  }
  if (sgn(p.leading().c) < 0) num = -num;
  for (auto& t : out) t.c = mpq_class(mpz_class(t.c.get_num()) / num);
  return Poly::from_terms(std::move(out));
}

mpz_class max_norm(const Poly& p) {
  mpz_class m = 0;
  for (auto& t : p.terms()) {
    mpz_class v = abs(mpz_class(t.c.get_num()));
    if (v > m) m = v;
  }
  return m;
}

mpz_class max_norm(const ZVec& p) {
  mpz_class m = 0;
  for (auto& c : p)
    if (abs(c) > m) m = abs(c);
  return m;
}

void trim(ZVec& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// symmetric residue in (-xi/2, xi/2]
mpz_class sym_mod(const mpz_class& c, const mpz_class& xi) {
  mpz_class r = c % xi;
  if (r < 0) r += xi;
  if (2 * r > xi) r -= xi;
  return r;
}

ZVec expand_adic(mpz_class c, const mpz_class& xi) {
  ZVec out;
  while (c != 0) {
    mpz_class r = sym_mod(c, xi);
    out.push_back(r);
    c = (c - r) / xi;
  }
  return out;
}

mpz_class eval_at(const ZVec& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

ZVec primitive(ZVec p) {
  mpz_class g = 0;
  for (auto& c : p) g = gcd(g, c);
  if (g == 0) return p;
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

bool zdivides(const ZVec& d, const ZVec& p) {
  if (d.empty()) return false;
  ZVec r = p;
  while (!r.empty() && r.size() >= d.size()) {
    if (r.back() % d.back() != 0) return false;
    mpz_class c = r.back() / d.back();
    std::size_t shift = r.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) r[i + shift] -= c * d[i];
    trim(r);
  }
  return r.empty();
}

mpz_class content(const ZVec& p) {
  mpz_class g = 0;
  for (auto& c : p) g = gcd(g, c);
  return g;
}

std::optional<ZVec> heu_gcd_primitive(const ZVec& a, const ZVec& b);

// gcd in Z[q], integer content included
std::optional<ZVec> heu_gcd_univariate(const ZVec& a, const ZVec& b) {
  mpz_class c = gcd(content(a), content(b));
  auto h = heu_gcd_primitive(primitive(a), primitive(b));
  if (!h) return std::nullopt;
  for (auto& x : *h) x *= c;
  return h;
}

std::optional<ZVec> heu_gcd_primitive(const ZVec& a, const ZVec& b) {
  if (a.size() == 1 || b.size() == 1) return ZVec{1};
  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class g = gcd(eval_at(a, xi), eval_at(b, xi));
    if (g != 0) {
      ZVec h = primitive(expand_adic(g, xi));
      if (!h.empty() && zdivides(h, a) && zdivides(h, b)) return h;
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// exact division test in Q[q,z]
bool divides(const Poly& d, const Poly& p) {
  if (d.is_zero()) return false;
  Poly rem = p;
  const auto& ld = d.leading();
  while (!rem.is_zero()) {
    const auto& lr = rem.leading();
    int dq = lr.dq - ld.dq, dz = lr.dz - ld.dz;
    if (dq < 0 || dz < 0) return false;
    rem -= d.scaled(lr.c / ld.c).shifted(dq, dz);
  }
  return true;
}

std::optional<Poly> heu_gcd(const Poly& a, const Poly& b) {
  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  int dq = std::max(a.degree_q(), b.degree_q());
  for (int attempt = 0; attempt < 6; ++attempt) {
    // substitute z = xi
    ZVec ea(dq + 1), eb(dq + 1);
    std::vector<mpz_class> pw{1};
    auto power = [&](int e) -> const mpz_class& {
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * xi);
      return pw[e];
    };
    for (auto& t : a.terms()) ea[t.dq] += mpz_class(t.c.get_num()) * power(t.dz);
    for (auto& t : b.terms()) eb[t.dq] += mpz_class(t.c.get_num()) * power(t.dz);
    trim(ea);
    trim(eb);
    if (!ea.empty() && !eb.empty()) {
      if (auto h = heu_gcd_univariate(ea, eb)) {
        std::vector<Poly::Term> terms;
        for (std::size_t i = 0; i < h->size(); ++i) {
          ZVec zc = expand_adic((*h)[i], xi);
          for (std::size_t j = 0; j < zc.size(); ++j)
            if (zc[j] != 0) terms.push_back({static_cast<int>(i), static_cast<int>(j), mpq_class(zc[j])});
        }
        Poly g = Poly::from_terms(std::move(terms));
        if (!g.is_zero()) {
          g = primitive_integer(g);
          if (divides(g, a) && divides(g, b)) return g;
        }
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

Poly prs_gcd(const Poly& a, const Poly& b) {
  ZPoly x = to_z(a), y = to_z(b);
  if (x.size() < y.size()) std::swap(x, y);
  UPoly cg = ugcd(content(x), content(y));
  x = primitive(x);
  y = primitive(y);
  while (!y.empty()) {
    if (y.size() == 1) {
      x = ZPoly{UPoly{mpq_class(1)}};
      break;
    }
    ZPoly r = prem(x, y);
    x = std::move(y);
    y = primitive(r);
  }
  for (auto& u : x) u = umul(u, cg);
  return from_z(x);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_monomial() || b.is_monomial()) return monomial_gcd(a, b);
  // split off the common monomial factor first; the rest has none
  Poly m = monomial_gcd(a, b);
  Poly x = primitive_integer(a.exact_div(m)), y = primitive_integer(b.exact_div(m));
  if (x == y) return (x * m).monic();
  if (divides(x, y)) return (x * m).monic();
  if (divides(y, x)) return (y * m).monic();
  std::optional<Poly> g = heu_gcd(x, y);
  Poly r = g ? *g : prs_gcd(x, y);
  return (r * m).monic();
}

}  // namespace skein
