#include "oracle.hpp"

#include <algorithm>
#include <utility>

namespace oracle {

ZVec coeffs(const monosep::IntPoly& p) { return ZVec(p.coeffs().begin(), p.coeffs().end()); }

void trim(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void trim(QVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

ZVec add(const ZVec& a, const ZVec& b) {
  ZVec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZVec sub(const ZVec& a, const ZVec& b) {
  ZVec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZVec mul(const ZVec& a, const ZVec& b) {
  if (a.empty() || b.empty()) return {};
  ZVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QVec mul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QVec to_q(const ZVec& a) { return QVec(a.begin(), a.end()); }

ZVec combine(const std::vector<monosep::IntPoly>& cofactors, std::span<const monosep::IntPoly> relators) {
  ZVec acc;
  for (std::size_t i = 0; i < cofactors.size() && i < relators.size(); ++i)
    acc = add(acc, mul(coeffs(cofactors[i]), coeffs(relators[i])));
  return acc;
}

bool certificate_holds(const monosep::MembershipCertificate& cert, const monosep::Presentation& p) {
  if (cert.cofactors.size() != p.size()) return false;
  return combine(cert.cofactors, p.relators()) == coeffs(cert.claim);
}

Z content(const ZVec& a) {
  Z g = 0;
  for (const Z& c : a) g = gcd(g, c);
  return g;
}

namespace {

ZVec primitive(ZVec a) {
  const Z c = content(a);
  if (c == 0) return a;
  for (Z& x : a) x /= c;
  if (a.back() < 0)
    for (Z& x : a) x = -x;
  return a;
}

// lc(b)^(deg a - deg b + 1) * a mod b, all in Z[x].
ZVec pseudo_rem(ZVec a, const ZVec& b) {
  while (!a.empty() && a.size() >= b.size()) {
    const Z la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (Z& x : a) x *= b.back();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

QVec rational_gcd(const std::vector<ZVec>& polys) {
  ZVec g;
  for (ZVec p : polys) {
    trim(p);
    if (p.empty()) continue;
    if (g.empty()) {
      g = primitive(p);
      continue;
    }
    ZVec a = primitive(p), b = g;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
      ZVec r = primitive(pseudo_rem(a, b));
      a = std::move(b);
      b = std::move(r);
    }
    g = primitive(a);
  }
  QVec out = to_q(g);
  if (!out.empty()) {
    const Q lc = out.back();
    for (Q& x : out) x /= lc;
  }
  return out;
}

QVec rem_q(QVec a, const QVec& b) {
  trim(a);
  while (!a.empty() && a.size() >= b.size()) {
    const Q f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.back() = 0;
    trim(a);
  }
  return a;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t square_divisor(const Z& n) {
  const Z a = abs(n);
  for (Z i = 2; i * i <= a; ++i)
    if (a % (i * i) == 0) return i.get_ui();
  return 0;
}

Decision decide(const monosep::Presentation& p) {
  Decision d;
  if (p.empty()) return d;
  std::vector<ZVec> polys;
  for (const auto& f : p.relators()) {
    polys.push_back(coeffs(f));
    d.coefficient_gcd = gcd(d.coefficient_gcd, content(polys.back()));
  }
  d.gamma = rational_gcd(polys);
  const bool integral = std::all_of(d.gamma.begin(), d.gamma.end(), [](const Q& c) { return c.get_den() == 1; });
  d.separable = square_divisor(d.coefficient_gcd) == 0 && integral;
  return d;
}

namespace {

int mod(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

int inv(int a, int p) {
  int r = 1;
  for (int e = p - 2, b = a; e > 0; e >>= 1, b = static_cast<int>(1LL * b * b % p))
    if (e & 1) r = static_cast<int>(1LL * r * b % p);
  return r;
}

std::vector<int> trim_fp(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::vector<int> rem_fp(std::vector<int> a, const std::vector<int>& b, int p) {
  a = trim_fp(std::move(a));
  const int ib = inv(b.back(), p);
  while (!a.empty() && a.size() >= b.size()) {
    const int f = static_cast<int>(1LL * a.back() * ib % p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = mod(a[i + shift] - 1LL * f * b[i], p);
    a = trim_fp(std::move(a));
  }
  return a;
}

}  // namespace

FpQuotient::FpQuotient(const monosep::Presentation& pres, int prime) : p_(prime) {
  std::vector<int> g;
  for (const auto& f : pres.relators()) {
    std::vector<int> r;
    for (const auto& c : f.coeffs()) r.push_back(static_cast<int>(Z(((c % prime) + prime) % prime).get_si()));
    r = trim_fp(std::move(r));
    if (r.empty()) continue;
    if (g.empty()) {
      g = r;
      continue;
    }
    std::vector<int> a = g, b = r;
    while (!b.empty()) {
      std::vector<int> t = rem_fp(a, b, p_);
      a = std::move(b);
      b = std::move(t);
    }
    g = a;
  }
  if (g.empty()) return;
  const int il = inv(g.back(), p_);
  for (int& c : g) c = static_cast<int>(1LL * c * il % p_);
  g_ = g;
  finite_ = true;
  s_ = static_cast<int>(g_.size()) - 2;
}

std::vector<int> FpQuotient::reduce(std::vector<long long> full) const {
  std::vector<int> a;
  for (long long c : full) a.push_back(mod(c, p_));
  a = rem_fp(std::move(a), g_, p_);
  Elem e(s_, 0);
  for (int i = 1; i <= s_ && i < static_cast<int>(a.size()); ++i) e[i - 1] = a[i];
  return e;
}

FpQuotient::Elem FpQuotient::image(const monosep::IntPoly& u) const {
  std::vector<long long> full;
  for (const auto& c : u.coeffs()) full.push_back(Z(c % p_).get_si());
  return reduce(full);
}

FpQuotient::Elem FpQuotient::add(const Elem& u, const Elem& v) const {
  Elem r(s_);
  for (int i = 0; i < s_; ++i) r[i] = (u[i] + v[i]) % p_;
  return r;
}

FpQuotient::Elem FpQuotient::mul(const Elem& u, const Elem& v) const {
  std::vector<long long> full(2 * s_ + 1, 0);
  for (int i = 0; i < s_; ++i)
    for (int j = 0; j < s_; ++j) full[i + j + 2] = (full[i + j + 2] + 1LL * u[i] * v[j]) % p_;
  return reduce(full);
}

std::set<FpQuotient::Elem> FpQuotient::closure(const std::vector<Elem>& gens) const {
  std::set<Elem> s{Elem(s_, 0)};
  s.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Elem> cur(s.begin(), s.end());
    for (const Elem& u : cur)
      for (const Elem& v : cur) {
        grew |= s.insert(add(u, v)).second;
        grew |= s.insert(mul(u, v)).second;
      }
  }
  return s;
}

monosep::IntPoly Random::element(int max_degree, int max_coeff) {
  std::vector<monosep::BigInt> c(max_degree + 1, 0);
  const int deg = uniform(1, max_degree);
  for (int i = 1; i <= deg; ++i) c[i] = uniform(-max_coeff, max_coeff);
  return monosep::IntPoly(std::move(c));
}

monosep::IntPoly Random::relator(int max_degree, int max_coeff) {
  for (;;) {
    monosep::IntPoly p = element(max_degree, max_coeff);
    if (!p.is_zero()) return p;
  }
}

monosep::IntPoly Random::multiplier(int max_degree, int max_coeff) {
  std::vector<monosep::BigInt> c(max_degree + 1, 0);
  const int deg = uniform(0, max_degree);
  for (int i = 0; i <= deg; ++i) c[i] = uniform(-max_coeff, max_coeff);
  return monosep::IntPoly(std::move(c));
}

monosep::Presentation Random::presentation(int max_relators, int max_degree, int max_coeff) {
  for (;;) {
    monosep::Presentation p = attempt(max_relators, max_degree, max_coeff);
    bool ok = true;
    for (const auto& f : p.relators())
      for (const auto& c : f.coeffs()) ok &= abs(c) <= max_coeff;
    if (ok && !p.empty()) return p;
  }
}

monosep::Presentation Random::attempt(int max_relators, int max_degree, int max_coeff) {
  const int m = uniform(1, max_relators);
  std::vector<monosep::IntPoly> rel;
  // Shared factors make nontrivial gcds and torsion common enough to matter.
  const int style = uniform(0, 3);
  monosep::IntPoly common = monosep::IntPoly{0, 1};
  if (style == 1) common = monosep::IntPoly{0, uniform(-3, 3), 1};
  if (style == 2) common = monosep::IntPoly{0, uniform(1, 3), uniform(2, 3)};
  const int scale = style == 3 ? uniform(2, 12) : 1;
  for (int i = 0; i < m; ++i) {
    monosep::IntPoly f;
    if (style == 0) {
      f = relator(max_degree, max_coeff);
    } else {
      const int room = std::max(0, max_degree - common.degree());
      f = multiplier(room, std::max(1, max_coeff / 4)) * common;
      if (f.is_zero()) f = common;
    }
    rel.push_back(f * monosep::BigInt(scale));
  }
  return monosep::Presentation(std::move(rel));
}

}  // namespace oracle
