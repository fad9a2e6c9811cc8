#include "monosep/relation_ideal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

#include "monosep/lattice.hpp"

namespace monosep {

Presentation::Presentation(std::vector<IntPoly> relators) {
  for (IntPoly& f : relators) {
    if (f.is_zero()) continue;
    if (!f.has_zero_constant())
      throw Error(ErrorKind::ConstantTerm,
                  "relator " + to_string(f) + " has a nonzero constant term; relators must have none");
    relators_.push_back(std::move(f));
  }
}

int Presentation::max_degree() const {
  int d = 0;
  for (const IntPoly& f : relators_) d = std::max(d, f.degree());
  return d;
}

bool verify_certificate(const MembershipCertificate& cert, const Presentation& p) {
  if (cert.cofactors.size() != p.size()) return false;
  IntPoly sum;
  for (std::size_t i = 0; i < p.size(); ++i) sum += cert.cofactors[i] * p.relators()[i];
  return sum == cert.claim;
}

std::optional<std::size_t> CanonicalBasis::reducer_index(int degree) const {
  // Degrees ascend, so the reducer is the last element not above `degree`.
  auto it = std::upper_bound(elements_.begin(), elements_.end(), degree,
                             [](int d, const BasisElement& e) { return d < e.poly.degree(); });
  if (it == elements_.begin()) return std::nullopt;
  return static_cast<std::size_t>(std::distance(elements_.begin(), it) - 1);
}

std::optional<BigInt> CanonicalBasis::modulus_at(int degree) const {
  auto j = reducer_index(degree);
  if (!j) return std::nullopt;
  return elements_[*j].poly.leading();
}

MembershipCertificate CanonicalBasis::lift(std::span<const IntPoly> quotients, IntPoly claim) const {
  MembershipCertificate cert;
  cert.claim = std::move(claim);
  cert.cofactors.assign(presentation_.size(), IntPoly());
  for (std::size_t j = 0; j < quotients.size() && j < elements_.size(); ++j) {
    if (quotients[j].is_zero()) continue;
    for (std::size_t i = 0; i < cert.cofactors.size(); ++i) {
      cert.cofactors[i] += quotients[j] * elements_[j].cofactors[i];
    }
  }
  return cert;
}

namespace {

struct Tracked {
  IntPoly poly;
  std::vector<IntPoly> cof;

  // this -= s * x^k * o
  void sub(const BigInt& s, std::size_t k, const Tracked& o) {
    poly.sub_scaled_shifted(s, k, o.poly);
    for (std::size_t i = 0; i < cof.size(); ++i) cof[i].sub_scaled_shifted(s, k, o.cof[i]);
  }

  void scale(const BigInt& s) {
    poly *= s;
    for (IntPoly& c : cof) c *= s;
  }

  void make_lc_positive() {
    if (!poly.is_zero() && poly.leading() < 0) scale(BigInt(-1));
  }
};

// s * x^ka * a + t * x^kb * b
Tracked combine(const BigInt& s, std::size_t ka, const Tracked& a, const BigInt& t, std::size_t kb,
                const Tracked& b) {
  Tracked out{IntPoly(), std::vector<IntPoly>(a.cof.size())};
  out.sub(-s, ka, a);
  out.sub(-t, kb, b);
  return out;
}

// Strong basis completion for an ideal W of Z[x] that contains a positive
// integer. Every element is kept with coefficients in [0, N) where N is the
// least integer found so far, which bounds all intermediate growth.
class Completion {
 public:
  void run(std::vector<Tracked> gens) {
    for (Tracked& t : gens) insert(std::move(t));
    while (!pairs_.empty()) {
      auto [i, j] = pairs_.front();
      pairs_.pop_front();
      if (!alive_[i] || !alive_[j]) continue;
      const bool swap = elems_[i].poly.degree() > elems_[j].poly.degree();
      const Tracked& f = elems_[swap ? j : i];
      const Tracked& g = elems_[swap ? i : j];
      const std::size_t shift = static_cast<std::size_t>(g.poly.degree() - f.poly.degree());
      const BigInt a = f.poly.leading(), b = g.poly.leading();
      BigInt d, s, t;
      mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const BigInt l = a / d * b;
      Tracked spoly = combine(BigInt(l / a), shift, f, BigInt(-(l / b)), 0, g);
      std::optional<Tracked> gpoly;
      if (d != a && d != b) gpoly = combine(s, shift, f, t, 0, g);
      insert(std::move(spoly));
      if (gpoly) insert(std::move(*gpoly));
    }
  }

  std::vector<Tracked> result() {
    std::vector<Tracked> out;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (alive_[i]) out.push_back(std::move(elems_[i]));
    return out;
  }

 private:
  void reduce(Tracked& h) const {
    for (int e = h.poly.degree(); e >= 0; --e) {
      if (e > h.poly.degree()) continue;
      const BigInt c = h.poly.coeff(static_cast<std::size_t>(e));
      if (c == 0) continue;
      const Tracked* exact = nullptr;
      const Tracked* smallest = nullptr;
      for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (!alive_[i] || elems_[i].poly.degree() > e) continue;
        const Tracked& g = elems_[i];
        const BigInt& lc = g.poly.leading();
        if (mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t()) && (!exact || lc < exact->poly.leading())) exact = &g;
        if (!smallest || lc < smallest->poly.leading()) smallest = &g;
      }
      const Tracked* use = exact ? exact : smallest;
      if (!use) continue;
      const BigInt q = floor_div(c, use->poly.leading());
      if (q != 0) h.sub(q, static_cast<std::size_t>(e - use->poly.degree()), *use);
    }
    h.make_lc_positive();
  }

  void insert(Tracked h) {
    std::vector<Tracked> work;
    work.push_back(std::move(h));
    while (!work.empty()) {
      Tracked t = std::move(work.back());
      work.pop_back();
      reduce(t);
      if (t.poly.is_zero()) continue;
      // Elements whose leading term t now divides are reduced again.
      for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (!alive_[i] || elems_[i].poly.degree() < t.poly.degree()) continue;
        if (!mpz_divisible_p(elems_[i].poly.leading().get_mpz_t(), t.poly.leading().get_mpz_t())) continue;
        alive_[i] = false;
        work.push_back(elems_[i]);
      }
      const std::size_t n = elems_.size();
      for (std::size_t i = 0; i < n; ++i)
        if (alive_[i]) pairs_.emplace_back(i, n);
      elems_.push_back(std::move(t));
      alive_.push_back(true);
    }
  }

  std::vector<Tracked> elems_;
  std::vector<bool> alive_;
  std::deque<std::pair<std::size_t, std::size_t>> pairs_;
};

// Normal-form reduction of the terms of h strictly below `below_degree`,
// using a ladder (ascending degrees, descending leading coefficients).
template <class QuotientSink>
void reduce_by_ladder(IntPoly& h, int below_degree, std::span<const IntPoly> ladder, QuotientSink&& sink) {
  int top = std::min(h.degree(), below_degree - 1);
  std::size_t j = ladder.size();
  for (int e = top; e >= 1; --e) {
    while (j > 0 && ladder[j - 1].degree() > e) --j;
    if (j == 0) break;
    const IntPoly& g = ladder[j - 1];
    const BigInt c = h.coeff(static_cast<std::size_t>(e));
    if (c == 0) continue;
    BigInt q = floor_div(c, g.leading());
    if (q == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(e - g.degree());
    h.sub_scaled_shifted(q, shift, g);
    sink(j - 1, q, shift);
  }
}

}  // namespace

CanonicalBasis canonical_basis(const Presentation& p) {
  CanonicalBasis out;
  out.presentation_ = p;
  const std::size_t m = p.size();
  if (m == 0) return out;

  // V = g * W with g the primitive gcd of the relators; W contains an
  // integer, obtained from the Bezout identity for the rational gcd.
  const RationalGcd rg = gcd_q(p.relators());
  const IntPoly g = content_split(to_integer(rg.gamma * BigRat(denominator_lcm(rg.gamma)))).primitive;
  const BigInt& c = g.leading();
  std::vector<Tracked> gens;
  for (std::size_t i = 0; i < m; ++i) {
    Tracked t{IntPoly(), std::vector<IntPoly>(m)};
    if (!divides_exactly(g, p.relators()[i], &t.poly))
      throw std::logic_error("canonical_basis: primitive gcd does not divide a relator");
    t.cof[i] = IntPoly{BigInt(1)};
    gens.push_back(std::move(t));
  }
  BigInt big_n = 1;
  for (const RatPoly& b : rg.bezout) {
    const BigInt d = denominator_lcm(b * BigRat(c));
    mpz_lcm(big_n.get_mpz_t(), big_n.get_mpz_t(), d.get_mpz_t());
  }
  Tracked integer{IntPoly{big_n}, std::vector<IntPoly>(m)};
  for (std::size_t i = 0; i < m; ++i) integer.cof[i] = to_integer(rg.bezout[i] * BigRat(c * big_n));
  gens.insert(gens.begin(), std::move(integer));

  Completion completion;
  completion.run(std::move(gens));
  std::vector<Tracked> set = completion.result();
  for (Tracked& t : set) t.poly = t.poly * g;

  // Minimal ladder: at each degree the smallest leading coefficient among
  // elements of degree <= d generates the leading-coefficient ideal.
  std::sort(set.begin(), set.end(), [](const Tracked& x, const Tracked& y) {
    if (x.poly.degree() != y.poly.degree()) return x.poly.degree() < y.poly.degree();
    return x.poly.leading() < y.poly.leading();
  });
  std::vector<Tracked> ladder;
  for (Tracked& t : set) {
    if (!ladder.empty()) {
      const BigInt& cur = ladder.back().poly.leading();
      if (t.poly.degree() == ladder.back().poly.degree() || t.poly.leading() >= cur) continue;
      if (!mpz_divisible_p(cur.get_mpz_t(), t.poly.leading().get_mpz_t()))
        throw std::logic_error("canonical_basis: leading coefficient ladder is not a divisor chain");
    }
    ladder.push_back(std::move(t));
  }

  // Tail reduction against the lower ladder elements.
  std::vector<IntPoly> polys;
  for (Tracked& t : ladder) {
    reduce_by_ladder(t.poly, t.poly.degree(), polys, [&](std::size_t j, const BigInt& q, std::size_t shift) {
      for (std::size_t i = 0; i < m; ++i) t.cof[i].sub_scaled_shifted(q, shift, out.elements_[j].cofactors[i]);
    });
    polys.push_back(t.poly);
    out.elements_.push_back(BasisElement{std::move(t.poly), std::move(t.cof)});
  }

  for (const IntPoly& f : p.relators()) {
    Reduction r = reduce(f, out);
    if (!r.remainder.is_zero())
      throw std::logic_error("canonical_basis: relator " + to_string(f) + " does not reduce to zero");
    out.relator_certs_.push_back(std::move(r.quotients));
  }
  return out;
}

Reduction reduce(const IntPoly& g, const CanonicalBasis& basis) {
  Reduction out;
  out.remainder = g;
  out.quotients.assign(basis.size(), IntPoly());
  std::vector<IntPoly> ladder;
  ladder.reserve(basis.size());
  for (const BasisElement& e : basis.elements()) ladder.push_back(e.poly);
  reduce_by_ladder(out.remainder, g.degree() + 1, ladder, [&](std::size_t j, const BigInt& q, std::size_t shift) {
    out.quotients[j] += IntPoly::monomial(q, shift);
  });
  return out;
}

IntPoly normal_form(const IntPoly& g, const CanonicalBasis& basis) { return reduce(g, basis).remainder; }

MembershipResult membership(const IntPoly& g, const CanonicalBasis& basis) {
  Reduction r = reduce(g, basis);
  MembershipResult out;
  out.member = r.remainder.is_zero();
  if (out.member) out.certificate = basis.lift(r.quotients, g);
  return out;
}

MembershipResult membership(const IntPoly& g, const Presentation& p) {
  return membership(g, canonical_basis(p));
}

std::optional<MonicRelation> monic_multiple_search(const CanonicalBasis& basis, const BigInt& k,
                                                   int degree_bound) {
  if (degree_bound < 1) throw Error(ErrorKind::InvalidBound, "monic_multiple_search: degree bound must be >= 1");
  if (k < 1) throw Error(ErrorKind::InvalidInput, "monic_multiple_search: k must be >= 1");
  if (basis.empty()) return std::nullopt;

  const auto elems = basis.elements();
  // h_e = x^(e - d_j) g_j where g_j is the reducer at degree e; these span
  // the members of V of degree <= n triangularly.
  auto shifted_reducer = [&](int e) {
    const std::size_t j = *basis.reducer_index(e);
    return std::pair{j, static_cast<std::size_t>(e - elems[j].poly.degree())};
  };

  const int first = std::max(1, elems.front().poly.degree());
  for (int n = first; n <= degree_bound; ++n) {
    const auto [jn, sn] = shifted_reducer(n);
    const BigInt& lc = elems[jn].poly.leading();
    if (!mpz_divisible_p(k.get_mpz_t(), lc.get_mpz_t())) continue;
    const BigInt t = k / lc;
    const IntPoly top = elems[jn].poly.shifted(sn);

    // Columns are degrees n-1 .. 1. Generators: h_e for d_1 <= e < n, then k * x^i.
    const std::size_t width = static_cast<std::size_t>(n - 1);
    auto column_vector = [&](const IntPoly& h) {
      IntVector v(width, BigInt(0));
      for (std::size_t c = 0; c < width; ++c) v[c] = h.coeff(static_cast<std::size_t>(n - 1) - c);
      return v;
    };
    std::vector<IntVector> gens;
    std::vector<std::pair<std::size_t, std::size_t>> gen_shape;
    for (int e = first; e < n; ++e) {
      const auto [j, s] = shifted_reducer(e);
      gens.push_back(column_vector(elems[j].poly.shifted(s)));
      gen_shape.emplace_back(j, s);
    }
    for (std::size_t c = 0; c < width; ++c) {
      IntVector v(width, BigInt(0));
      v[c] = k;
      gens.push_back(std::move(v));
    }
    IntVector target = column_vector(top);
    for (BigInt& v : target) v *= t;

    HermiteEchelon lattice(gens, width);
    auto lambda = lattice.solve(target);
    if (!lambda) continue;

    std::vector<IntPoly> quotients(basis.size());
    quotients[jn] += IntPoly::monomial(t, sn);
    IntPoly w = top * t;
    for (std::size_t g = 0; g < gen_shape.size(); ++g) {
      const BigInt& lam = (*lambda)[g];
      if (lam == 0) continue;
      const auto [j, s] = gen_shape[g];
      w.sub_scaled_shifted(lam, s, elems[j].poly);
      quotients[j] -= IntPoly::monomial(lam, s);
    }
    std::vector<BigInt> phi_coeffs(w.coeffs().begin(), w.coeffs().end());
    for (BigInt& c : phi_coeffs) {
      if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()))
        throw std::logic_error("monic_multiple_search: lattice solution is not a multiple of k");
      c /= k;
    }
    IntPoly phi(std::move(phi_coeffs));
    if (!phi.is_monic() || phi.degree() != n || !phi.has_zero_constant())
      throw std::logic_error("monic_multiple_search: extracted polynomial is not monic of the expected degree");
    MonicRelation rel{k, std::move(phi), basis.lift(quotients, w)};
    return rel;
  }
  return std::nullopt;
}

std::optional<MonicRelation> monic_multiple_search(const Presentation& p, const BigInt& k, int degree_bound) {
  return monic_multiple_search(canonical_basis(p), k, degree_bound);
}

}  // namespace monosep
