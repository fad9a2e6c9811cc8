#include "monosep/finite_ring.hpp"

#include <algorithm>
#include <unordered_set>

namespace monosep {

namespace {

using Wide = __int128;

std::int64_t mod_q(Wide v, std::int64_t q) {
  Wide r = v % q;
  if (r < 0) r += q;
  return static_cast<std::int64_t>(r);
}

struct ElementHash {
  std::size_t operator()(const FiniteRing::Element& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t v : e) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

std::vector<int> FiniteRing::standard_monomials() const {
  std::vector<int> out(moduli_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i) + 1;
  return out;
}

BigInt FiniteRing::carrier_size() const {
  BigInt n = 1;
  for (std::int64_t m : moduli_) n *= static_cast<long>(m);
  return n;
}

FiniteRing::Element FiniteRing::generator() const {
  Element e = zero();
  if (!e.empty()) e[0] = 1;
  return e;
}

// raw[i] is the coefficient of x^(i+1), i < s. Every q*x^e lies in the
// ideal, so entries may be reduced mod q at any point.
template <class Raw>
FiniteRing::Element FiniteRing::normalize(Raw& raw) const {
  const std::size_t s = moduli_.size();
  Element out(s, 0);
  for (std::size_t i = s; i-- > 0;) {
    std::int64_t c = mod_q(static_cast<Wide>(raw[i]), q_);
    const std::int64_t m = moduli_[i];
    const std::int64_t quot = c / m;
    c -= quot * m;
    out[i] = c;
    if (quot == 0) continue;
    const auto& tail = reducer_tail_[i];  // coefficients of degrees 1..e-1 of the shifted reducer
    for (std::size_t t = 0; t < tail.size(); ++t) {
      if (tail[t] != 0) raw[t] -= static_cast<Wide>(quot) * tail[t];
    }
  }
  return out;
}

FiniteRing::Element FiniteRing::add(const Element& u, const Element& v) const {
  std::vector<Wide> raw(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) raw[i] = static_cast<Wide>(u[i]) + v[i];
  return normalize(raw);
}

FiniteRing::Element FiniteRing::neg(const Element& u) const {
  std::vector<Wide> raw(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) raw[i] = -static_cast<Wide>(u[i]);
  return normalize(raw);
}

FiniteRing::Element FiniteRing::sub(const Element& u, const Element& v) const {
  std::vector<Wide> raw(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) raw[i] = static_cast<Wide>(u[i]) - v[i];
  return normalize(raw);
}

FiniteRing::Element FiniteRing::mul(const Element& u, const Element& v) const {
  const std::size_t s = moduli_.size();
  std::vector<Wide> raw(s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < s; ++j) {
      if (v[j] == 0) continue;
      const std::int64_t c = mod_q(static_cast<Wide>(u[i]) * v[j], q_);
      const Element& xk = power_table_[i + j + 2];
      for (std::size_t t = 0; t < s; ++t) {
        if (xk[t] != 0) raw[t] += static_cast<Wide>(c) * xk[t];
      }
    }
  }
  return normalize(raw);
}

FiniteRing::Element FiniteRing::scale(const BigInt& n, const Element& u) const {
  BigInt nr = floor_mod(n, modulus_);
  const std::int64_t c = nr.get_si();
  std::vector<Wide> raw(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) raw[i] = static_cast<Wide>(c) * u[i];
  return normalize(raw);
}

FiniteRing::Element FiniteRing::image(const IntPoly& u) const {
  if (!u.has_zero_constant()) throw Error(ErrorKind::ConstantTerm, "image: polynomial has a constant term");
  const IntPoly nf = normal_form(u, basis_);
  if (nf.degree() > static_cast<int>(moduli_.size()))
    throw std::logic_error("FiniteRing::image: normal form above the standard monomials");
  Element out = zero();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = nf.coeff(i + 1).get_si();
  return out;
}

IntPoly FiniteRing::lift(const Element& u) const {
  std::vector<BigInt> c(u.size() + 1, BigInt(0));
  for (std::size_t i = 0; i < u.size(); ++i) c[i + 1] = static_cast<long>(u[i]);
  return IntPoly(std::move(c));
}

bool FiniteRing::is_canonical(const Element& u) const {
  if (u.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] < 0 || u[i] >= moduli_[i]) return false;
  return true;
}

std::uint64_t FiniteRing::index_of(const Element& u) const {
  std::uint64_t idx = 0;
  for (std::size_t i = u.size(); i-- > 0;) idx = idx * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(u[i]);
  return idx;
}

FiniteRing::Element FiniteRing::element_at(std::uint64_t index) const {
  Element out = zero();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto m = static_cast<std::uint64_t>(moduli_[i]);
    out[i] = static_cast<std::int64_t>(index % m);
    index /= m;
  }
  return out;
}

std::vector<FiniteRing::Element> FiniteRing::multiplication_action() const {
  std::vector<Element> out;
  for (std::size_t e = 1; e <= moduli_.size(); ++e) out.push_back(power_table_[e + 1]);
  return out;
}

QuotientResult build_quotient(const Presentation& p, const BigInt& q) {
  if (q < 2) throw Error(ErrorKind::InvalidModulus, "build_quotient: modulus must be >= 2");
  if (q >= BigInt(1L << 31)) throw Error(ErrorKind::InvalidModulus, "build_quotient: modulus must be < 2^31");

  std::vector<IntPoly> relators(p.relators().begin(), p.relators().end());
  relators.push_back(IntPoly::monomial(q, 1));
  CanonicalBasis basis = canonical_basis(Presentation(std::move(relators)));

  const auto elems = basis.elements();
  if (elems.empty() || elems.back().poly.leading() != 1) {
    InfiniteQuotient inf{q, {}};
    for (const BasisElement& e : elems) inf.ladder.emplace_back(e.poly.degree(), e.poly.leading());
    return inf;
  }

  FiniteRing r;
  r.modulus_ = q;
  r.q_ = q.get_si();
  const std::size_t s = static_cast<std::size_t>(elems.back().poly.degree() - 1);
  r.moduli_.resize(s);
  r.reducer_lc_.resize(s);
  r.reducer_tail_.resize(s);
  for (std::size_t i = 0; i < s; ++i) {
    const int e = static_cast<int>(i) + 1;
    const std::size_t j = *basis.reducer_index(e);
    const IntPoly shifted = elems[j].poly.shifted(static_cast<std::size_t>(e - elems[j].poly.degree()));
    r.moduli_[i] = shifted.leading().get_si();
    r.reducer_lc_[i] = r.moduli_[i];
    std::vector<std::int64_t> tail(i, 0);
    for (std::size_t t = 0; t < i; ++t) tail[t] = floor_mod(shifted.coeff(t + 1), q).get_si();
    r.reducer_tail_[i] = std::move(tail);
  }
  r.basis_ = std::move(basis);
  r.power_table_.resize(2 * s + 2);
  for (std::size_t k = 1; k < r.power_table_.size(); ++k) {
    r.power_table_[k] = r.image(IntPoly::monomial(BigInt(1), k));
  }
  return r;
}

std::vector<FiniteRing::Element> subring_closure(const FiniteRing& ring,
                                                 std::span<const FiniteRing::Element> generators) {
  using Element = FiniteRing::Element;
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> members;
  seen.insert(ring.zero());
  members.push_back(ring.zero());

  // H := H + <w>, coset by coset, until a multiple of w falls back into H.
  auto extend = [&](const Element& w) {
    if (seen.contains(w)) return false;
    const std::size_t base = members.size();
    Element tw = w;
    while (!seen.contains(tw)) {
      for (std::size_t i = 0; i < base; ++i) {
        Element h = ring.add(members[i], tw);
        if (seen.insert(h).second) members.push_back(std::move(h));
      }
      tw = ring.add(tw, w);
    }
    return true;
  };

  // H is spanned by the products in `words`; closing H under multiplication
  // by each generator closes it under all products (the ring is commutative).
  std::vector<Element> words;
  for (const Element& g : generators) {
    if (extend(g)) words.push_back(g);
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (const Element& g : generators) {
      Element prod = ring.mul(words[i], g);
      if (extend(prod)) words.push_back(std::move(prod));
    }
  }
  std::sort(members.begin(), members.end(), [&](const Element& a, const Element& b) {
    return ring.index_of(a) < ring.index_of(b);
  });
  return members;
}

std::vector<BigInt> modulus_order(const BigInt& bound) {
  std::vector<BigInt> primes, powers, composites;
  for (BigInt q = 2; q <= bound; ++q) {
    auto f = factorize(q);
    if (f.size() == 1 && f[0].exponent == 1) primes.push_back(q);
    else if (f.size() == 1) powers.push_back(q);
    else composites.push_back(q);
  }
  primes.insert(primes.end(), powers.begin(), powers.end());
  primes.insert(primes.end(), composites.begin(), composites.end());
  return primes;
}

SeparationResult separate(const Presentation& p, const IntPoly& target, std::span<const IntPoly> generators,
                          const BigInt& modulus_bound, const SeparationOptions& options) {
  if (!target.has_zero_constant()) throw Error(ErrorKind::ConstantTerm, "separate: target has a constant term");
  for (const IntPoly& g : generators) {
    if (!g.has_zero_constant()) throw Error(ErrorKind::ConstantTerm, "separate: generator has a constant term");
  }
  SeparationResult out;
  for (const BigInt& q : modulus_order(modulus_bound)) {
    QuotientResult qr = build_quotient(p, q);
    auto* ring = std::get_if<FiniteRing>(&qr);
    if (!ring) continue;
    if (ring->carrier_size() > BigInt(static_cast<unsigned long>(options.max_carrier))) {
      out.moduli_skipped.push_back(q);
      continue;
    }
    out.moduli_tried.push_back(q);
    std::vector<FiniteRing::Element> images;
    for (const IntPoly& g : generators) images.push_back(ring->image(g));
    FiniteRing::Element t = ring->image(target);
    std::vector<FiniteRing::Element> closure = subring_closure(*ring, images);
    if (std::find(closure.begin(), closure.end(), t) == closure.end()) {
      out.found = true;
      out.image_of_target = std::move(t);
      out.subring_image = std::move(closure);
      out.quotient = std::move(*ring);
      return out;
    }
  }
  out.bound_exhausted = modulus_bound;
  return out;
}

}  // namespace monosep
