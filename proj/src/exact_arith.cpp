#include "monosep/exact_arith.hpp"

#include <algorithm>
#include <map>

#include "monosep/error.hpp"

namespace monosep {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ConstantTerm: return "ConstantTermForbidden";
    case ErrorKind::InvalidBound: return "InvalidBound";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::UnitInput: return "UnitInput";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

BigInt gcd_list(std::span<const BigInt> values) {
  BigInt g = 0;
  for (const BigInt& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BigInt lcm_list(std::span<const BigInt> values) {
  BigInt l = 1;
  for (const BigInt& v : values) {
    if (v == 0) return 0;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_mpz_t());
  }
  return l;
}

BezoutResult bezout(std::span<const BigInt> values) {
  BezoutResult out;
  out.cofactors.assign(values.size(), BigInt(0));
  out.gcd = 0;
  bool seen_nonzero = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) continue;
    if (!seen_nonzero) {
      seen_nonzero = true;
      out.gcd = abs(values[i]);
      out.cofactors[i] = sgn(values[i]);
      continue;
    }
    // s*gcd + t*v = g'; rescale the running cofactors by s.
    BigInt g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
               out.gcd.get_mpz_t(), values[i].get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) out.cofactors[j] *= s;
    out.cofactors[i] = t;
    out.gcd = g;
  }
  if (!seen_nonzero) throw Error(ErrorKind::AllZero, "bezout: all values are zero");
  return out;
}

namespace {

BigInt rho_factor(const BigInt& n) {
  // Brent's cycle detection with batched gcds; retries with a new constant on
  // failure. n is odd, composite and not a perfect power here.
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          BigInt diff = abs(x - y);
          q = q * diff % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        BigInt diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_cofactor(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long e = mpz_sizeinbase(n.get_mpz_t(), 2); e >= 2; --e) {
      BigInt root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
        std::map<BigInt, unsigned> sub;
        split_cofactor(root, sub);
        for (const auto& [p, k] : sub) out[p] += k * static_cast<unsigned>(e);
        return;
      }
    }
  }
  BigInt d = rho_factor(n);
  split_cofactor(d, out);
  split_cofactor(BigInt(n / d), out);
}

}  // namespace

std::vector<PrimePower> factorize(const BigInt& n, std::uint64_t trial_bound) {
  if (n < 1) throw Error(ErrorKind::NonPositive, "factorize: input must be >= 1");
  std::map<BigInt, unsigned> found;
  BigInt rest = n;
  auto strip = [&](unsigned long p) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++found[BigInt(p)];
    }
  };
  strip(2);
  for (std::uint64_t p = 3; p <= trial_bound; p += 2) {
    if (rest == 1) break;
    if (BigInt(p) * p > rest) break;
    strip(static_cast<unsigned long>(p));
  }
  if (rest != 1) {
    if (BigInt(trial_bound) * trial_bound >= rest) {
      ++found[rest];  // no factor up to sqrt(rest): prime
    } else {
      split_cofactor(rest, found);
    }
  }
  std::vector<PrimePower> out;
  out.reserve(found.size());
  for (const auto& [p, e] : found) out.push_back({p, e});
  return out;
}

SquarefreeWitness squarefree(const BigInt& n, std::uint64_t trial_bound) {
  if (n < 1) throw Error(ErrorKind::NonPositive, "squarefree: input must be >= 1");
  SquarefreeWitness w;
  w.factorization = factorize(n, trial_bound);
  for (const PrimePower& pp : w.factorization) {
    if (pp.exponent >= 2) {
      w.is_squarefree = false;
      w.offending_prime = pp.prime;
      break;
    }
  }
  return w;
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> out{1};
  for (const PrimePower& pp : factorize(n)) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw Error(ErrorKind::DivisionByZero, "floor_div: zero divisor");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt floor_mod(const BigInt& a, const BigInt& b) {
  if (b == 0) throw Error(ErrorKind::DivisionByZero, "floor_mod: zero divisor");
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_integer(const BigRat& r) { return mpz_divisible_p(r.get_num_mpz_t(), r.get_den_mpz_t()) != 0; }

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRat& v) { return v.get_str(); }

}  // namespace monosep
