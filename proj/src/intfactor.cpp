#include "cuboidcurves/intfactor.hpp"

#include <algorithm>
#include <map>

#include "cuboidcurves/errors.hpp"

namespace cuboidcurves {

namespace {

constexpr unsigned long kTrialCutoff = 10000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> sieve(kTrialCutoff + 1, true);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p <= kTrialCutoff; ++p) {
      if (!sieve[p]) continue;
      out.push_back(p);
      for (unsigned long q = p * p; q <= kTrialCutoff; q += p) sieve[q] = false;
    }
    return out;
  }();
  return primes;
}

/// Deterministic Pollard-Brent rho; n odd composite with no factor below
/// the trial cutoff.
Int pollard_brent(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int x(2), y(2), d(1), q(1), ys(2);
    unsigned long r = 1;
    const unsigned long batch = 128;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && d == 1; k += batch) {
        ys = y;
        const unsigned long limit = std::min(batch, r - k);
        for (unsigned long i = 0; i < limit; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        d = gcd(q, n);
      }
      r *= 2;
      if (r > (1ul << 28)) break;  // restart with a new polynomial
    }
    if (d == n) {
      // backtrack one step at a time
      d = 1;
      while (d == 1) {
        ys = (ys * ys + c) % n;
        d = gcd(abs(x - ys), n);
      }
    }
    if (d != n && d != 1) return d;
  }
}

void factor_into(Int n, std::map<Int, long>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Rat PrimeFactorization::reconstruct() const {
  Rat value(sign);
  for (const PrimeFactor& f : factors) {
    const auto e = static_cast<unsigned long>(f.exponent < 0 ? -f.exponent : f.exponent);
    Int p = int_pow(f.prime, e);
    if (f.exponent < 0) {
      value /= Rat(p);
    } else {
      value *= Rat(p);
    }
  }
  value.canonicalize();
  return value;
}

PrimeFactorization factorize(const Int& n) {
  if (n == 0) throw Error("factorize: zero input");
  PrimeFactorization result;
  result.sign = n < 0 ? -1 : 1;
  Int m = abs(n);
  std::map<Int, long> acc;
  for (unsigned long p : small_primes()) {
    if (m == 1) break;
    if (Int(p * p) > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++acc[Int(p)];
    }
  }
  if (m > 1) factor_into(m, acc);
  for (const auto& [prime, exponent] : acc) {
    result.factors.push_back({prime, exponent});
  }
  return result;
}

PrimeFactorization factorize(const Rat& q) {
  if (q == 0) throw Error("factorize: zero input");
  PrimeFactorization num = factorize(numerator(q));
  PrimeFactorization den = factorize(denominator(q));
  std::map<Int, long> acc;
  for (const auto& f : num.factors) acc[f.prime] += f.exponent;
  for (const auto& f : den.factors) acc[f.prime] -= f.exponent;
  PrimeFactorization result;
  result.sign = num.sign;
  for (const auto& [prime, exponent] : acc) {
    if (exponent != 0) result.factors.push_back({prime, exponent});
  }
  return result;
}

SquareFreeSplit square_free_split(const Rat& q) {
  if (q == 0) throw Error("square_free_split: zero input");
  const PrimeFactorization f = factorize(q);
  SquareFreeSplit split{Int(f.sign), Rat(1)};
  for (const auto& [prime, exponent] : f.factors) {
    const long odd = exponent & 1L;
    if (odd) split.squarefree *= prime;
    const long half = (exponent - odd) / 2;
    if (half > 0) {
      split.cofactor *= Rat(int_pow(prime, static_cast<unsigned long>(half)));
    } else if (half < 0) {
      split.cofactor /= Rat(int_pow(prime, static_cast<unsigned long>(-half)));
    }
  }
  split.cofactor.canonicalize();
  return split;
}

std::optional<Rat> cube_square_match(const Rat& x, const Rat& y) {
  if (x == 0) {
    if (y == 0) return Rat(0);
    return std::nullopt;
  }
  const Rat alpha = y / x;
  if (alpha * alpha == x && alpha * alpha * alpha == y) return alpha;
  return std::nullopt;
}

namespace {

/// z^2 = a (mod p^k) solvability; a reduced into [0, p^k), p prime.
bool square_mod_prime_power(const Int& a, const Int& p, unsigned long k) {
  const Int pk = int_pow(p, k);
  Int r = a % pk;
  if (r < 0) r += pk;
  if (r == 0) return true;
  unsigned long e = 0;
  while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
    r /= p;
    ++e;
  }
  if (e & 1ul) return false;
  const unsigned long j = k - e;  // r is a unit mod p^j, j >= 1
  if (p == 2) {
    if (j == 1) return true;
    if (j == 2) return r % 4 == 1;
    return r % 8 == 1;
  }
  // Euler criterion; Hensel lifts unit squares mod p to mod p^j.
  Int exp = (p - 1) / 2;
  Int res;
  mpz_powm(res.get_mpz_t(), r.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
  return res == 1;
}

}  // namespace

bool is_square_mod(const Int& a, const Int& n) {
  if (n <= 0) throw Error("is_square_mod: modulus must be positive");
  if (n == 1) return true;
  for (const auto& [prime, exponent] : factorize(n).factors) {
    if (!square_mod_prime_power(a, prime, static_cast<unsigned long>(exponent))) {
      return false;
    }
  }
  return true;
}

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  for (const auto& f : factorize(n).factors) {
    if (f.exponent >= 2) return false;
  }
  return true;
}

std::vector<Int> divisors(const Int& n) {
  if (n == 0) throw Error("divisors: zero input");
  std::vector<Int> out{Int(1)};
  for (const auto& [prime, exponent] : factorize(Int(abs(n))).factors) {
    const std::size_t base_count = out.size();
    Int power(1);
    for (long e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base_count; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cuboidcurves
