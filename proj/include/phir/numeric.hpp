#pragma once

// Exact integer helpers shared by the ring and ideal layers.
// All generator arithmetic is done on arbitrary-precision integers so
// ideal powers and colon computations never overflow.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phir {

using Int = mpz_class;

enum class Errc {
  InvalidTable,
  InfiniteIdealizationBase,
  ZeroInMultiplicativeSet,
  EmptyProduct,
  ImproperIdeal,
  ElementNotInRing,
  RingMismatch,
  MissingCustomEntry,
  UnboundedEnumeration,
  NonRegularDenominator,
  UnsupportedLocalization,
  InvalidIdealPair,
  ShapeMismatch,
  ParseError,
  SemanticError,
  UsageError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int int_abs(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline Int int_pow(const Int& a, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Trial-division factorization; generators in this project stay small.
inline std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  n = int_abs(n);
  if (n <= 1) return out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Product of the distinct prime factors; rad(0) = 0, rad(1) = 1.
inline Int int_radical(const Int& n) {
  if (n == 0) return 0;
  Int r = 1;
  for (const auto& [p, e] : factorize(n)) r *= p;
  return r;
}

inline Int smallest_prime_factor(const Int& n) {
  Int a = int_abs(n);
  if (a <= 1) return a;
  for (Int p = 2; p * p <= a; ++p)
    if (a % p == 0) return p;
  return a;
}

inline bool is_prime_int(const Int& n) {
  Int a = int_abs(n);
  if (a < 2) return false;
  return smallest_prime_factor(a) == a;
}

// Ascending divisors of n > 0.
inline std::vector<Int> divisors_of(const Int& n) {
  std::vector<Int> out;
  Int a = int_abs(n);
  if (a == 0) return out;
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Signed integers ordered by magnitude: 0, 1, -1, 2, -2, ...
inline Int signed_by_magnitude(long long k) {
  if (k == 0) return 0;
  if (k % 2 == 1) return Int((k + 1) / 2);
  return Int(-(k / 2));
}

// Strips every factor of the given primes out of n (used to canonicalize
// generators of ideals in Z localized away from those primes).
inline Int strip_primes(Int n, const std::vector<long long>& primes) {
  if (n == 0) return 0;
  n = int_abs(n);
  for (long long p : primes) {
    Int P = p;
    while (n % P == 0) n /= P;
  }
  return n;
}

}  // namespace phir
