#pragma once

// Exact 64-bit integer arithmetic: primality, factorization, prime-divisor
// sets and Zsigmondy primitive prime divisors.

#include <algorithm>
#include <iterator>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chargraph {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct PrimeFactor {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// A positive integer together with its prime factorization, primes strictly
/// increasing.
struct Factorization {
  u64 n = 1;
  std::vector<PrimeFactor> factors;

  std::vector<u64> primes() const {
    std::vector<u64> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

inline bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  a %= n;
  if (a == 0) return false;
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

inline constexpr u64 kTrialBound = u64{1} << 20;

// Primes below kTrialBound, built once.
inline const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

}  // namespace detail

/// Deterministic for the whole 64-bit range (Jaeschke/Sinclair base set).
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL,
                1795265022ULL}) {
    if (detail::miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

/// Seed for Pollard rho. Fixed by default; CHARGRAPH_SEED overrides it.
/// Factorizations are unique, so the seed only changes the search path.
inline u64 default_rho_seed() {
  static const u64 seed = [] {
    if (const char* env = std::getenv("CHARGRAPH_SEED")) {
      try {
        return static_cast<u64>(std::stoull(env));
      } catch (const std::exception&) {
      }
    }
    return u64{0x9e3779b97f4a7c15ULL};
  }();
  return seed;
}

namespace detail {

inline u64 splitmix64(u64& state) {
  u64 z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Brent's variant of Pollard rho; n must be odd and composite.
inline u64 pollard_brent(u64 n, u64 seed) {
  u64 state = seed ^ n;
  for (;;) {
    const u64 c = splitmix64(state) % (n - 1) + 1;
    u64 y = splitmix64(state) % n;
    const u64 batch = 128;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto step = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += batch;
      }
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void collect_prime_factors(u64 n, u64 seed, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = pollard_brent(n, seed);
  collect_prime_factors(d, seed + 1, out);
  collect_prime_factors(n / d, seed + 2, out);
}

}  // namespace detail

/// Trial division by primes below 2^20, then Pollard rho on the cofactor.
inline Factorization factorize(u64 n, u64 seed = default_rho_seed()) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization result{n, {}};
  u64 rest = n;
  for (u64 p : detail::small_primes()) {
    if (p * p > rest) break;
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }
  if (rest == 1) return result;

  std::vector<u64> large;
  detail::collect_prime_factors(rest, seed, large);
  std::sort(large.begin(), large.end());
  for (u64 p : large) {
    if (!result.factors.empty() && result.factors.back().prime == p) {
      ++result.factors.back().exponent;
    } else {
      result.factors.push_back({p, 1});
    }
  }
  return result;
}

/// pi(n): the sorted set of primes dividing n.
inline std::vector<u64> prime_divisors(u64 n) { return factorize(n).primes(); }

/// Sorted union of two sorted prime sets.
inline std::vector<u64> merge_primes(const std::vector<u64>& a,
                                     const std::vector<u64>& b) {
  std::vector<u64> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

/// base^exp, or std::out_of_range when the result leaves 64 bits.
inline u64 checked_pow(u64 base, unsigned exp) {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    const u128 next = static_cast<u128>(result) * base;
    if (next > static_cast<u128>(UINT64_MAX)) {
      throw std::out_of_range("checked_pow: " + std::to_string(base) + "^" +
                              std::to_string(exp) + " exceeds 64 bits");
    }
    result = static_cast<u64>(next);
  }
  return result;
}

inline u64 checked_mul(u64 a, u64 b) {
  const u128 r = static_cast<u128>(a) * b;
  if (r > static_cast<u128>(UINT64_MAX)) {
    throw std::out_of_range("checked_mul: product exceeds 64 bits");
  }
  return static_cast<u64>(r);
}

/// 2^f for 0 <= f <= 63.
inline u64 pow2(unsigned f) {
  if (f > 63) throw std::out_of_range("pow2: exponent above 63");
  return u64{1} << f;
}

struct PrimePower {
  u64 p;
  unsigned f;

  u64 value() const { return checked_pow(p, f); }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline std::optional<PrimePower> as_prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  const auto fac = factorize(q);
  if (fac.factors.size() != 1) return std::nullopt;
  return PrimePower{fac.factors[0].prime, fac.factors[0].exponent};
}

/// Multiplicative order of a modulo the prime p (p does not divide a).
inline u64 order_mod_prime(u64 a, u64 p) {
  u64 order = p - 1;
  for (const auto& [q, e] : factorize(p - 1).factors) {
    for (unsigned i = 0; i < e && detail::pow_mod(a, order / q, p) == 1; ++i) {
      order /= q;
    }
  }
  return order;
}

/// Smallest primitive prime divisor of base^n - 1: a prime dividing it but
/// no base^k - 1 with k < n. Empty exactly in Zsigmondy's exception cases.
/// Throws std::out_of_range when base^n does not fit in 64 bits.
inline std::optional<u64> zsigmondy(u64 base, unsigned n) {
  if (base < 2) throw std::invalid_argument("zsigmondy: base must be >= 2");
  if (n < 1) throw std::invalid_argument("zsigmondy: n must be >= 1");
  const u64 value = checked_pow(base, n) - 1;
  for (u64 p : prime_divisors(value)) {
    if (base % p == 0) continue;
    if (order_mod_prime(base % p, p) == n) return p;
  }
  return std::nullopt;
}

}  // namespace chargraph
