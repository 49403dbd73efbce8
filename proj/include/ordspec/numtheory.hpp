#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordspec/version.hpp"

namespace ordspec {

// Every value routed through factorize() stays within [1, 2^63-1] so that
// 128-bit intermediates never saturate and signed consumers stay safe.
inline constexpr std::uint64_t kValueCap = (std::uint64_t{1} << 63) - 1;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 0) throw std::invalid_argument("pow_mod: modulus must be nonzero");
  if (mod == 1) return 0;
  std::uint64_t r = 1;
  base %= mod;
  while (exp != 0) {
    if (exp & 1) r = mul_mod(r, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin; the twelve bases below decide primality for all
// 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  const int s = std::countr_zero(n - 1);
  const std::uint64_t d = (n - 1) >> s;
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t kBound = 1u << 20;
    std::vector<bool> composite(kBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kBound; j += i)
        composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
  }();
  return primes;
}

// Brent-cycle Pollard rho on an odd composite with no divisor <= 2^20.  The
// iteration constants come from a fixed xorshift stream, so repeated runs walk
// identical paths.
inline std::uint64_t pollard_brent(std::uint64_t n) {
  std::uint64_t state = kDeterministicSeed ^ n;
  auto next = [&state] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  while (true) {
    std::uint64_t y = next() % (n - 3) + 2;
    const std::uint64_t c = next() % (n - 1) + 1;
    auto f = [n, c](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
    constexpr std::uint64_t kBatch = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

}  // namespace detail

struct FactorPair {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

// Prime factorization with factors in strictly increasing prime order.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<FactorPair> factors;
};

inline Factorization factorize(std::uint64_t n) {
  if (n == 0 || n > kValueCap)
    throw std::invalid_argument("factorize: value must lie in [1, 2^63-1]");
  Factorization out;
  out.value = n;
  std::vector<std::uint64_t> primes;
  for (std::uint32_t p : detail::small_primes()) {
    if (std::uint64_t{p} * p > n) break;
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  std::vector<std::uint64_t> pending;
  if (n > 1) pending.push_back(n);
  while (!pending.empty()) {
    const std::uint64_t m = pending.back();
    pending.pop_back();
    if (is_prime(m)) {
      primes.push_back(m);
      continue;
    }
    const std::uint64_t d = detail::pollard_brent(m);
    pending.push_back(d);
    pending.push_back(m / d);
  }
  std::sort(primes.begin(), primes.end());
  for (std::uint64_t p : primes) {
    if (!out.factors.empty() && out.factors.back().prime == p)
      ++out.factors.back().exponent;
    else
      out.factors.push_back({p, 1});
  }
  return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const FactorPair& f : factorize(n).factors) out.push_back(f.prime);
  return out;
}

// Order of q in the multiplicative group mod the prime r.
inline std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t r) {
  if (!is_prime(r)) throw std::invalid_argument("multiplicative_order: modulus must be prime");
  if (q % r == 0)
    throw std::invalid_argument("multiplicative_order: base must be coprime to the modulus");
  std::uint64_t ord = r - 1;
  for (const FactorPair& f : factorize(r - 1).factors) {
    for (unsigned i = 0; i < f.exponent; ++i) {
      const std::uint64_t reduced = ord / f.prime;
      if (ord % f.prime == 0 && pow_mod(q, reduced, r) == 1)
        ord = reduced;
      else
        break;
    }
  }
  return ord;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  unsigned __int128 v = 1;
  for (unsigned i = 0; i < exp; ++i) {
    v *= base;
    if (v > kValueCap) throw std::overflow_error("checked_pow: result exceeds 2^63-1");
  }
  return static_cast<std::uint64_t>(v);
}

inline std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 v = static_cast<unsigned __int128>(a) * b;
  if (v > kValueCap) throw std::overflow_error("mul_checked: result exceeds 2^63-1");
  return static_cast<std::uint64_t>(v);
}

inline std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("lcm_checked: arguments must be nonzero");
  return mul_checked(a / std::gcd(a, b), b);
}

// Primes r | q^n - 1 whose multiplicative order mod q is exactly n, i.e. the
// primitive prime divisors of q^n - 1.  May be empty (q=2, n=6, and n=2 with
// q+1 a power of two); callers decide whether emptiness is an error.
inline std::vector<std::uint64_t> zsigmondy_primes(std::uint64_t q, unsigned n) {
  if (q < 2 || n < 2) throw std::invalid_argument("zsigmondy_primes: need q >= 2 and n >= 2");
  const std::uint64_t qn = checked_pow(q, n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t r : prime_divisors(qn - 1))
    if (multiplicative_order(q, r) == n) out.push_back(r);
  return out;
}

enum class Sign { minus, plus };

// Primes dividing 3^alpha - 3^((alpha+1)/2) + 1 (sign minus) or
// 3^alpha + 3^((alpha+1)/2) + 1 (sign plus) that divide 3^(2i) - 3^i + 1 for
// no smaller odd i.  Nonempty for every odd alpha >= 3, and every member
// exceeds alpha; both facts are enforced by tests rather than asserted here.
inline std::vector<std::uint64_t> ree_primitive_primes(unsigned alpha, Sign sign) {
  if (alpha < 3 || alpha % 2 == 0)
    throw std::invalid_argument("ree_primitive_primes: alpha must be odd and >= 3");
  if (alpha > 39)
    throw std::overflow_error("ree_primitive_primes: 3^alpha exceeds 2^63-1 for alpha > 39");
  const std::uint64_t q = checked_pow(3, alpha);
  const std::uint64_t s = checked_pow(3, (alpha + 1) / 2);
  const std::uint64_t v = (sign == Sign::plus) ? q + s + 1 : q - s + 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t r : prime_divisors(v)) {
    bool primitive = true;
    for (unsigned i = 1; i + 2 <= alpha && primitive; i += 2) {
      const std::uint64_t t = pow_mod(3, i, r);
      if ((mul_mod(t, t, r) + r - t + 1) % r == 0) primitive = false;
    }
    if (primitive) out.push_back(r);
  }
  return out;
}

inline std::string to_decimal_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace ordspec
