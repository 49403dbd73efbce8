#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ordspec/numtheory.hpp"
#include "ordspec/spectrum.hpp"

namespace ordspec {

// The simple groups with abelian Sylow 2-subgroups: PSL(2,q) for q >= 4, the
// small Ree groups R(3^alpha) with alpha odd >= 3, and Janko's first group.
enum class Family { linear2, small_ree, janko1 };

struct GroupFamilySpec {
  Family family = Family::janko1;
  std::uint64_t q = 0;  // field size; 0 when the family has no parameter
  std::uint64_t p = 0;  // field characteristic
  unsigned alpha = 0;   // q = p^alpha
  unsigned d = 0;       // gcd(2, q-1)
};

inline GroupFamilySpec linear2_spec(std::uint64_t q) {
  if (q < 4) throw std::invalid_argument("linear2_spec: need q >= 4");
  const Factorization f = factorize(q);
  if (f.factors.size() != 1) throw std::invalid_argument("linear2_spec: q must be a prime power");
  GroupFamilySpec s;
  s.family = Family::linear2;
  s.q = q;
  s.p = f.factors[0].prime;
  s.alpha = f.factors[0].exponent;
  s.d = static_cast<unsigned>(std::gcd<std::uint64_t>(2, q - 1));
  return s;
}

inline GroupFamilySpec small_ree_spec(std::uint64_t q) {
  const Factorization f = factorize(q);
  if (f.factors.size() != 1 || f.factors[0].prime != 3 || f.factors[0].exponent < 3 ||
      f.factors[0].exponent % 2 == 0)
    throw std::invalid_argument("small_ree_spec: q must be 3^alpha with alpha odd and >= 3");
  GroupFamilySpec s;
  s.family = Family::small_ree;
  s.q = q;
  s.p = 3;
  s.alpha = f.factors[0].exponent;
  s.d = 2;
  return s;
}

inline GroupFamilySpec janko1_spec() {
  GroupFamilySpec s;
  s.family = Family::janko1;
  return s;
}

inline constexpr std::uint64_t kJanko1Order = 175560;  // 2^3 * 3 * 5 * 7 * 11 * 19

// Group order; throws std::overflow_error when it exceeds 2^63-1 (for the Ree
// family that happens from alpha = 7 on).
inline std::uint64_t order_of(const GroupFamilySpec& s) {
  switch (s.family) {
    case Family::linear2: {
      const std::uint64_t half = (s.q - 1) / s.d;
      return mul_checked(mul_checked(s.q, half), s.q + 1);
    }
    case Family::small_ree: {
      const std::uint64_t cube = mul_checked(s.q, mul_checked(s.q, s.q));
      return mul_checked(mul_checked(cube, cube + 1), s.q - 1);
    }
    case Family::janko1:
      return kJanko1Order;
  }
  throw std::logic_error("order_of: unknown family");
}

// Maximal element orders.  PSL(2,q): the characteristic plus the two torus
// orders (q-1)/d and (q+1)/d.  R(q): 6, 9, q-1, (q+1)/2 and the two cyclic
// Hall subgroup orders q -+ sqrt(3q) + 1.  J1: fixed list, cross-checked by
// brute-force enumeration in the test suite.
inline SpectrumSet mu_of(const GroupFamilySpec& s) {
  switch (s.family) {
    case Family::linear2:
      return normalize_mu({s.p, (s.q - 1) / s.d, (s.q + 1) / s.d});
    case Family::small_ree: {
      const std::uint64_t root = checked_pow(3, (s.alpha + 1) / 2);  // sqrt(3q)
      return normalize_mu(
          {6, 9, s.q - 1, (s.q + 1) / 2, s.q - root + 1, s.q + root + 1});
    }
    case Family::janko1:
      return normalize_mu({6, 7, 10, 11, 15, 19});
  }
  throw std::logic_error("mu_of: unknown family");
}

// Primes dividing |G|, assembled from the factored pieces so that huge orders
// (Ree, alpha up to 39) never need to be multiplied out.
inline std::vector<std::uint64_t> prime_divisors_of_order(const GroupFamilySpec& s) {
  std::vector<std::uint64_t> out;
  switch (s.family) {
    case Family::linear2: {
      out.push_back(s.p);
      for (std::uint64_t r : prime_divisors(s.q - 1)) out.push_back(r);
      for (std::uint64_t r : prime_divisors(s.q + 1)) out.push_back(r);
      break;
    }
    case Family::small_ree: {
      const std::uint64_t root = checked_pow(3, (s.alpha + 1) / 2);
      out = {2, 3};
      for (std::uint64_t m :
           {s.q - 1, (s.q + 1) / 2, s.q - root + 1, s.q + root + 1})
        for (std::uint64_t r : prime_divisors(m)) out.push_back(r);
      break;
    }
    case Family::janko1:
      out = {2, 3, 5, 7, 11, 19};
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// The arithmetic skeleton of R(q), q = 3^alpha: the six pairwise "almost
// coprime" numbers m1..m6, their odd prime supports pi1..pi6 (pi1 = {2},
// pi2 = {3}), and the primitive-prime subsets rho3..rho6 governing which
// primes see q for the first time at this alpha.
struct ReeComponents {
  std::array<std::uint64_t, 6> m{};                // m[i-1] = m_i
  std::array<std::vector<std::uint64_t>, 6> pi;    // pi[i-1] = pi_i
  std::array<std::vector<std::uint64_t>, 4> rho;   // rho[i-3] = rho_i for i = 3..6
};

inline ReeComponents ree_components(unsigned alpha) {
  if (alpha < 3 || alpha % 2 == 0 || alpha > 39)
    throw std::invalid_argument("ree_components: alpha must be odd with 3 <= alpha <= 39");
  const std::uint64_t q = checked_pow(3, alpha);
  const std::uint64_t root = checked_pow(3, (alpha + 1) / 2);
  ReeComponents c;
  c.m = {6, 9, q - 1, (q + 1) / 2, q - root + 1, q + root + 1};
  c.pi[0] = {2};
  c.pi[1] = {3};
  for (std::size_t i = 2; i < 6; ++i)
    for (std::uint64_t r : prime_divisors(c.m[i]))
      if (r != 2) c.pi[i].push_back(r);
  // rho3 / rho4: primes of m3 / m4 where 3 has order exactly alpha / 2*alpha.
  // This equals the primitive-prime-divisor set of 3^alpha - 1 resp.
  // 3^(2*alpha) - 1 while avoiding the 128-bit value 3^(2*alpha) itself.
  for (std::uint64_t r : c.pi[2])
    if (multiplicative_order(3, r) == alpha) c.rho[0].push_back(r);
  for (std::uint64_t r : c.pi[3])
    if (multiplicative_order(3, r) == 2ull * alpha) c.rho[1].push_back(r);
  c.rho[2] = ree_primitive_primes(alpha, Sign::minus);
  c.rho[3] = ree_primitive_primes(alpha, Sign::plus);
  return c;
}

// q = 2^alpha or q ≡ ±3 (mod 8) makes the Sylow 2-subgroups of PSL(2,q)
// elementary abelian; the Ree groups and J1 have them elementary abelian of
// order 8 unconditionally.
inline bool has_abelian_sylow2(const GroupFamilySpec& s) {
  switch (s.family) {
    case Family::linear2:
      return s.p == 2 || s.q % 8 == 3 || s.q % 8 == 5;
    case Family::small_ree:
    case Family::janko1:
      return true;
  }
  throw std::logic_error("has_abelian_sylow2: unknown family");
}

inline bool order_coprime_to_5(const GroupFamilySpec& s) {
  for (std::uint64_t r : prime_divisors_of_order(s))
    if (r == 5) return false;
  return true;
}

}  // namespace ordspec
