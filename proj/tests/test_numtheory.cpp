#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "ordspec/numtheory.hpp"

using namespace ordspec;

TEST_CASE("deterministic primality matches a sieve on small inputs") {
  std::vector<bool> composite(2000, false);
  for (std::uint64_t i = 2; i < 2000; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j < 2000; j += i) composite[j] = true;
  for (std::uint64_t n = 0; n < 2000; ++n) CHECK(is_prime(n) == (n >= 2 && !composite[n]));
}

TEST_CASE("primality at 64-bit scale") {
  CHECK(is_prime(2305843009213693951ull));   // 2^61 - 1
  CHECK_FALSE(is_prime(2147483647ull * 3));  // odd composite with a big factor
  CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
}

TEST_CASE("factorize recovers exact prime decompositions") {
  const Factorization j1 = factorize(175560);
  CHECK(j1.factors == std::vector<FactorPair>{{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}});

  CHECK(factorize(1).factors.empty());
  CHECK(factorize(2305843009213693951ull).factors ==
        std::vector<FactorPair>{{2305843009213693951ull, 1}});

  // semiprime of two 31-bit primes: forces the rho path past the sieve
  const std::uint64_t a = 2147483647ull, b = 2147483629ull;
  CHECK(factorize(a * b).factors == std::vector<FactorPair>{{b, 1}, {a, 1}});

  SECTION("value product reassembles") {
    for (std::uint64_t n : {2ull, 360ull, 1092ull, 10073444472ull, 9999999967ull}) {
      const Factorization f = factorize(n);
      std::uint64_t prod = 1;
      for (const FactorPair& fp : f.factors) {
        REQUIRE(is_prime(fp.prime));
        for (unsigned i = 0; i < fp.exponent; ++i) prod *= fp.prime;
      }
      CHECK(prod == n);
      CHECK(f.value == n);
    }
  }
}

TEST_CASE("factorize is deterministic across calls") {
  const std::uint64_t n = 614889782588491410ull;  // primorial-ish, many factors
  const Factorization f1 = factorize(n);
  const Factorization f2 = factorize(n);
  CHECK(f1.factors == f2.factors);
}

TEST_CASE("factorize rejects zero and values past the cap") {
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(kValueCap + 1), std::invalid_argument);
  CHECK_NOTHROW(factorize(kValueCap));  // 2^63 - 1 = 7^2 * 73 * 127 * 337 * 92737 * 649657
}

TEST_CASE("prime_divisors lists each prime once, ascending") {
  CHECK(prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_divisors(175560) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 19});
  CHECK(prime_divisors(1).empty());
}

TEST_CASE("multiplicative_order agrees with brute force") {
  for (std::uint64_t r : {3ull, 5ull, 7ull, 13ull, 19ull, 37ull, 101ull}) {
    for (std::uint64_t q = 1; q < 40; ++q) {
      if (q % r == 0) continue;
      std::uint64_t ord = 1, x = q % r;
      while (x != 1) {
        x = x * q % r;
        ++ord;
      }
      CHECK(multiplicative_order(q, r) == ord);
    }
  }
  CHECK_THROWS_AS(multiplicative_order(2, 15), std::invalid_argument);  // composite modulus
  CHECK_THROWS_AS(multiplicative_order(26, 13), std::invalid_argument); // base not coprime
}

TEST_CASE("checked arithmetic throws on 64-bit overflow instead of wrapping") {
  CHECK(checked_pow(3, 39) == 4052555153018976267ull);
  CHECK_THROWS_AS(checked_pow(3, 40), std::overflow_error);
  CHECK_THROWS_AS(checked_pow(2, 64), std::overflow_error);
  CHECK(checked_pow(7, 0) == 1);

  CHECK(mul_checked(3037000499ull, 3037000499ull) == 9223372030926249001ull);
  CHECK_THROWS_AS(mul_checked(3037000500ull, 3037000500ull), std::overflow_error);

  CHECK(lcm_checked(6, 9) == 18);
  CHECK(lcm_checked(26, 14) == 182);
  CHECK_THROWS_AS(lcm_checked(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(lcm_checked(kValueCap, kValueCap - 2), std::overflow_error);
}

TEST_CASE("zsigmondy_primes on known instances") {
  CHECK(zsigmondy_primes(2, 6).empty());
  CHECK(zsigmondy_primes(3, 3) == std::vector<std::uint64_t>{13});
  CHECK(zsigmondy_primes(3, 6) == std::vector<std::uint64_t>{7});
  CHECK(zsigmondy_primes(2, 11) == std::vector<std::uint64_t>{23, 89});
  CHECK(zsigmondy_primes(2, 4) == std::vector<std::uint64_t>{5});
  CHECK(zsigmondy_primes(6, 2) == std::vector<std::uint64_t>{7});
  CHECK(zsigmondy_primes(3, 2).empty());   // 3 + 1 = 2^2
  CHECK(zsigmondy_primes(63, 2).empty());  // 63 + 1 = 2^6
  CHECK_THROWS_AS(zsigmondy_primes(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(zsigmondy_primes(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(zsigmondy_primes(2, 64), std::overflow_error);
}

TEST_CASE("every primitive prime divisor is 1 mod n and divides no earlier q^i - 1") {
  for (std::uint64_t q = 2; q <= 12; ++q) {
    for (unsigned n = 2; n <= 12; ++n) {
      std::vector<std::uint64_t> primes;
      try {
        primes = zsigmondy_primes(q, n);
      } catch (const std::overflow_error&) {
        continue;
      }
      for (std::uint64_t r : primes) {
        CHECK(r % n == 1);
        CHECK(checked_pow(q, n) % r == 1);
        for (unsigned i = 1; i < n; ++i) CHECK(checked_pow(q, i) % r != 1);
      }
    }
  }
}

TEST_CASE("zsigmondy emptiness scan: only (2,6) and n=2 with q+1 a power of two") {
  std::vector<std::pair<std::uint64_t, unsigned>> empties;
  for (std::uint64_t q = 2; q <= 100; ++q)
    for (unsigned n = 2; n <= 20; ++n) {
      try {
        if (zsigmondy_primes(q, n).empty()) empties.emplace_back(q, n);
      } catch (const std::overflow_error&) {
      }
    }
  const std::vector<std::pair<std::uint64_t, unsigned>> expected = {
      {2, 6}, {3, 2}, {7, 2}, {15, 2}, {31, 2}, {63, 2}};
  CHECK(empties == expected);
}

TEST_CASE("3^(2n) - 3^n + 1 factors as the product of the two Ree torus orders") {
  for (unsigned n = 1; n <= 39; n += 2) {
    const unsigned __int128 t = checked_pow(3, n);
    const unsigned __int128 s = checked_pow(3, (n + 1) / 2);
    CHECK(t * t - t + 1 == (t - s + 1) * (t + s + 1));
  }
}

TEST_CASE("ree_primitive_primes frozen table") {
  using V = std::vector<std::uint64_t>;
  const std::map<unsigned, std::pair<V, V>> table = {
      {3, {{19}, {37}}},
      {5, {{31}, {271}}},
      {7, {{43}, {2269}}},
      {9, {{19441}, {19927}}},
      {11, {{176419}, {25411}}},
      {13, {{157, 10141}, {79, 2887}}},
      {15, {{387631}, {755551}}},
      {17, {{613, 30091}, {129159847}}},
      {19, {{3079, 53923}, {1162320517}}},
      {21, {{127, 883, 2521}, {550554229}}},
      {23, {{139, 5107, 132619}, {9109, 1476463}}},
      {25, {{26251, 119101}, {2551, 1530601}}},
      {27, {{163, 208657, 224209}, {1297, 5879415781}}},
      {29, {{261697, 37464463}, {349, 142159, 1383301}}},
      {31, {{88239050462461}, {373, 541447, 3058399}}},
      {33, {{199, 4357, 337448233}, {397, 378450588583}}},
      {35, {{24151, 3369031}, {211, 1051, 3454081}}},
      {37, {{223, 25709599, 78539161}, {64326272436179833}}},
      {39, {{937, 37441, 6079786129}, {1171, 2161927, 43264261}}},
  };
  for (const auto& [alpha, expected] : table) {
    CHECK(ree_primitive_primes(alpha, Sign::minus) == expected.first);
    CHECK(ree_primitive_primes(alpha, Sign::plus) == expected.second);
  }
}

TEST_CASE("ree primitive primes: nonempty, larger than alpha, truly primitive") {
  for (unsigned alpha = 3; alpha <= 39; alpha += 2) {
    for (Sign sign : {Sign::minus, Sign::plus}) {
      const std::vector<std::uint64_t> primes = ree_primitive_primes(alpha, sign);
      REQUIRE_FALSE(primes.empty());
      for (std::uint64_t r : primes) {
        CHECK(r > alpha);
        // r divides 3^(2i) - 3^i + 1 for no odd i below alpha
        for (unsigned i = 1; i < alpha; i += 2) {
          const std::uint64_t t = pow_mod(3, i, r);
          CHECK((mul_mod(t, t, r) + r - t + 1) % r != 0);
        }
      }
    }
  }
}

TEST_CASE("minus and plus primitive primes unite into the 6*alpha primitive divisors") {
  for (unsigned alpha : {3u, 5u}) {  // 3^(6*alpha) must stay below 2^63
    std::vector<std::uint64_t> unions = ree_primitive_primes(alpha, Sign::minus);
    for (std::uint64_t r : ree_primitive_primes(alpha, Sign::plus)) unions.push_back(r);
    std::sort(unions.begin(), unions.end());
    CHECK(unions == zsigmondy_primes(3, 6 * alpha));
  }
}

TEST_CASE("ree_primitive_primes input validation") {
  CHECK_THROWS_AS(ree_primitive_primes(1, Sign::minus), std::invalid_argument);
  CHECK_THROWS_AS(ree_primitive_primes(4, Sign::minus), std::invalid_argument);
  CHECK_THROWS_AS(ree_primitive_primes(41, Sign::minus), std::overflow_error);
}

TEST_CASE("to_decimal_string handles 128-bit magnitudes") {
  CHECK(to_decimal_string(0) == "0");
  CHECK(to_decimal_string(175560) == "175560");
  const unsigned __int128 big = static_cast<unsigned __int128>(10073444472ull) * 10073444472ull;
  CHECK(to_decimal_string(big) == "101474283530467358784");
}
