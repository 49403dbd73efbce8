#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "ordspec/numtheory.hpp"

namespace ordspec {

namespace detail {

// Dense polynomial over GF(p), little-endian coefficients, used only while
// constructing fields (modulus search); element arithmetic re-reduces inline.
using Poly = std::vector<std::uint64_t>;

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

// Remainder of a modulo the monic polynomial f.
inline Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  while (a.size() > k) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - k;
    if (lead != 0)
      for (std::size_t j = 0; j < k; ++j)
        a[shift + j] = (a[shift + j] + lead * (p - f[j])) % p;
    a.pop_back();
  }
  poly_trim(a);
  return a;
}

inline Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e != 0) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // scale b monic, then a mod b
    const std::uint64_t inv_lead = pow_mod(b.back(), p - 2, p);
    Poly monic = b;
    for (std::uint64_t& c : monic) c = c * inv_lead % p;
    a = poly_mod(std::move(a), monic, p);
    std::swap(a, b);
    poly_trim(b);
  }
  return a;
}

inline bool poly_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  // Frobenius chain: frob[i] = x^(p^i) mod f.
  std::vector<Poly> frob(k + 1);
  frob[0] = {0, 1};
  for (std::size_t i = 1; i <= k; ++i) frob[i] = poly_pow_mod(frob[i - 1], p, f, p);
  if (frob[k] != frob[0]) return false;
  for (std::uint64_t t : prime_divisors(k)) {
    Poly diff = frob[k / t];
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;  // subtract x
    poly_trim(diff);
    Poly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;  // nontrivial common factor
  }
  return true;
}

}  // namespace detail

// GF(p^k) with elements encoded as integers in [0, p^k): the base-p digits of
// the code are the polynomial-basis coefficients (little-endian).  Extension
// fields of size <= 4096 get a dense multiplication table; larger ones
// multiply symbolically.
class FiniteField {
 public:
  static constexpr std::uint64_t kSizeLimit = 1u << 20;
  static constexpr std::uint64_t kTableLimit = 4096;

  FiniteField(std::uint64_t p, unsigned k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: characteristic must be prime");
    if (k == 0) throw std::invalid_argument("FiniteField: degree must be positive");
    size_ = 1;
    for (unsigned i = 0; i < k; ++i) {
      size_ *= p;
      if (size_ > kSizeLimit) throw std::invalid_argument("FiniteField: size exceeds 2^20");
    }
    find_modulus();
    if (k_ > 1 && size_ <= kTableLimit) build_table();
  }

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t size() const { return size_; }

  // Monic irreducible modulus, coefficients c[0..k] with c[k] = 1; the
  // integer-encoded candidate scan makes it the lexicographically smallest.
  const std::vector<std::uint64_t>& modulus() const { return mod_; }

  std::vector<std::uint64_t> coefficients(std::uint64_t a) const {
    check_element(a);
    std::vector<std::uint64_t> out(k_);
    for (unsigned i = 0; i < k_; ++i) {
      out[i] = a % p_;
      a /= p_;
    }
    return out;
  }

  std::uint64_t element(const std::vector<std::uint64_t>& coeffs) const {
    if (coeffs.size() > k_) throw std::invalid_argument("FiniteField: too many coefficients");
    std::uint64_t a = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      if (coeffs[i] >= p_) throw std::invalid_argument("FiniteField: coefficient not reduced");
      a = a * p_ + coeffs[i];
    }
    return a;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    check_element(a);
    check_element(b);
    if (k_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
      out += (a % p_ + b % p_) % p_ * mult;
      a /= p_;
      b /= p_;
      mult *= p_;
    }
    return out;
  }

  std::uint64_t neg(std::uint64_t a) const {
    check_element(a);
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    std::uint64_t out = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
      const std::uint64_t d = a % p_;
      out += (d == 0 ? 0 : p_ - d) * mult;
      a /= p_;
      mult *= p_;
    }
    return out;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    check_element(a);
    check_element(b);
    if (k_ == 1) return a * b % p_;
    if (!table_.empty()) return table_[a * size_ + b];
    return mul_slow(a, b);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    check_element(a);
    std::uint64_t r = 1;
    while (e != 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw std::invalid_argument("FiniteField: inverse of zero");
    return pow(a, size_ - 2);
  }

  // Multiplicative order of a nonzero element.
  std::uint64_t element_order(std::uint64_t a) const {
    if (a == 0) throw std::invalid_argument("FiniteField: zero has no multiplicative order");
    std::uint64_t ord = size_ - 1;
    for (const FactorPair& f : factorize(size_ - 1).factors) {
      for (unsigned i = 0; i < f.exponent; ++i) {
        const std::uint64_t reduced = ord / f.prime;
        if (ord % f.prime == 0 && pow(a, reduced) == 1)
          ord = reduced;
        else
          break;
      }
    }
    return ord;
  }

  // Smallest element (in the integer encoding) generating the full
  // multiplicative group; the determinism anchor for subgroup constructions.
  std::uint64_t smallest_generator() const {
    for (std::uint64_t g = 1; g < size_; ++g)
      if (element_order(g) == size_ - 1) return g;
    throw std::logic_error("FiniteField: no generator found");
  }

 private:
  void check_element(std::uint64_t a) const {
    if (a >= size_) throw std::invalid_argument("FiniteField: element code out of range");
  }

  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const {
    // school multiplication of digit vectors, reduced by the monic modulus
    std::uint64_t da[21], db[21], buf[41] = {0};
    for (unsigned i = 0; i < k_; ++i) {
      da[i] = a % p_;
      a /= p_;
      db[i] = b % p_;
      b /= p_;
    }
    for (unsigned i = 0; i < k_; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < k_; ++j) buf[i + j] = (buf[i + j] + da[i] * db[j]) % p_;
    }
    for (unsigned i = 2 * k_ - 2; i >= k_ && i < 41; --i) {
      const std::uint64_t lead = buf[i];
      if (lead != 0) {
        buf[i] = 0;
        for (unsigned j = 0; j < k_; ++j)
          buf[i - k_ + j] = (buf[i - k_ + j] + lead * (p_ - mod_[j])) % p_;
      }
    }
    std::uint64_t out = 0;
    for (unsigned i = k_; i-- > 0;) out = out * p_ + buf[i];
    return out;
  }

  void find_modulus() {
    // scan integer-encoded lower parts; x^k + (digits of m) — first
    // irreducible wins, giving a deterministic, minimal modulus
    for (std::uint64_t m = 0; m < size_; ++m) {
      detail::Poly f(k_ + 1, 0);
      std::uint64_t v = m;
      for (unsigned i = 0; i < k_; ++i) {
        f[i] = v % p_;
        v /= p_;
      }
      f[k_] = 1;
      if (detail::poly_irreducible(f, p_)) {
        mod_ = std::move(f);
        return;
      }
    }
    throw std::logic_error("FiniteField: no irreducible modulus found");
  }

  void build_table() {
    table_.resize(static_cast<std::size_t>(size_) * size_);
    for (std::uint64_t a = 0; a < size_; ++a)
      for (std::uint64_t b = a; b < size_; ++b) {
        const std::uint16_t v = static_cast<std::uint16_t>(mul_slow(a, b));
        table_[a * size_ + b] = v;
        table_[b * size_ + a] = v;
      }
  }

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t size_;
  std::vector<std::uint64_t> mod_;
  std::vector<std::uint16_t> table_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

inline FieldPtr build_field(std::uint64_t p, unsigned k) {
  return std::make_shared<const FiniteField>(p, k);
}

}  // namespace ordspec
