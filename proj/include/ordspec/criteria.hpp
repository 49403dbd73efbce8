#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordspec/numtheory.hpp"
#include "ordspec/spectrum.hpp"

namespace ordspec {

enum class WitnessKind { triple, quadruple };

// One membership query performed while validating a witness: the primes
// multiplied, their product (128-bit — four 60-bit primes can overflow u64),
// and whether the product is an element order.
struct ProductQuery {
  std::vector<std::uint64_t> primes;
  unsigned __int128 product = 0;
  bool in_spectrum = false;
};

// A set of primes certifying nonsolvability of any group with this spectrum:
// either three primes with all pairwise products missing, or four primes with
// all pairwise products present but all triple products missing.
struct NonsolvabilityWitness {
  WitnessKind kind = WitnessKind::triple;
  std::vector<std::uint64_t> primes;        // sorted, size 3 or 4
  std::vector<ProductQuery> verified_products;
};

struct AuditReport {
  std::string source;                         // description of the audited spectrum
  std::optional<NonsolvabilityWitness> witness;
  std::uint64_t search_space = 0;             // subsets examined before stopping
};

namespace detail {

inline bool contains_product(const SpectrumSet& s, unsigned __int128 product) {
  if (s.mu().empty() || product > s.mu().back()) return false;
  return s.contains(static_cast<std::uint64_t>(product));
}

inline void require_witness_primes(const SpectrumSet& s, const std::uint64_t* primes,
                                   std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (!is_prime(primes[i]))
      throw std::invalid_argument("nonsolvability check: witness entries must be prime");
    for (std::size_t j = i + 1; j < count; ++j)
      if (primes[i] == primes[j])
        throw std::invalid_argument("nonsolvability check: witness primes must be distinct");
    if (!s.contains(primes[i]))
      throw std::invalid_argument(
          "nonsolvability check: witness primes must divide some element order");
  }
}

inline ProductQuery query_product(const SpectrumSet& s, std::vector<std::uint64_t> primes) {
  ProductQuery q;
  q.product = 1;
  for (std::uint64_t p : primes) q.product *= p;
  q.primes = std::move(primes);
  q.in_spectrum = contains_product(s, q.product);
  return q;
}

}  // namespace detail

// Three distinct primes of the spectrum, pairwise products all absent.
inline bool check_triple(const SpectrumSet& s, const std::array<std::uint64_t, 3>& sigma) {
  detail::require_witness_primes(s, sigma.data(), sigma.size());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (detail::contains_product(
              s, static_cast<unsigned __int128>(sigma[i]) * sigma[j]))
        return false;
  return true;
}

// Four distinct primes of the spectrum: every pairwise product present, every
// triple product absent.
inline bool check_quadruple(const SpectrumSet& s, const std::array<std::uint64_t, 4>& sigma) {
  detail::require_witness_primes(s, sigma.data(), sigma.size());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!detail::contains_product(
              s, static_cast<unsigned __int128>(sigma[i]) * sigma[j]))
        return false;
  for (std::size_t skip = 4; skip-- > 0;) {  // triples in lex order
    unsigned __int128 product = 1;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != skip) product *= sigma[i];
    if (detail::contains_product(s, product)) return false;
  }
  return true;
}

// Exhaustive deterministic search: all 3-subsets of the prime support in
// lexicographic order, then all 4-subsets; the first witness wins.  The
// criterion is sufficient for nonsolvability, never necessary, so an empty
// result is reported as "no witness found" and nothing stronger.
inline AuditReport audit_nonsolvability(const SpectrumSet& s,
                                        std::string source = "spectrum") {
  const std::vector<std::uint64_t> primes = s.prime_support();
  if (primes.size() > 20)
    throw std::invalid_argument("audit_nonsolvability: prime support larger than 20");
  AuditReport report;
  report.source = std::move(source);
  const std::size_t n = primes.size();

  auto record_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    NonsolvabilityWitness w;
    w.kind = WitnessKind::triple;
    w.primes = {primes[i], primes[j], primes[k]};
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = x + 1; y < 3; ++y)
        w.verified_products.push_back(
            detail::query_product(s, {w.primes[x], w.primes[y]}));
    report.witness = std::move(w);
  };
  auto record_quadruple = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    NonsolvabilityWitness w;
    w.kind = WitnessKind::quadruple;
    w.primes = {primes[i], primes[j], primes[k], primes[l]};
    for (std::size_t x = 0; x < 4; ++x)
      for (std::size_t y = x + 1; y < 4; ++y)
        w.verified_products.push_back(
            detail::query_product(s, {w.primes[x], w.primes[y]}));
    for (std::size_t skip = 4; skip-- > 0;) {
      std::vector<std::uint64_t> triple;
      for (std::size_t x = 0; x < 4; ++x)
        if (x != skip) triple.push_back(w.primes[x]);
      w.verified_products.push_back(detail::query_product(s, std::move(triple)));
    }
    report.witness = std::move(w);
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        ++report.search_space;
        if (check_triple(s, {primes[i], primes[j], primes[k]})) {
          record_triple(i, j, k);
          return report;
        }
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          ++report.search_space;
          if (check_quadruple(s, {primes[i], primes[j], primes[k], primes[l]})) {
            record_quadruple(i, j, k, l);
            return report;
          }
        }
  return report;
}

}  // namespace ordspec
