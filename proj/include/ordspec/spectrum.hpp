#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordspec/numtheory.hpp"

namespace ordspec {

// Divisor-closed set of element orders, stored as mu: the elements maximal
// under divisibility, sorted ascending.  The full set is recoverable as the
// divisors of mu's members, so mu is the canonical compressed form.
class SpectrumSet {
 public:
  SpectrumSet() = default;

  const std::vector<std::uint64_t>& mu() const { return mu_; }

  // Whether n is the order of some element, i.e. divides a member of mu.
  bool contains(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("SpectrumSet::contains: orders are positive");
    for (std::uint64_t m : mu_)
      if (m % n == 0) return true;
    return false;
  }

  // Spectrum of G x G when this is the spectrum of G: all pairwise lcms.
  // Throws std::overflow_error if an lcm exceeds 2^63-1.
  SpectrumSet direct_square() const;

  // Union of the prime divisors of the members of mu, sorted ascending.
  std::vector<std::uint64_t> prime_support() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : mu_)
      for (std::uint64_t p : prime_divisors(m)) out.push_back(p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const SpectrumSet&, const SpectrumSet&) = default;

 private:
  friend SpectrumSet normalize_mu(std::vector<std::uint64_t> values);
  std::vector<std::uint64_t> mu_;
};

// Canonicalize an arbitrary list of element orders: sort, deduplicate, drop
// every value dividing another.  The input need not be divisor-closed; a
// divisibility-maximal generating list is enough (and is what it returns).
inline SpectrumSet normalize_mu(std::vector<std::uint64_t> values) {
  if (values.empty()) throw std::invalid_argument("normalize_mu: empty order list");
  for (std::uint64_t v : values)
    if (v == 0 || v > kValueCap)
      throw std::invalid_argument("normalize_mu: orders must lie in [1, 2^63-1]");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  SpectrumSet s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < values.size() && maximal; ++j)
      if (values[j] % values[i] == 0) maximal = false;
    if (maximal) s.mu_.push_back(values[i]);
  }
  return s;
}

inline SpectrumSet SpectrumSet::direct_square() const {
  std::vector<std::uint64_t> orders;
  orders.reserve(mu_.size() * (mu_.size() + 1) / 2);
  for (std::size_t i = 0; i < mu_.size(); ++i)
    for (std::size_t j = i; j < mu_.size(); ++j)
      orders.push_back(lcm_checked(mu_[i], mu_[j]));
  return normalize_mu(std::move(orders));
}

// Gruenberg-Kegel graph: vertices are the primes of the spectrum's support,
// p ~ q iff pq is an element order.  Capped at 64 vertices so adjacency rows
// and candidate sets fit in single machine words.
struct PrimeGraph {
  std::vector<std::uint64_t> vertices;  // ascending primes
  std::vector<std::uint64_t> adj;       // adj[i] bit j set iff vertices i, j adjacent

  bool adjacent(std::size_t i, std::size_t j) const { return (adj[i] >> j) & 1; }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges() const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        if (adjacent(i, j)) out.emplace_back(vertices[i], vertices[j]);
    return out;
  }

  bool complete() const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        if (!adjacent(i, j)) return false;
    return true;
  }
};

inline PrimeGraph prime_graph(const SpectrumSet& s) {
  PrimeGraph g;
  g.vertices = s.prime_support();
  if (g.vertices.size() > 64)
    throw std::invalid_argument("prime_graph: more than 64 vertices unsupported");
  g.adj.assign(g.vertices.size(), 0);
  const std::uint64_t cap = s.mu().empty() ? 0 : s.mu().back();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      const unsigned __int128 product =
          static_cast<unsigned __int128>(g.vertices[i]) * g.vertices[j];
      if (product > cap) continue;
      if (s.contains(static_cast<std::uint64_t>(product))) {
        g.adj[i] |= std::uint64_t{1} << j;
        g.adj[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return g;
}

namespace detail {

inline void mis_search(const std::vector<std::uint64_t>& adj, std::uint64_t cand,
                       unsigned size, unsigned& best) {
  if (size + static_cast<unsigned>(std::popcount(cand)) <= best) return;
  if (cand == 0) {
    best = size;
    return;
  }
  const int v = std::countr_zero(cand);
  const std::uint64_t bit = std::uint64_t{1} << v;
  mis_search(adj, cand & ~(adj[v] | bit), size + 1, best);
  // A vertex with no neighbor among the candidates belongs to some maximum
  // independent set, so the exclude branch only matters when it has one.
  if (adj[v] & cand) mis_search(adj, cand & ~bit, size, best);
}

inline unsigned mis_size(const std::vector<std::uint64_t>& adj, std::uint64_t cand) {
  unsigned best = 0;
  mis_search(adj, cand, 0, best);
  return best;
}

}  // namespace detail

struct IndependenceResult {
  unsigned t = 0;                       // independence number
  std::vector<std::uint64_t> witness;   // lex-smallest maximum independent set
};

// Exact maximum independent set by branch and bound, then the witness that is
// lexicographically smallest as a sorted prime list (greedy leftmost choice).
inline IndependenceResult independence_number(const PrimeGraph& g) {
  IndependenceResult res;
  const std::size_t n = g.vertices.size();
  if (n == 0) return res;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  res.t = detail::mis_size(g.adj, full);
  std::uint64_t avail = full;
  unsigned need = res.t;
  std::size_t start = 0;
  while (need > 0) {
    const unsigned before = need;
    for (std::size_t v = start; v < n; ++v) {
      if (!((avail >> v) & 1)) continue;
      std::uint64_t rest = avail & ~(g.adj[v] | (std::uint64_t{1} << v));
      if (v + 1 < 64) rest &= ~((std::uint64_t{1} << (v + 1)) - 1);
      else rest = 0;
      if (detail::mis_size(g.adj, rest) >= need - 1) {
        res.witness.push_back(g.vertices[v]);
        avail = rest;
        --need;
        start = v + 1;
        break;
      }
    }
    if (need == before)
      throw std::logic_error("independence_number: witness reconstruction stalled");
  }
  return res;
}

inline std::string dot_from_lists(const std::vector<std::uint64_t>& vertices,
                                  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
  std::ostringstream out;
  out << "graph prime_graph {\n";
  for (std::uint64_t v : vertices) out << "  \"" << v << "\";\n";
  for (const auto& [a, b] : edges) out << "  \"" << a << "\" -- \"" << b << "\";\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const PrimeGraph& g) { return dot_from_lists(g.vertices, g.edges()); }

}  // namespace ordspec
