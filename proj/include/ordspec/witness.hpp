#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ordspec/families.hpp"
#include "ordspec/gf.hpp"
#include "ordspec/matrix.hpp"
#include "ordspec/spectrum.hpp"

namespace ordspec {

// Solvable Frobenius group GF(p^m)+ semidirect a cyclic subgroup C of the
// field's multiplicative group, elements written (v, c) with
// (v, c)(v', c') = (v c' + v', c c').  Two of these realize the spectrum of
// L2(q) x L2(q): F1 = GF(q)+ : C1 with |C1| = (q-1)/d and F2 = GF(q^2)+ : C2
// with |C2| = (q+1)/d.
struct FrobeniusGroup {
  FieldPtr field;                          // the kernel, additively
  std::vector<std::uint64_t> complement;   // the scale subgroup, powers of its generator

  std::uint64_t order() const { return field->size() * complement.size(); }
};

namespace detail {

inline std::vector<std::uint64_t> cyclic_subgroup(const FiniteField& f, std::uint64_t gen) {
  std::vector<std::uint64_t> out{1};
  for (std::uint64_t x = gen; x != 1; x = f.mul(x, gen)) out.push_back(x);
  return out;
}

}  // namespace detail

inline std::pair<FrobeniusGroup, FrobeniusGroup> build_witness_groups(std::uint64_t q) {
  const GroupFamilySpec l2 = linear2_spec(q);
  if (q > 16) throw std::invalid_argument("build_witness_groups: q must lie in [4, 16]");

  FrobeniusGroup f1;
  f1.field = build_field(l2.p, l2.alpha);
  f1.complement =
      detail::cyclic_subgroup(*f1.field, f1.field->pow(f1.field->smallest_generator(), l2.d));

  FrobeniusGroup f2;
  f2.field = build_field(l2.p, 2 * l2.alpha);
  f2.complement = detail::cyclic_subgroup(
      *f2.field, f2.field->pow(f2.field->smallest_generator(),
                               static_cast<std::uint64_t>(l2.d) * (q - 1)));
  return {std::move(f1), std::move(f2)};
}

// Order of (v, c) measured the honest way: iterate the group law until the
// identity comes back.
inline std::uint64_t frobenius_element_order(const FrobeniusGroup& g, std::uint64_t v,
                                             std::uint64_t c) {
  const FiniteField& f = *g.field;
  std::uint64_t av = v, ac = c, ord = 1;
  while (!(av == 0 && ac == 1)) {
    av = f.add(f.mul(av, c), v);
    ac = f.mul(ac, c);
    if (++ord > g.order()) throw std::logic_error("frobenius_element_order: runaway order");
  }
  return ord;
}

// The closed-form prediction: fixed-point-free action forces order |c| for
// c != 1, the characteristic for pure translations, 1 for the identity.
inline std::uint64_t frobenius_order_law(const FrobeniusGroup& g, std::uint64_t v,
                                         std::uint64_t c) {
  if (c != 1) return g.field->element_order(c);
  return v != 0 ? g.field->characteristic() : 1;
}

// Matrix model [[c, 0], [v, 1]] of (v, c), for cross-checks against the
// generic matrix element_order.
inline Matrix frobenius_matrix(const FrobeniusGroup& g, std::uint64_t v, std::uint64_t c) {
  Matrix m(g.field, 2);
  m.at(0, 0) = c;
  m.at(1, 0) = v;
  m.at(1, 1) = 1;
  return m;
}

inline SpectrumSet frobenius_spectrum(const FrobeniusGroup& g) {
  std::vector<std::uint64_t> orders;
  for (std::uint64_t c : g.complement)
    for (std::uint64_t v = 0; v < g.field->size(); ++v)
      orders.push_back(frobenius_element_order(g, v, c));
  return normalize_mu(std::move(orders));
}

struct UnrecognizabilityReport {
  std::uint64_t q = 0;
  std::uint64_t f1_order = 0;
  std::uint64_t f2_order = 0;
  SpectrumSet mu_witness;  // mu(F1 x F2), by enumeration and lcm closure
  SpectrumSet mu_square;   // mu(L2(q) x L2(q)), by the family formulas
  bool equal = false;
};

// The desk-scale counterexample check: the solvable group F1 x F2 has exactly
// the spectrum of L2(q) x L2(q), so the latter is not recognizable by its
// spectrum.
inline UnrecognizabilityReport verify_unrecognizability(std::uint64_t q) {
  const auto [f1, f2] = build_witness_groups(q);
  UnrecognizabilityReport report;
  report.q = q;
  report.f1_order = f1.order();
  report.f2_order = f2.order();
  const SpectrumSet s1 = frobenius_spectrum(f1);
  const SpectrumSet s2 = frobenius_spectrum(f2);
  std::vector<std::uint64_t> orders;
  for (std::uint64_t a : s1.mu())
    for (std::uint64_t b : s2.mu()) orders.push_back(lcm_checked(a, b));
  report.mu_witness = normalize_mu(std::move(orders));
  report.mu_square = mu_of(linear2_spec(q)).direct_square();
  report.equal = report.mu_witness == report.mu_square;
  return report;
}

}  // namespace ordspec
