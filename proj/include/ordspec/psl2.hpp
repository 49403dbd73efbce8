#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ordspec/enumerate.hpp"
#include "ordspec/matrix.hpp"
#include "ordspec/numtheory.hpp"

namespace ordspec {

// Exhaustive PSL(2,q): walk all determinant-1 matrices directly (no closure
// needed — d = (a(1+bc))^-1 parameterizes them), quotient by the center by
// keeping, of {M, -M}, the matrix whose first nonzero entry has the smaller
// element code, and read off every element order.
inline EnumerationResult enumerate_psl2(std::uint64_t q) {
  if (q < 4 || q > 64) throw std::invalid_argument("enumerate_psl2: q must lie in [4, 64]");
  const Factorization f = factorize(q);
  if (f.factors.size() != 1)
    throw std::invalid_argument("enumerate_psl2: q must be a prime power");
  const FieldPtr field = build_field(f.factors[0].prime, f.factors[0].exponent);
  const FiniteField& F = *field;
  const bool odd_char = F.characteristic() != 2;
  const Matrix neg_identity = Matrix::identity(field, 2).negated();

  EnumerationResult result;
  auto consider = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    if (odd_char) {
      const std::uint64_t lead = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
      if (lead > F.neg(lead)) return;  // the mate -M is the canonical one
    }
    Matrix m(field, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    std::uint64_t ord = 1;
    for (Matrix x = m;; x = x * m, ++ord) {
      if (x.is_identity() || (odd_char && x == neg_identity)) break;
      if (ord > 2 * q + 2) throw std::logic_error("enumerate_psl2: runaway element order");
    }
    ++result.census[ord];
    ++result.order;
  };

  for (std::uint64_t a = 1; a < q; ++a) {
    const std::uint64_t inv_a = F.inv(a);
    for (std::uint64_t b = 0; b < q; ++b)
      for (std::uint64_t c = 0; c < q; ++c)
        consider(a, b, c, F.mul(inv_a, F.add(1, F.mul(b, c))));
  }
  for (std::uint64_t b = 1; b < q; ++b) {
    const std::uint64_t c = F.neg(F.inv(b));  // det = -bc = 1
    for (std::uint64_t d = 0; d < q; ++d) consider(0, b, c, d);
  }

  std::vector<std::uint64_t> orders;
  for (const auto& [ord, count] : result.census) orders.push_back(ord);
  result.spectrum = normalize_mu(std::move(orders));
  return result;
}

}  // namespace ordspec
