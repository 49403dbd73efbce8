#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordspec/enumerate.hpp"
#include "ordspec/matrix.hpp"

namespace ordspec {

// Anything wrong with the generator data itself: unreadable file, malformed
// rows, failed sanity relations, or a closure that outgrows |J1|.
class J1DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct J1Generators {
  FieldPtr field;
  Matrix a;
  Matrix b;
};

inline constexpr std::size_t kJ1ClosureCap = 200000;

// Load the two 7x7 generators over GF(11) from the bundled text format:
// header lines "GF 11" and "DIM 7", then 14 rows of 7 entries (matrix a
// first), '#' starting a comment anywhere.  All parse errors carry the
// 1-based line number; the standard-generator relations |a| = 2, |b| = 3,
// |ab| = 7, |abab^2| = 19 are enforced before the data is accepted.
inline J1Generators load_j1_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw J1DataError("j1 generators: cannot open " + path);

  auto fail = [&path](int line, const std::string& msg) -> void {
    throw J1DataError("j1 generators: " + path + ":" + std::to_string(line) + ": " + msg);
  };

  std::vector<std::pair<int, std::string>> rows;  // (line number, significant text)
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    rows.emplace_back(lineno, raw);
  }

  if (rows.size() < 2) fail(lineno, "missing header (expected \"GF 11\" and \"DIM 7\")");
  {
    std::istringstream hs(rows[0].second);
    std::string word;
    std::uint64_t p = 0;
    if (!(hs >> word >> p) || word != "GF") fail(rows[0].first, "expected \"GF <p>\"");
    if (p != 11) fail(rows[0].first, "expected field GF(11)");
  }
  {
    std::istringstream hs(rows[1].second);
    std::string word;
    unsigned n = 0;
    if (!(hs >> word >> n) || word != "DIM") fail(rows[1].first, "expected \"DIM <n>\"");
    if (n != 7) fail(rows[1].first, "expected dimension 7");
  }
  if (rows.size() != 2 + 14)
    fail(rows.size() > 2 ? rows.back().first : rows[1].first,
         "expected exactly 14 matrix rows, found " + std::to_string(rows.size() - 2));

  FieldPtr field = build_field(11, 1);
  J1Generators out{field, Matrix(field, 7), Matrix(field, 7)};
  for (unsigned r = 0; r < 14; ++r) {
    std::istringstream rs(rows[2 + r].second);
    Matrix& target = r < 7 ? out.a : out.b;
    const unsigned row = r % 7;
    for (unsigned col = 0; col < 7; ++col) {
      long long v = -1;
      if (!(rs >> v) || v < 0 || v > 10)
        fail(rows[2 + r].first, "expected 7 integers in [0,10]");
      target.at(row, col) = static_cast<std::uint64_t>(v);
    }
    long long extra;
    if (rs >> extra) fail(rows[2 + r].first, "unexpected trailing entry");
  }

  const Matrix ab = out.a * out.b;
  const Matrix abab2 = ab * ab * out.b;
  auto order_or_zero = [](const Matrix& m) -> std::uint64_t {
    try {
      return element_order(m, 64);
    } catch (const std::exception&) {
      return 0;
    }
  };
  if (order_or_zero(out.a) != 2 || order_or_zero(out.b) != 3 || order_or_zero(ab) != 7 ||
      order_or_zero(abab2) != 19)
    throw J1DataError(
        "j1 generators: " + path +
        ": sanity relations failed (need |a|=2, |b|=3, |ab|=7, |abab^2|=19)");
  return out;
}

// Closure-based enumeration; generators must live in GL(7,11).  The 2*10^5
// cap is a hair above |J1| = 175560, so wrong generators trip it quickly.
inline EnumerationResult enumerate_j1(const std::vector<Matrix>& generators,
                                      std::size_t cap = kJ1ClosureCap) {
  if (generators.empty()) throw std::invalid_argument("enumerate_j1: no generators");
  for (const Matrix& g : generators)
    if (g.dim() != 7 || g.field().characteristic() != 11 || g.field().degree() != 1)
      throw std::invalid_argument("enumerate_j1: generators must be 7x7 over GF(11)");
  try {
    return enumerate_closure(generators, cap);
  } catch (const std::runtime_error& e) {
    throw J1DataError(e.what());  // cap blown: the data does not generate J1
  }
}

inline EnumerationResult enumerate_j1(const J1Generators& gens, std::size_t cap = kJ1ClosureCap) {
  return enumerate_j1(std::vector<Matrix>{gens.a, gens.b}, cap);
}

}  // namespace ordspec
