#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ordspec/gf.hpp"

namespace ordspec {

// Square matrix over a shared FiniteField; entries are field element codes.
class Matrix {
 public:
  Matrix(FieldPtr field, unsigned n)
      : field_(std::move(field)), n_(n), e_(static_cast<std::size_t>(n) * n, 0) {
    if (!field_ || n == 0) throw std::invalid_argument("Matrix: need a field and positive size");
  }

  static Matrix identity(FieldPtr field, unsigned n) {
    Matrix m(std::move(field), n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  unsigned dim() const { return n_; }
  const FiniteField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  std::uint64_t& at(unsigned i, unsigned j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  std::uint64_t at(unsigned i, unsigned j) const {
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }

  const std::vector<std::uint64_t>& entries() const { return e_; }

  Matrix operator*(const Matrix& o) const {
    if (field_.get() != o.field_.get() || n_ != o.n_)
      throw std::invalid_argument("Matrix: mismatched operands");
    const FiniteField& f = *field_;
    Matrix out(field_, n_);
    if (f.degree() == 1) {
      // prime field: accumulate integer dot products, reduce once
      const std::uint64_t p = f.characteristic();
      for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) {
          std::uint64_t acc = 0;
          for (unsigned k = 0; k < n_; ++k) acc += at(i, k) * o.at(k, j);
          out.at(i, j) = acc % p;
        }
    } else {
      for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) {
          std::uint64_t acc = 0;
          for (unsigned k = 0; k < n_; ++k) acc = f.add(acc, f.mul(at(i, k), o.at(k, j)));
          out.at(i, j) = acc;
        }
    }
    return out;
  }

  bool is_identity() const {
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j)
        if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
  }

  Matrix negated() const {
    Matrix out(field_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_->neg(e_[i]);
    return out;
  }

  bool invertible() const {
    const FiniteField& f = *field_;
    std::vector<std::uint64_t> a = e_;
    for (unsigned col = 0; col < n_; ++col) {
      unsigned pivot = col;
      while (pivot < n_ && a[static_cast<std::size_t>(pivot) * n_ + col] == 0) ++pivot;
      if (pivot == n_) return false;
      if (pivot != col)
        for (unsigned j = 0; j < n_; ++j)
          std::swap(a[static_cast<std::size_t>(pivot) * n_ + j],
                    a[static_cast<std::size_t>(col) * n_ + j]);
      const std::uint64_t inv = f.inv(a[static_cast<std::size_t>(col) * n_ + col]);
      for (unsigned row = col + 1; row < n_; ++row) {
        const std::uint64_t factor = f.mul(a[static_cast<std::size_t>(row) * n_ + col], inv);
        if (factor == 0) continue;
        for (unsigned j = col; j < n_; ++j) {
          auto& cell = a[static_cast<std::size_t>(row) * n_ + j];
          cell = f.sub(cell, f.mul(factor, a[static_cast<std::size_t>(col) * n_ + j]));
        }
      }
    }
    return true;
  }

  // Fixed-width byte packing of the entry codes, the key used by enumeration
  // stores.  Width adapts to the field size and nothing else.
  void pack(std::vector<unsigned char>& out) const {
    const unsigned width = packed_entry_width(field_->size());
    out.clear();
    out.reserve(e_.size() * width);
    for (std::uint64_t v : e_)
      for (unsigned b = 0; b < width; ++b) out.push_back(static_cast<unsigned char>(v >> (8 * b)));
  }

  static unsigned packed_entry_width(std::uint64_t field_size) {
    return field_size <= 0x100 ? 1 : field_size <= 0x10000 ? 2 : 4;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.field_.get() == b.field_.get() && a.e_ == b.e_;
  }

 private:
  FieldPtr field_;
  unsigned n_;
  std::vector<std::uint64_t> e_;
};

// Order by iterated powering.  The cap guards callers that feed elements of
// unexpectedly large order (wrong generators, wrong group).
inline std::uint64_t element_order(const Matrix& m, std::uint64_t cap = 1u << 20) {
  if (!m.invertible()) throw std::invalid_argument("element_order: singular matrix");
  Matrix x = m;
  std::uint64_t ord = 1;
  while (!x.is_identity()) {
    x = x * m;
    if (++ord > cap) throw std::runtime_error("element_order: cap exceeded");
  }
  return ord;
}

}  // namespace ordspec
