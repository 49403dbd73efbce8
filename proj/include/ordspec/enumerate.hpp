#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ordspec/hash.hpp"
#include "ordspec/matrix.hpp"
#include "ordspec/spectrum.hpp"

namespace ordspec {

struct EnumerationResult {
  std::uint64_t order = 0;
  SpectrumSet spectrum;
  std::map<std::uint64_t, std::uint64_t> census;  // element order -> multiplicity
};

namespace detail {

// Append-only set of packed matrices: one contiguous byte arena plus a
// hash->indices map, so closures of 2*10^5 seven-by-seven matrices stay well
// under criterion-level memory budgets.
class PackedMatrixStore {
 public:
  PackedMatrixStore(FieldPtr field, unsigned dim)
      : field_(std::move(field)),
        dim_(dim),
        stride_(static_cast<std::size_t>(dim) * dim * Matrix::packed_entry_width(field_->size())) {}

  std::size_t size() const { return count_; }

  bool insert(const std::vector<unsigned char>& key) {
    const std::uint64_t h = fnv1a(key.data(), key.size());
    auto& bucket = buckets_[h];
    for (std::uint32_t idx : bucket)
      if (equal_at(idx, key)) return false;
    bucket.push_back(static_cast<std::uint32_t>(count_));
    arena_.insert(arena_.end(), key.begin(), key.end());
    ++count_;
    return true;
  }

  Matrix unpack(std::size_t idx) const {
    const unsigned width = Matrix::packed_entry_width(field_->size());
    Matrix m(field_, dim_);
    const unsigned char* base = arena_.data() + idx * stride_;
    for (unsigned i = 0; i < dim_; ++i)
      for (unsigned j = 0; j < dim_; ++j) {
        std::uint64_t v = 0;
        for (unsigned b = 0; b < width; ++b)
          v |= static_cast<std::uint64_t>(*base++) << (8 * b);
        m.at(i, j) = v;
      }
    return m;
  }

 private:
  bool equal_at(std::size_t idx, const std::vector<unsigned char>& key) const {
    const unsigned char* base = arena_.data() + idx * stride_;
    for (std::size_t i = 0; i < stride_; ++i)
      if (base[i] != key[i]) return false;
    return true;
  }

  FieldPtr field_;
  unsigned dim_;
  std::size_t stride_;
  std::size_t count_ = 0;
  std::vector<unsigned char> arena_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets_;
};

}  // namespace detail

// Breadth-first closure of the generated group under right multiplication.
// Throws std::runtime_error once the closure grows past cap (wrong input
// group) and std::invalid_argument for malformed generator lists.
inline EnumerationResult enumerate_closure(const std::vector<Matrix>& generators,
                                           std::size_t cap = 300000) {
  if (generators.empty())
    throw std::invalid_argument("enumerate_closure: need at least one generator");
  const FieldPtr field = generators.front().field_ptr();
  const unsigned dim = generators.front().dim();
  for (const Matrix& g : generators) {
    if (g.field_ptr().get() != field.get() || g.dim() != dim)
      throw std::invalid_argument("enumerate_closure: generators disagree on field or size");
    if (!g.invertible())
      throw std::invalid_argument("enumerate_closure: singular generator");
  }

  detail::PackedMatrixStore store(field, dim);
  std::vector<unsigned char> key;
  Matrix::identity(field, dim).pack(key);
  store.insert(key);
  for (std::size_t head = 0; head < store.size(); ++head) {
    const Matrix m = store.unpack(head);
    for (const Matrix& g : generators) {
      (m * g).pack(key);
      if (store.insert(key) && store.size() > cap)
        throw std::runtime_error("enumerate_closure: cap exceeded");
    }
  }

  EnumerationResult result;
  result.order = store.size();
  std::vector<std::uint64_t> orders;
  for (std::size_t i = 0; i < store.size(); ++i) {
    const std::uint64_t ord = element_order(store.unpack(i), store.size());
    ++result.census[ord];
    orders.push_back(ord);
  }
  result.spectrum = normalize_mu(std::move(orders));
  return result;
}

}  // namespace ordspec
