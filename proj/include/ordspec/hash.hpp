#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ordspec::detail {

inline std::uint64_t fnv1a(const unsigned char* data, std::size_t len) {
  std::uint64_t h = 14695981039346656037ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t fnv1a(std::string_view s) {
  return fnv1a(reinterpret_cast<const unsigned char*>(s.data()), s.size());
}

}  // namespace ordspec::detail
