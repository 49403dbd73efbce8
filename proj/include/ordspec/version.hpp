#pragma once

#include <cstdint>

namespace ordspec {

inline constexpr const char* kToolkitVersion = "1.0.0";

// Fixed seed for every randomized-looking internal (Pollard rho's iteration
// constants).  Reported in JSON envelopes so identical inputs provably map to
// identical outputs.
inline constexpr std::uint64_t kDeterministicSeed = 2654435769u;

}  // namespace ordspec
