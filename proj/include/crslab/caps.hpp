#pragma once

#include <cstdint>

namespace crslab {

// Hard ceiling on the number of objects any exhaustive enumeration may visit
// (matrices, homomorphisms, lattice points). Overridable per call; the CLI
// also honors the CRSLAB_ENUM_CAP environment variable.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

// Ceiling on the order of a permutation group built by closure.
// CLI override: CRSLAB_GROUP_CAP.
inline constexpr std::uint64_t kDefaultGroupOrderCap = 10000;

}  // namespace crslab
