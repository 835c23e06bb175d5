#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "crslab/howell.hpp"
#include "crslab/rational.hpp"

namespace crslab::crs {

// A subgroup of (Z/N)^k in canonical Howell normal form; the finite
// truncation carrier. Elements are row vectors, pairing <x,y> = sum x_i y_i
// mod N (self-dual).
class TruncSubgroup {
 public:
  // Canonicalizes arbitrary generator rows.
  TruncSubgroup(std::uint64_t modulus, std::uint32_t rank, ZRowList generators);

  static TruncSubgroup zero(std::uint64_t modulus, std::uint32_t rank);
  static TruncSubgroup full(std::uint64_t modulus, std::uint32_t rank);

  std::uint64_t modulus() const { return modulus_; }
  std::uint32_t rank() const { return rank_; }
  const ZRowList& gens() const { return gens_; }

  BigInt order() const;
  bool is_zero() const { return gens_.empty(); }
  bool is_full() const;
  bool contains(const ZRow& v) const;

  auto operator<=>(const TruncSubgroup&) const = default;

 private:
  std::uint64_t modulus_;
  std::uint32_t rank_;
  ZRowList gens_;  // Howell canonical, nonzero rows only
};

// Annihilator under the self-dual pairing; an involution. (The kernel map
// of the dual direction is the same map on this carrier.)
TruncSubgroup ann_sub(const TruncSubgroup& h);
inline TruncSubgroup ker_sub(const TruncSubgroup& h) { return ann_sub(h); }

// Ann(m * (Z/N)^k) = (d * Z/N)^k with d = N / gcd(m, N).
TruncSubgroup ann_of_multiple(std::uint64_t m, std::uint64_t modulus, std::uint32_t rank);

// m * (Z/N)^k.
TruncSubgroup multiple_subgroup(std::uint64_t m, std::uint64_t modulus, std::uint32_t rank);

TruncSubgroup sum_sub(const TruncSubgroup& h, const TruncSubgroup& k);
TruncSubgroup intersect_sub(const TruncSubgroup& h, const TruncSubgroup& k);

// Image of the subgroup under v -> v * U (U a rank x rank matrix mod N);
// U must be invertible mod N.
TruncSubgroup apply_matrix(const TruncSubgroup& h, const ZRowList& u);

bool invertible_mod(const ZRowList& u, std::uint64_t modulus);

}  // namespace crslab::crs
