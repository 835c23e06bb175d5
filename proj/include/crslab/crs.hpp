#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "crslab/caps.hpp"
#include "crslab/field.hpp"
#include "crslab/finab.hpp"
#include "crslab/rational.hpp"
#include "crslab/rng.hpp"
#include "crslab/subgroup.hpp"

namespace crslab::crs {

// One extreme point of the truncated random-subgroup parameter space:
// ambient modulus n (0 for the untwisted infinite-rank case), a multiplier
// m with m | n (m | 0 holds for every m; 0 does not divide n >= 1), and a
// finite abelian group F with nF = 0 (vacuous at n = 0) that is over m.
struct CrsParam {
  std::uint64_t ambient_n = 1;
  std::uint64_t m = 1;
  finab::FinAbGroup group;

  // Validates the three defining constraints; throws domain_error naming
  // the violated one.
  static CrsParam checked(std::uint64_t ambient_n, std::uint64_t m, finab::FinAbGroup group);

  std::string to_string() const;  // "(m, Z/2 + Z/2)", trivial group as "0"

  auto operator<=>(const CrsParam&) const = default;
};

// All parameters with |F| <= max_order for the given ambient n, sorted by
// (m ascending, |F| ascending, summands). For n >= 1, m runs over the
// divisors of n. For n = 0 the true parameter family is infinite; m is
// capped at max_order here (and m = 0 admits only the trivial group).
std::vector<CrsParam> enumerate_params(std::uint64_t n, std::uint64_t max_order);

// A characteristic subgroup marker: the zero subgroup, or the subgroup of
// r-th multiples.
struct CharMarker {
  bool is_zero = false;
  std::uint64_t r = 0;

  auto operator<=>(const CharMarker&) const = default;
};

// For n >= 1: {0} followed by r over the divisors of n. For n = 0 the
// family {r-th multiples : r >= 0} is infinite; it is truncated at
// r <= r_bound.
std::vector<CharMarker> char_subgroups(std::uint64_t n, std::uint64_t r_bound = 0);

// An exact probability measure on canonical subgroups of (Z/N)^k.
class SubgroupDistribution {
 public:
  using Table = std::map<TruncSubgroup, Rational>;

  SubgroupDistribution(std::uint64_t modulus, std::uint32_t rank, Table entries);

  std::uint64_t modulus() const { return modulus_; }
  std::uint32_t rank() const { return rank_; }
  const Table& entries() const { return entries_; }
  Rational probability_of(const TruncSubgroup& s) const;

  bool operator==(const SubgroupDistribution&) const = default;

 private:
  std::uint64_t modulus_;
  std::uint32_t rank_;
  Table entries_;  // positive probabilities, exact total mass 1
};

enum class Side { kernel, annihilator };

// One draw of the truncated random subgroup in (Z/n)^coords.
//
// Kernel side: h sends each of the `coords` standard generators to an
// independent uniform element of F (all of F is n-torsion); the subgroup is
// m*(Z/n)^coords intersected with Ker(h).
//
// Annihilator side: each cyclic summand Z/p^r of F maps to an independent
// uniform element of the p^r-torsion of (Z/n)^coords; the subgroup is
// Ann(m * .) plus the image.
//
// Both require ambient_n >= 1: parameters with ambient 0 have no finite
// truncation and raise domain_error.
TruncSubgroup sample_kernel_side(const CrsParam& param, std::uint32_t coords, SplitMix64& rng);
TruncSubgroup sample_annihilator_side(const CrsParam& param, std::uint32_t coords,
                                      SplitMix64& rng);

// Exact law of the sampler above: every homomorphism enumerated with equal
// weight (|F|^coords of them on either side).
SubgroupDistribution exact_distribution(const CrsParam& param, Side side, std::uint32_t coords,
                                        std::uint64_t cap = kDefaultEnumerationCap);

// Pushforward along the annihilator involution.
SubgroupDistribution pushforward_ann(const SubgroupDistribution& dist);

// Pushforward along v -> v*U for an invertible U; exact truncated laws of
// valid parameters are fixed points.
SubgroupDistribution apply_automorphism(const SubgroupDistribution& dist, const ZRowList& u);

// [vtilde_{n,0}, ..., vtilde_{n,n}] by enumerating Hom(F_q^n, F_q^kappa) as
// matrices and measuring dim Ker.
std::vector<Rational> intersection_dim_exact(const qlinalg::FieldPtr& field, std::uint32_t kappa,
                                             std::uint32_t n,
                                             std::uint64_t cap = kDefaultEnumerationCap);

// Counts of dim Ker over `samples` uniform draws; index k in [0, n].
std::vector<std::uint64_t> intersection_dim_monte_carlo(const qlinalg::FieldPtr& field,
                                                        std::uint32_t kappa, std::uint32_t n,
                                                        std::uint64_t samples, SplitMix64& rng);

// The shape of a parameter sequence, as far as its limit law is concerned.
struct SequenceDescriptor {
  enum class Trend { constant, diverges };

  Trend n_trend = Trend::constant;
  std::uint64_t n = 1;                       // used when n_trend == constant
  finab::FinAbGroup stable_part;             // fixed summand F
  std::vector<std::uint64_t> growing_blocks; // prime powers with multiplicity -> infinity
  Trend maxorder_trend = Trend::constant;    // constant means bounded

  void validate() const;  // growing blocks must be prime powers
};

// Limit of the sequence's laws: (0, 0) when n or the maximal order diverges;
// otherwise the parameter with m = lcm(n, blocks) and the stable part with
// every summand killed by that m removed (the canonical representative).
CrsParam classify_limit(const SequenceDescriptor& seq);

// (1/2) sum |p1 - p2| over the union of supports.
Rational tv_distance(const SubgroupDistribution& d1, const SubgroupDistribution& d2);

}  // namespace crslab::crs
