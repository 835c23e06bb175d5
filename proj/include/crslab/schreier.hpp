#pragma once

#include <cstdint>
#include <vector>

#include "crslab/caps.hpp"
#include "crslab/freeword.hpp"
#include "crslab/permgroup.hpp"
#include "crslab/rng.hpp"

namespace crslab::freegrp {

// The right-coset graph of the kernel K of the homomorphism sending the
// free generators x_1..x_r to the given permutations. Cosets are indexed
// by the elements of the generated group (coset 0 = identity), with the
// transition v -> v * image(x_i). A breadth-first spanning tree is built
// from coset 0, exploring generators in ascending index order, positive
// direction before negative; non-tree edges are kept in positive
// orientation and fixed order, indexing the Schreier basis.
class SchreierGraph {
 public:
  // The images' permutation action must be transitive on its points.
  static SchreierGraph build(std::uint32_t rank, const std::vector<Permutation>& images,
                             std::uint64_t group_cap = kDefaultGroupOrderCap);

  std::uint32_t rank() const { return rank_; }
  std::uint32_t index() const { return index_; }

  std::uint32_t step(std::uint32_t coset, std::uint32_t gen, bool positive) const;

  struct NonTreeEdge {
    std::uint32_t from;  // edge (from, from * gen) by generator gen
    std::uint32_t gen;   // in [1, rank]
  };
  const std::vector<NonTreeEdge>& non_tree_edges() const { return edges_; }

  // -1 when (from, gen) is a tree edge, else the basis index.
  std::int32_t edge_basis_index(std::uint32_t from, std::uint32_t gen) const;

  // The word read along the tree path from coset 0 to the given coset.
  FreeWord path_word(std::uint32_t coset) const;

 private:
  SchreierGraph() = default;

  struct TreeEdge {
    std::uint32_t parent;
    std::uint32_t gen;
    bool positive;
  };

  std::uint32_t rank_ = 0;
  std::uint32_t index_ = 0;
  std::vector<std::vector<std::uint32_t>> fwd_;  // fwd_[gen-1][v]
  std::vector<std::vector<std::uint32_t>> bwd_;
  std::vector<TreeEdge> tree_;                   // per coset, unused at 0
  std::vector<NonTreeEdge> edges_;
  std::vector<std::int32_t> edge_index_;         // (v * rank + gen-1) -> basis index or -1
};

// Schreier generators k_e = p_v x_s p_w^{-1}, one per non-tree edge, in the
// graph's edge order. These freely generate the kernel; the count is
// 1 + index * (rank - 1).
std::vector<FreeWord> schreier_basis(const SchreierGraph& graph);

// Coordinates of w in the abelianized kernel: the signed count of
// crossings of each non-tree edge along w's coset walk from 0. Requires
// the walk to return to coset 0 (i.e. w lies in the kernel).
std::vector<std::int64_t> rewrite_in_basis(const SchreierGraph& graph, const FreeWord& w);

// A uniformly random nonzero functional on (Z/p)^s, as a vector of length
// s with entries in [0, p); its kernel is an index-p subgroup.
std::vector<std::uint64_t> sample_index_p_subgroup(std::uint32_t s, std::uint64_t p,
                                                   SplitMix64& rng);

}  // namespace crslab::freegrp
