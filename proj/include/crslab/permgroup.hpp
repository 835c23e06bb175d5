#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "crslab/caps.hpp"
#include "crslab/freeword.hpp"

namespace crslab::freegrp {

// A permutation of {0, ..., degree-1}. Products compose left to right:
// (a * b)(x) = b(a(x)), matching right-multiplication coset walks.
class Permutation {
 public:
  explicit Permutation(std::uint32_t degree);        // identity
  explicit Permutation(std::vector<std::uint32_t> images);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }
  std::uint32_t apply(std::uint32_t x) const { return img_[x]; }
  bool is_identity() const;

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation power(std::int64_t e) const;

  // Extends with fixed points.
  Permutation padded_to(std::uint32_t degree) const;

  // Cycle notation on 1-based points, fixed points omitted: "(1 2 3)(4 5)";
  // the identity prints as "()".
  std::string to_cycle_string() const;
  static Permutation parse_cycles(const std::string& text, std::uint32_t min_degree = 0);

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> img_;
};

// A finite permutation group given by generators, materialized by closure.
// Degree is capped at 12 and the order at `order_cap`.
class FinGroup {
 public:
  static FinGroup generated_by(std::vector<Permutation> generators,
                               std::uint64_t order_cap = kDefaultGroupOrderCap);

  std::uint32_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<Permutation>& elements() const { return elems_; }
  std::uint64_t order() const { return elems_.size(); }
  bool contains(const Permutation& p) const;

 private:
  FinGroup() = default;

  std::uint32_t degree_ = 1;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;  // sorted
};

// Evaluates the word on the tuple: x_a^b ... maps to tuple[a-1]^b ...
// Requires tuple length >= the largest generator index used.
Permutation word_map_eval(const FreeWord& w, std::span<const Permutation> tuple);

// The subgroup generated by all word-map values f_w(G^v), w in words.
// Enumerates |G|^v tuples per word (v = largest index used in w), guarded
// by `tuple_cap`; the result is verified normal in G.
FinGroup verbal_subgroup(const FinGroup& g, const std::vector<FreeWord>& words,
                         std::uint64_t tuple_cap = kDefaultEnumerationCap);

}  // namespace crslab::freegrp
