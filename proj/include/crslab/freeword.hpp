#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace crslab::freegrp {

struct Syllable {
  std::uint32_t gen;     // generator index in [1, rank]
  std::int64_t exp;      // nonzero

  auto operator<=>(const Syllable&) const = default;
};

// A reduced word in the free group of the given rank: adjacent syllables
// use distinct generators, no zero exponents.
class FreeWord {
 public:
  explicit FreeWord(std::uint32_t rank) : rank_(rank) {}

  // Freely reduces an arbitrary syllable list.
  static FreeWord reduce(std::uint32_t rank, const std::vector<Syllable>& syllables);
  static FreeWord generator(std::uint32_t rank, std::uint32_t index, std::int64_t exp = 1);

  std::uint32_t rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  std::uint64_t length() const;  // sum of |exp|

  // "x1^2 x2^-3 x1"; the empty word prints as "1".
  std::string to_string() const;
  static FreeWord parse(std::uint32_t rank, const std::string& text);

  auto operator<=>(const FreeWord&) const = default;

 private:
  std::uint32_t rank_;
  std::vector<Syllable> syl_;
};

FreeWord multiply(const FreeWord& u, const FreeWord& v);
FreeWord invert(const FreeWord& u);
FreeWord commutator(const FreeWord& u, const FreeWord& v);  // u v u^-1 v^-1

// (x1^(np) x2^(np) x1^(-np) x2^(-np))^n, reduced; length 4 n^2 p.
// Requires p prime.
FreeWord adyan_word(std::uint32_t n, std::uint64_t p);

}  // namespace crslab::freegrp
