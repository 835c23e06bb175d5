#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "crslab/rational.hpp"

namespace crslab::finab {

struct PrimePower {
  std::uint64_t p;
  std::uint32_t r;

  std::uint64_t order() const;
  auto operator<=>(const PrimePower&) const = default;
};

// A finite abelian group up to isomorphism: the multiset of prime-power
// cyclic summands, sorted with p ascending and r ascending within equal p.
// The trivial group is the empty list. Equality is isomorphism.
class FinAbGroup {
 public:
  FinAbGroup() = default;  // trivial group

  // CRT-splits each Z/d (d >= 1) into prime-power cyclic factors and sorts.
  static FinAbGroup from_orders(const std::vector<std::uint64_t>& cyclic_orders);
  static FinAbGroup from_prime_powers(std::vector<PrimePower> summands);

  const std::vector<PrimePower>& summands() const { return summands_; }
  bool trivial() const { return summands_.empty(); }
  BigInt order() const;
  std::uint64_t exponent() const;  // lcm of summand orders; 1 for trivial
  std::uint64_t maxorder() const { return exponent(); }

  // "Z/2 + Z/4 + Z/3" (canonical summand order); "0" for the trivial group.
  std::string to_sum_string() const;
  // "[2,4,3]"; "[]" for the trivial group.
  std::string to_tuple_string() const;
  // Accepts either text form.
  static FinAbGroup parse(const std::string& text);

  auto operator<=>(const FinAbGroup&) const = default;

 private:
  std::vector<PrimePower> summands_;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

// True iff F is trivial, or m >= 1 and no summand order divides m.
// For m = 0, true only for the trivial group.
bool is_over(const FinAbGroup& f, std::uint64_t m);

// {x in F : nx = 0}. n = 0 returns the trivial group by convention (the
// value never arises from the torsion/quotient calculus below, which is
// stated for n >= 1; a total function with a fixed convention is kept).
FinAbGroup n_torsion(const FinAbGroup& f, std::uint64_t n);

// F / F_(n) for n >= 1: each Z/p^r contributes Z/p^max(0, r - v_p(n)).
FinAbGroup quotient_by_n_torsion(const FinAbGroup& f, std::uint64_t n);

// The unique F over n with F/F_(n) isomorphic to H: each Z/p^t of H lifts
// to Z/p^(t+k) where p^k exactly divides n. n = 0 requires H trivial.
FinAbGroup lift_over(const FinAbGroup& h, std::uint64_t n);

// |Hom(G, H)| = prod over summand pairs of gcd of the orders.
BigInt hom_count(const FinAbGroup& g, const FinAbGroup& h);

// All isomorphism classes of the given order / of order <= bound,
// sorted by (order, summand list).
std::vector<FinAbGroup> groups_of_order(std::uint64_t n);
std::vector<FinAbGroup> groups_up_to(std::uint64_t bound);

}  // namespace crslab::finab
