#pragma once

#include <cstdint>
#include <vector>

#include "crslab/caps.hpp"
#include "crslab/rational.hpp"

namespace crslab::torus2 {

// beta(r) = sum over k | r of mobius(r/k) * k^2: the number of pairs in
// (Z/r)^2 that generate Z/r together.
BigInt beta(std::uint64_t r);

// alpha(k, r) = mobius(r/k) * k^2 / beta(r); requires k | r.
Rational alpha(std::uint64_t k, std::uint64_t r);

// Brute-force pair count: #{(x, y) in (Z/r)^2 : gcd(x, y, r) = 1}.
BigInt count_generating_pairs(std::uint64_t r, std::uint64_t cap = kDefaultEnumerationCap);

// A measure on the r-torsion grid (Z/r)^2 with exact rational weights.
// Signed weights are permitted only as intermediate decomposition values;
// the named constructors build probability measures.
class TorsionMeasure2 {
 public:
  static TorsionMeasure2 haar(std::uint64_t r);              // nu_r: uniform 1/r^2
  static TorsionMeasure2 generating_pairs(std::uint64_t r);  // tau_r: uniform on generators

  static TorsionMeasure2 zero(std::uint64_t r);

  std::uint64_t r() const { return r_; }
  const Rational& weight(std::uint64_t x, std::uint64_t y) const { return w_[x * r_ + y]; }
  Rational& weight(std::uint64_t x, std::uint64_t y) { return w_[x * r_ + y]; }
  Rational total_mass() const;

 private:
  explicit TorsionMeasure2(std::uint64_t r);

  std::uint64_t r_;
  std::vector<Rational> w_;
};

// Evaluates sum over k | r of alpha(k, r) * nu_k pointwise on (Z/r)^2
// (embedding (Z/k)^2 as the k-torsion points) and returns the largest
// absolute deviation from tau_r. Exact zero certifies the decomposition.
Rational decompose_tau_residual(std::uint64_t r, std::uint64_t cap = kDefaultEnumerationCap);

// beta(r)/r^2; checks the product formula over the distinct primes of r
// and throws internal_error on mismatch.
Rational beta_product_ratio(std::uint64_t r);

// Number of k-tuples generating Z/m: sum over d | m of mobius(m/d) * d^k.
BigInt generating_tuple_count(std::uint64_t m, std::uint32_t k);
Rational generating_tuple_ratio(std::uint64_t m, std::uint32_t k);

}  // namespace crslab::torus2
