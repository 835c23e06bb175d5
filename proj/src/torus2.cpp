#include "crslab/torus2.hpp"

#include <numeric>
#include <string>

#include "crslab/errors.hpp"
#include "crslab/numtheory.hpp"

namespace crslab::torus2 {

using finab::divisors;
using finab::mobius;

BigInt beta(std::uint64_t r) {
  if (r == 0) throw domain_error("beta: r must be >= 1");
  BigInt total = 0;
  for (std::uint64_t k : divisors(r)) {
    total += BigInt(mobius(r / k)) * BigInt(k) * BigInt(k);
  }
  return total;
}

Rational alpha(std::uint64_t k, std::uint64_t r) {
  if (r == 0 || k == 0 || r % k != 0) {
    throw domain_error("alpha: need k | r with k, r >= 1");
  }
  return Rational(BigInt(mobius(r / k)) * BigInt(k) * BigInt(k), beta(r));
}

BigInt count_generating_pairs(std::uint64_t r, std::uint64_t cap) {
  if (r == 0) throw domain_error("count_generating_pairs: r must be >= 1");
  if (r > cap / r) {
    throw resource_limit_error("count_generating_pairs: r^2 exceeds the enumeration cap of " +
                               std::to_string(cap));
  }
  BigInt count = 0;
  for (std::uint64_t x = 0; x < r; ++x) {
    const std::uint64_t gx = std::gcd(x, r);
    for (std::uint64_t y = 0; y < r; ++y) {
      if (std::gcd(gx, y) == 1) count += 1;
    }
  }
  return count;
}

TorsionMeasure2::TorsionMeasure2(std::uint64_t r) : r_(r), w_(r * r, Rational(0)) {
  if (r == 0) throw domain_error("TorsionMeasure2: r must be >= 1");
}

TorsionMeasure2 TorsionMeasure2::zero(std::uint64_t r) { return TorsionMeasure2(r); }

TorsionMeasure2 TorsionMeasure2::haar(std::uint64_t r) {
  TorsionMeasure2 m(r);
  const Rational p(1, BigInt(r) * r);
  for (auto& w : m.w_) w = p;
  return m;
}

TorsionMeasure2 TorsionMeasure2::generating_pairs(std::uint64_t r) {
  TorsionMeasure2 m(r);
  const Rational p(1, beta(r));
  for (std::uint64_t x = 0; x < r; ++x) {
    for (std::uint64_t y = 0; y < r; ++y) {
      if (std::gcd(std::gcd(x, y), r) == 1) m.weight(x, y) = p;
    }
  }
  return m;
}

Rational TorsionMeasure2::total_mass() const {
  Rational mass = 0;
  for (const auto& w : w_) mass += w;
  return mass;
}

Rational decompose_tau_residual(std::uint64_t r, std::uint64_t cap) {
  if (r == 0) throw domain_error("decompose_tau_residual: r must be >= 1");
  if (r > cap / r) {
    throw resource_limit_error("decompose_tau_residual: r^2 exceeds the enumeration cap of " +
                               std::to_string(cap));
  }
  TorsionMeasure2 combined = TorsionMeasure2::zero(r);
  for (std::uint64_t k : divisors(r)) {
    const Rational a = alpha(k, r);
    if (a == 0) continue;
    // nu_k sits on the k-torsion: both coordinates are multiples of r/k,
    // each such point carrying 1/k^2.
    const std::uint64_t step = r / k;
    const Rational point_mass = a / Rational(BigInt(k) * k);
    for (std::uint64_t x = 0; x < r; x += step) {
      for (std::uint64_t y = 0; y < r; y += step) {
        combined.weight(x, y) += point_mass;
      }
    }
  }
  const TorsionMeasure2 tau = TorsionMeasure2::generating_pairs(r);
  Rational residual = 0;
  for (std::uint64_t x = 0; x < r; ++x) {
    for (std::uint64_t y = 0; y < r; ++y) {
      Rational diff = combined.weight(x, y) - tau.weight(x, y);
      if (diff < 0) diff = -diff;
      if (diff > residual) residual = diff;
    }
  }
  return residual;
}

Rational beta_product_ratio(std::uint64_t r) {
  if (r == 0) throw domain_error("beta_product_ratio: r must be >= 1");
  Rational ratio(beta(r), BigInt(r) * r);
  Rational product = 1;
  for (const auto& [p, e] : finab::factorize(r)) {
    (void)e;
    product *= Rational(BigInt(p) * p - 1, BigInt(p) * p);
  }
  if (ratio != product) {
    throw internal_error("beta_product_ratio: product formula mismatch at r = " +
                         std::to_string(r));
  }
  return ratio;
}

BigInt generating_tuple_count(std::uint64_t m, std::uint32_t k) {
  if (m == 0 || k == 0) throw domain_error("generating_tuple_count: need m, k >= 1");
  BigInt total = 0;
  for (std::uint64_t d : divisors(m)) {
    total += BigInt(mobius(m / d)) * big_pow(BigInt(d), k);
  }
  return total;
}

Rational generating_tuple_ratio(std::uint64_t m, std::uint32_t k) {
  return Rational(generating_tuple_count(m, k), big_pow(BigInt(m), k));
}

}  // namespace crslab::torus2
