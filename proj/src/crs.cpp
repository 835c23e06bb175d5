#include "crslab/crs.hpp"

#include "crslab/errors.hpp"
#include "crslab/fqmatrix.hpp"
#include "crslab/numtheory.hpp"

namespace crslab::crs {

using finab::FinAbGroup;

CrsParam CrsParam::checked(std::uint64_t ambient_n, std::uint64_t m, FinAbGroup group) {
  if (ambient_n >= 1 && (m == 0 || ambient_n % m != 0)) {
    throw domain_error("m must divide n");
  }
  if (ambient_n >= 1 && ambient_n % group.exponent() != 0) {
    throw domain_error("nF must vanish");
  }
  if (!finab::is_over(group, m)) {
    throw domain_error("F must be over m");
  }
  return CrsParam{ambient_n, m, std::move(group)};
}

std::string CrsParam::to_string() const {
  return "(" + std::to_string(m) + ", " + group.to_sum_string() + ")";
}

std::vector<CrsParam> enumerate_params(std::uint64_t n, std::uint64_t max_order) {
  const std::vector<FinAbGroup> candidates = finab::groups_up_to(max_order);
  std::vector<std::uint64_t> ms;
  if (n >= 1) {
    ms = finab::divisors(n);
  } else {
    // The true family at n = 0 is infinite; m is capped at max_order.
    for (std::uint64_t m = 0; m <= max_order; ++m) ms.push_back(m);
  }

  std::vector<CrsParam> out;
  for (std::uint64_t m : ms) {
    for (const auto& f : candidates) {
      if (n >= 1 && n % f.exponent() != 0) continue;
      if (!finab::is_over(f, m)) continue;
      out.push_back(CrsParam{n, m, f});
    }
  }
  // candidates are already (order, summands)-sorted, m ascends outermost.
  return out;
}

std::vector<CharMarker> char_subgroups(std::uint64_t n, std::uint64_t r_bound) {
  std::vector<CharMarker> out;
  if (n >= 1) {
    out.push_back(CharMarker{true, 0});
    for (std::uint64_t r : finab::divisors(n)) out.push_back(CharMarker{false, r});
  } else {
    for (std::uint64_t r = 0; r <= r_bound; ++r) out.push_back(CharMarker{false, r});
  }
  return out;
}

SubgroupDistribution::SubgroupDistribution(std::uint64_t modulus, std::uint32_t rank,
                                           Table entries)
    : modulus_(modulus), rank_(rank), entries_(std::move(entries)) {
  Rational mass = 0;
  for (const auto& [subgroup, prob] : entries_) {
    if (subgroup.modulus() != modulus_ || subgroup.rank() != rank_) {
      throw domain_error("SubgroupDistribution: key does not match modulus/rank");
    }
    if (prob <= 0) throw domain_error("SubgroupDistribution: probabilities must be positive");
    mass += prob;
  }
  if (mass != 1) {
    throw domain_error("SubgroupDistribution: total mass " + rational_string(mass) +
                       " is not 1");
  }
}

Rational SubgroupDistribution::probability_of(const TruncSubgroup& s) const {
  auto it = entries_.find(s);
  return it == entries_.end() ? Rational(0) : it->second;
}

namespace {

void require_samplable(const CrsParam& param) {
  if (param.ambient_n == 0) {
    throw domain_error(
        "parameters with ambient 0 have no finite truncation and cannot be "
        "sampled; only enumeration and limit classification apply");
  }
  CrsParam::checked(param.ambient_n, param.m, param.group);
}

// Kernel-side subgroup for one homomorphism, given the image of generator i
// as images[i] (an element of F in per-summand coordinates).
TruncSubgroup kernel_side_subgroup(const CrsParam& param, std::uint32_t coords,
                                   const std::vector<std::vector<std::uint64_t>>& images) {
  const std::uint64_t n = param.ambient_n;
  const auto& summands = param.group.summands();
  // One constraint per summand Z/q: sum_i x_i a_ij = 0 mod q, lifted to
  // mod n by scaling with n/q.
  ZRowList constraints;
  for (std::size_t j = 0; j < summands.size(); ++j) {
    const std::uint64_t q = summands[j].order();
    ZRow row(coords, 0);
    for (std::uint32_t i = 0; i < coords; ++i) {
      row[i] = ((n / q) * images[i][j]) % n;
    }
    constraints.push_back(std::move(row));
  }
  TruncSubgroup kernel(n, coords, kernel_mod(constraints, n, coords));
  return intersect_sub(multiple_subgroup(param.m, n, coords), kernel);
}

// Annihilator-side subgroup for one homomorphism, given the image vector of
// each summand generator.
TruncSubgroup annihilator_side_subgroup(const CrsParam& param, std::uint32_t coords,
                                        const ZRowList& images) {
  const std::uint64_t n = param.ambient_n;
  TruncSubgroup base = ann_of_multiple(param.m, n, coords);
  ZRowList rows = base.gens();
  rows.insert(rows.end(), images.begin(), images.end());
  return TruncSubgroup(n, coords, std::move(rows));
}

}  // namespace

TruncSubgroup sample_kernel_side(const CrsParam& param, std::uint32_t coords, SplitMix64& rng) {
  require_samplable(param);
  if (coords == 0) throw domain_error("coords must be >= 1");
  const auto& summands = param.group.summands();
  std::vector<std::vector<std::uint64_t>> images(coords,
                                                 std::vector<std::uint64_t>(summands.size()));
  for (std::uint32_t i = 0; i < coords; ++i) {
    for (std::size_t j = 0; j < summands.size(); ++j) {
      images[i][j] = rng.below(summands[j].order());
    }
  }
  return kernel_side_subgroup(param, coords, images);
}

TruncSubgroup sample_annihilator_side(const CrsParam& param, std::uint32_t coords,
                                      SplitMix64& rng) {
  require_samplable(param);
  if (coords == 0) throw domain_error("coords must be >= 1");
  const std::uint64_t n = param.ambient_n;
  ZRowList images;
  for (const auto& s : param.group.summands()) {
    const std::uint64_t q = s.order();
    ZRow v(coords, 0);
    for (std::uint32_t i = 0; i < coords; ++i) {
      v[i] = ((n / q) * rng.below(q)) % n;
    }
    images.push_back(std::move(v));
  }
  return annihilator_side_subgroup(param, coords, images);
}

SubgroupDistribution exact_distribution(const CrsParam& param, Side side, std::uint32_t coords,
                                        std::uint64_t cap) {
  require_samplable(param);
  if (coords == 0) throw domain_error("coords must be >= 1");
  const std::uint64_t n = param.ambient_n;
  const auto& summands = param.group.summands();

  const BigInt total = big_pow(param.group.order(), coords);
  if (total > cap) {
    throw resource_limit_error("exact_distribution: " + total.str() +
                               " homomorphisms exceeds the enumeration cap of " +
                               std::to_string(cap));
  }

  std::map<TruncSubgroup, BigInt> counts;
  if (side == Side::kernel) {
    // Odometer over images[i][j] in [0, q_j).
    std::vector<std::vector<std::uint64_t>> images(coords,
                                                   std::vector<std::uint64_t>(summands.size(), 0));
    for (;;) {
      counts[kernel_side_subgroup(param, coords, images)] += 1;
      bool carry = true;
      for (std::uint32_t i = 0; i < coords && carry; ++i) {
        for (std::size_t j = 0; j < summands.size() && carry; ++j) {
          if (++images[i][j] < summands[j].order()) {
            carry = false;
          } else {
            images[i][j] = 0;
          }
        }
      }
      if (carry) break;
    }
  } else {
    // Odometer over the per-summand torsion coefficients b[j][i] in [0, q_j).
    std::vector<std::vector<std::uint64_t>> b(summands.size(),
                                              std::vector<std::uint64_t>(coords, 0));
    for (;;) {
      ZRowList images;
      for (std::size_t j = 0; j < summands.size(); ++j) {
        const std::uint64_t q = summands[j].order();
        ZRow v(coords, 0);
        for (std::uint32_t i = 0; i < coords; ++i) v[i] = ((n / q) * b[j][i]) % n;
        images.push_back(std::move(v));
      }
      counts[annihilator_side_subgroup(param, coords, images)] += 1;
      bool carry = true;
      for (std::size_t j = 0; j < summands.size() && carry; ++j) {
        for (std::uint32_t i = 0; i < coords && carry; ++i) {
          if (++b[j][i] < summands[j].order()) {
            carry = false;
          } else {
            b[j][i] = 0;
          }
        }
      }
      if (carry) break;
    }
  }

  SubgroupDistribution::Table table;
  for (auto& [subgroup, count] : counts) {
    table.emplace(subgroup, Rational(count, total));
  }
  return SubgroupDistribution(n, coords, std::move(table));
}

SubgroupDistribution pushforward_ann(const SubgroupDistribution& dist) {
  SubgroupDistribution::Table table;
  for (const auto& [subgroup, prob] : dist.entries()) {
    table[ann_sub(subgroup)] += prob;
  }
  return SubgroupDistribution(dist.modulus(), dist.rank(), std::move(table));
}

SubgroupDistribution apply_automorphism(const SubgroupDistribution& dist, const ZRowList& u) {
  if (!invertible_mod(u, dist.modulus())) {
    throw domain_error("apply_automorphism: matrix is not invertible mod " +
                       std::to_string(dist.modulus()));
  }
  SubgroupDistribution::Table table;
  for (const auto& [subgroup, prob] : dist.entries()) {
    table[apply_matrix(subgroup, u)] += prob;
  }
  return SubgroupDistribution(dist.modulus(), dist.rank(), std::move(table));
}

std::vector<Rational> intersection_dim_exact(const qlinalg::FieldPtr& field, std::uint32_t kappa,
                                             std::uint32_t n, std::uint64_t cap) {
  std::vector<BigInt> counts(n + 1, 0);
  qlinalg::enumerate_matrices(
      field, kappa, n,
      [&](const qlinalg::FqMatrix& m) { counts[n - qlinalg::matrix_rank(m)] += 1; }, cap);
  const BigInt total = big_pow(BigInt(field->order()), std::uint64_t(kappa) * n);
  std::vector<Rational> out;
  out.reserve(counts.size());
  for (const auto& c : counts) out.emplace_back(c, total);
  return out;
}

std::vector<std::uint64_t> intersection_dim_monte_carlo(const qlinalg::FieldPtr& field,
                                                        std::uint32_t kappa, std::uint32_t n,
                                                        std::uint64_t samples, SplitMix64& rng) {
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto m = qlinalg::sample_uniform_matrix(field, kappa, n, rng);
    counts[n - qlinalg::matrix_rank(m)] += 1;
  }
  return counts;
}

void SequenceDescriptor::validate() const {
  for (std::uint64_t b : growing_blocks) {
    if (!finab::as_prime_power(b, nullptr, nullptr)) {
      throw domain_error("SequenceDescriptor: growing block " + std::to_string(b) +
                         " is not a prime power");
    }
  }
}

CrsParam classify_limit(const SequenceDescriptor& seq) {
  seq.validate();
  if (seq.n_trend == SequenceDescriptor::Trend::diverges ||
      seq.maxorder_trend == SequenceDescriptor::Trend::diverges) {
    return CrsParam{0, 0, FinAbGroup{}};
  }
  // lcm over Z with lcm(0, x) = 0; at n = 0 everything collapses to (0, 0).
  std::uint64_t m = seq.n;
  if (m != 0) {
    for (std::uint64_t b : seq.growing_blocks) m = finab::lcm_u64_checked(m, b);
  }
  // Canonical representative: summands killed by m add nothing to the law.
  std::vector<finab::PrimePower> kept;
  for (const auto& s : seq.stable_part.summands()) {
    const bool killed = (m == 0) || (m % s.order() == 0);
    if (!killed) kept.push_back(s);
  }
  return CrsParam{0, m, FinAbGroup::from_prime_powers(std::move(kept))};
}

Rational tv_distance(const SubgroupDistribution& d1, const SubgroupDistribution& d2) {
  if (d1.modulus() != d2.modulus() || d1.rank() != d2.rank()) {
    throw domain_error("tv_distance: modulus/rank mismatch");
  }
  Rational total = 0;
  for (const auto& [subgroup, prob] : d1.entries()) {
    const Rational diff = prob - d2.probability_of(subgroup);
    total += diff < 0 ? -diff : diff;
  }
  for (const auto& [subgroup, prob] : d2.entries()) {
    if (d1.probability_of(subgroup) == 0) total += prob;
  }
  return total / 2;
}

}  // namespace crslab::crs
