#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "crslab/crs.hpp"
#include "crslab/errors.hpp"
#include "crslab/json_io.hpp"
#include "crslab/qformulas.hpp"

using namespace crslab;
using namespace crslab::crs;
using finab::FinAbGroup;

namespace {

FinAbGroup G(std::initializer_list<std::uint64_t> orders) {
  return FinAbGroup::from_orders(std::vector<std::uint64_t>(orders));
}

CrsParam P(std::uint64_t n, std::uint64_t m, std::initializer_list<std::uint64_t> orders) {
  return CrsParam::checked(n, m, G(orders));
}

}  // namespace

TEST_CASE("parameter validation names the violated constraint") {
  CHECK_NOTHROW(P(2, 1, {2, 2}));
  CHECK_THROWS_WITH_AS(P(4, 3, {}), "m must divide n", domain_error);
  CHECK_THROWS_WITH_AS(P(2, 1, {3}), "nF must vanish", domain_error);
  CHECK_THROWS_WITH_AS(P(4, 2, {2}), "F must be over m", domain_error);
  CHECK_THROWS_WITH_AS(P(2, 0, {}), "m must divide n", domain_error);  // 0 does not divide 2
  CHECK_NOTHROW(CrsParam::checked(0, 0, FinAbGroup{}));
  CHECK_THROWS_WITH_AS(CrsParam::checked(0, 0, G({2})), "F must be over m", domain_error);
}

TEST_CASE("parameter enumeration") {
  const auto params_n2 = enumerate_params(2, 4);
  REQUIRE(params_n2.size() == 4);
  CHECK(params_n2[0] == P(2, 1, {}));
  CHECK(params_n2[1] == P(2, 1, {2}));
  CHECK(params_n2[2] == P(2, 1, {2, 2}));
  CHECK(params_n2[3] == P(2, 2, {}));

  const auto params_n1 = enumerate_params(1, 64);
  REQUIRE(params_n1.size() == 1);
  CHECK(params_n1[0] == P(1, 1, {}));

  const auto params_n4 = enumerate_params(4, 4);
  const CrsParam want = P(4, 2, {4});
  CHECK(std::count(params_n4.begin(), params_n4.end(), want) == 1);
  for (const auto& p : params_n4) {
    CHECK(p.m != 0);
    CHECK(!(p.m == 2 && p.group == G({2})));  // Z/2 is not over 2
  }

  // Exhaustive cross-check of the filter for several ambients.
  for (std::uint64_t n : {2ull, 4ull, 6ull, 12ull}) {
    const auto params = enumerate_params(n, 8);
    std::set<CrsParam> seen(params.begin(), params.end());
    CHECK(seen.size() == params.size());
    std::size_t expected = 0;
    for (std::uint64_t m = 0; m <= n; ++m) {
      if (m == 0 || n % m != 0) continue;
      for (const auto& f : finab::groups_up_to(8)) {
        if (n % f.exponent() == 0 && finab::is_over(f, m)) {
          ++expected;
          CHECK(seen.count(CrsParam{n, m, f}) == 1);
        }
      }
    }
    CHECK(params.size() == expected);
  }

  // Ambient 0: infinite family truncated at m <= max_order.
  const auto params_n0 = enumerate_params(0, 3);
  CHECK(std::count(params_n0.begin(), params_n0.end(), CrsParam{0, 0, FinAbGroup{}}) == 1);
  CHECK(std::count(params_n0.begin(), params_n0.end(), CrsParam{0, 2, G({3})}) == 1);
  for (const auto& p : params_n0) CHECK(finab::is_over(p.group, p.m));
}

TEST_CASE("characteristic subgroup markers") {
  const auto four = char_subgroups(4);
  REQUIRE(four.size() == 4);
  CHECK(four[0].is_zero);
  CHECK(four[1].r == 1);
  CHECK(four[2].r == 2);
  CHECK(four[3].r == 4);
  CHECK(char_subgroups(1).size() == 2);
  CHECK(char_subgroups(7).size() == 3);  // {0}, 1, 7
  const auto untwisted = char_subgroups(0, 5);
  REQUIRE(untwisted.size() == 6);
  CHECK(untwisted[0].r == 0);
  CHECK(untwisted[5].r == 5);
}

TEST_CASE("kernel-side exact law of (1, Z/2) over ambient 2") {
  const auto dist = exact_distribution(P(2, 1, {2}), Side::kernel, 3);
  REQUIRE(dist.entries().size() == 8);
  int full_seen = 0;
  for (const auto& [subgroup, prob] : dist.entries()) {
    CHECK(prob == Rational(1, 8));
    if (subgroup.is_full()) ++full_seen;
    else CHECK(subgroup.order() == 4);  // the seven index-2 subgroups
  }
  CHECK(full_seen == 1);
}

TEST_CASE("annihilator-side exact law of (1, Z/2) over ambient 2") {
  const auto dist = exact_distribution(P(2, 1, {2}), Side::annihilator, 2);
  REQUIRE(dist.entries().size() == 4);
  int zero_seen = 0;
  for (const auto& [subgroup, prob] : dist.entries()) {
    CHECK(prob == Rational(1, 4));
    if (subgroup.is_zero()) ++zero_seen;
    else CHECK(subgroup.order() == 2);  // the three order-2 subgroups
  }
  CHECK(zero_seen == 1);
}

TEST_CASE("point-mass cases") {
  // Trivial target group: kernel is everything.
  const auto full = exact_distribution(P(1, 1, {}), Side::kernel, 3);
  REQUIRE(full.entries().size() == 1);
  CHECK(full.entries().begin()->first.is_full());

  // m = n kills the multiple subgroup.
  const auto zero = exact_distribution(P(4, 4, {}), Side::kernel, 2);
  REQUIRE(zero.entries().size() == 1);
  CHECK(zero.entries().begin()->first.is_zero());

  // Annihilator side with trivial F: Ann(n*.) is the full group.
  const auto ann_full = exact_distribution(P(3, 3, {}), Side::annihilator, 2);
  REQUIRE(ann_full.entries().size() == 1);
  CHECK(ann_full.entries().begin()->first.is_full());

  // (1, 0): annihilator of everything is zero.
  const auto ann_zero = exact_distribution(P(3, 1, {}), Side::annihilator, 2);
  REQUIRE(ann_zero.entries().size() == 1);
  CHECK(ann_zero.entries().begin()->first.is_zero());
}

TEST_CASE("samplers are deterministic and agree with the exact law") {
  const CrsParam param = P(4, 2, {4});
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 10; ++i) {
    CHECK(sample_kernel_side(param, 2, a) == sample_kernel_side(param, 2, b));
  }
  SplitMix64 c(42), d(42);
  for (int i = 0; i < 10; ++i) {
    CHECK(sample_annihilator_side(param, 2, c) == sample_annihilator_side(param, 2, d));
  }

  // Frequencies over many draws stay within 4 sigma of the exact law.
  for (Side side : {Side::kernel, Side::annihilator}) {
    const auto dist = exact_distribution(param, side, 2);
    std::map<TruncSubgroup, std::uint64_t> counts;
    SplitMix64 rng(2718281828ull);
    const std::uint64_t samples = 20000;
    for (std::uint64_t i = 0; i < samples; ++i) {
      const TruncSubgroup s = side == Side::kernel ? sample_kernel_side(param, 2, rng)
                                                   : sample_annihilator_side(param, 2, rng);
      counts[s] += 1;
    }
    std::uint64_t total = 0;
    for (const auto& [subgroup, prob] : dist.entries()) {
      const double p = prob.convert_to<double>();
      const double sigma = std::sqrt(p * (1 - p) * samples);
      CHECK(std::abs(counts[subgroup] - p * samples) <= 4 * sigma);
      total += counts[subgroup];
    }
    CHECK(total == samples);  // nothing outside the support
  }
}

TEST_CASE("ambient 0 is not samplable") {
  SplitMix64 rng(1);
  const CrsParam p{0, 2, G({3})};
  CHECK_THROWS_AS(sample_kernel_side(p, 2, rng), domain_error);
  CHECK_THROWS_AS(sample_annihilator_side(p, 2, rng), domain_error);
  CHECK_THROWS_AS(exact_distribution(p, Side::kernel, 2), domain_error);
}

TEST_CASE("annihilator pushforward bridges the two sides") {
  for (std::uint64_t n : {2ull, 4ull}) {
    for (const auto& param : enumerate_params(n, 4)) {
      for (std::uint32_t coords = 1; coords <= 3; ++coords) {
        const auto kernel_law = exact_distribution(param, Side::kernel, coords);
        const auto ann_law = exact_distribution(param, Side::annihilator, coords);
        CHECK(pushforward_ann(kernel_law) == ann_law);
        CHECK(pushforward_ann(ann_law) == kernel_law);  // involution
      }
    }
  }
  // Composite modulus with a multi-prime group.
  for (const auto& param : enumerate_params(6, 6)) {
    for (std::uint32_t coords = 1; coords <= 2; ++coords) {
      CHECK(pushforward_ann(exact_distribution(param, Side::kernel, coords)) ==
            exact_distribution(param, Side::annihilator, coords));
    }
  }
}

TEST_CASE("exact laws are fixed by coordinate automorphisms") {
  std::vector<CrsParam> params = enumerate_params(2, 4);
  params.push_back(P(4, 2, {4}));
  params.push_back(P(6, 1, {2, 3}));
  for (const auto& param : params) {
    const std::uint64_t n = param.ambient_n;
    for (Side side : {Side::kernel, Side::annihilator}) {
      const auto dist = exact_distribution(param, side, 3);
      const ZRowList swap01{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
      const ZRowList cycle{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
      const ZRowList transvection{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
      CHECK(apply_automorphism(dist, swap01) == dist);
      CHECK(apply_automorphism(dist, cycle) == dist);
      CHECK(apply_automorphism(dist, transvection) == dist);
      for (std::uint64_t u = 2; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        const ZRowList scaling{{u, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        CHECK(apply_automorphism(dist, scaling) == dist);
      }
    }
  }
}

namespace {

// Independent law oracle: every homomorphism enumerated, every subgroup
// materialized as an element set by direct arithmetic in (Z/n)^c and F.
// No canonical forms or kernel solvers involved.
std::map<std::set<ZRow>, std::uint64_t> brute_force_law(const CrsParam& param, Side side,
                                                        std::uint32_t coords) {
  const std::uint64_t n = param.ambient_n;
  const auto& summands = param.group.summands();
  const std::size_t s = summands.size();

  std::vector<ZRow> ambient;
  {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < coords; ++i) total *= n;
    for (std::uint64_t code = 0; code < total; ++code) {
      ZRow x(coords);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < coords; ++i) {
        x[i] = c % n;
        c /= n;
      }
      ambient.push_back(std::move(x));
    }
  }
  auto closure = [&](std::vector<ZRow> gens) {
    std::set<ZRow> out{ZRow(coords, 0)};
    bool grew = true;
    while (grew) {
      grew = false;
      std::set<ZRow> next = out;
      for (const auto& e : out) {
        for (const auto& g : gens) {
          ZRow sum(coords);
          for (std::uint32_t i = 0; i < coords; ++i) sum[i] = (e[i] + g[i]) % n;
          if (next.insert(std::move(sum)).second) grew = true;
        }
      }
      out = std::move(next);
    }
    return out;
  };

  std::map<std::set<ZRow>, std::uint64_t> law;
  // Odometer over hom choices: s digits of size q_j per coordinate (kernel)
  // or per summand (annihilator) -- both are s*coords digits in [0, q_j).
  std::vector<std::vector<std::uint64_t>> digits(coords, std::vector<std::uint64_t>(s, 0));
  for (;;) {
    if (side == Side::kernel) {
      // h(x) = sum_i x_i * a_i in F; subgroup = m-multiples meeting Ker h.
      std::set<ZRow> elements;
      for (const auto& x : ambient) {
        bool in_multiple = true;
        for (std::uint32_t i = 0; i < coords; ++i) in_multiple &= (x[i] % param.m == 0);
        if (!in_multiple) continue;
        bool in_kernel = true;
        for (std::size_t j = 0; j < s; ++j) {
          std::uint64_t acc = 0;
          const std::uint64_t q = summands[j].order();
          for (std::uint32_t i = 0; i < coords; ++i) acc = (acc + x[i] * digits[i][j]) % q;
          in_kernel &= (acc == 0);
        }
        if (in_kernel) elements.insert(x);
      }
      law[elements] += 1;
    } else {
      // Generators: d*e_i plus one torsion image per summand.
      std::vector<ZRow> gens;
      const std::uint64_t d = n / std::gcd(param.m, n);
      for (std::uint32_t i = 0; i < coords; ++i) {
        ZRow e(coords, 0);
        e[i] = d % n;
        gens.push_back(std::move(e));
      }
      for (std::size_t j = 0; j < s; ++j) {
        const std::uint64_t q = summands[j].order();
        ZRow img(coords);
        for (std::uint32_t i = 0; i < coords; ++i) img[i] = ((n / q) * digits[i][j]) % n;
        gens.push_back(std::move(img));
      }
      law[closure(std::move(gens))] += 1;
    }

    bool carry = true;
    for (std::uint32_t i = 0; i < coords && carry; ++i) {
      for (std::size_t j = 0; j < s && carry; ++j) {
        if (++digits[i][j] < summands[j].order()) {
          carry = false;
        } else {
          digits[i][j] = 0;
        }
      }
    }
    if (carry) break;
  }
  return law;
}

std::set<ZRow> subgroup_element_set(const TruncSubgroup& sub) {
  std::set<ZRow> out{ZRow(sub.rank(), 0)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<ZRow> next = out;
    for (const auto& e : out) {
      for (const auto& g : sub.gens()) {
        ZRow sum(sub.rank());
        for (std::uint32_t i = 0; i < sub.rank(); ++i) {
          sum[i] = (e[i] + g[i]) % sub.modulus();
        }
        if (next.insert(std::move(sum)).second) grew = true;
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("exact laws match the element-set brute force oracle") {
  const std::vector<CrsParam> params{
      P(4, 2, {4}), P(4, 1, {2}), P(4, 1, {4}), P(6, 1, {2, 3}),
      P(6, 2, {3}), P(6, 3, {2}), P(2, 2, {}),
  };
  for (const auto& param : params) {
    for (Side side : {Side::kernel, Side::annihilator}) {
      const auto dist = exact_distribution(param, side, 2);
      const auto oracle = brute_force_law(param, side, 2);
      const BigInt total = big_pow(param.group.order(), 2);

      REQUIRE(dist.entries().size() == oracle.size());
      for (const auto& [subgroup, prob] : dist.entries()) {
        const auto elements = subgroup_element_set(subgroup);
        const auto it = oracle.find(elements);
        REQUIRE(it != oracle.end());
        CHECK(prob == Rational(it->second, total));
      }
    }
  }
}

TEST_CASE("enumeration caps raise resource errors") {
  CHECK_THROWS_AS(exact_distribution(P(2, 1, {2, 2, 2, 2}), Side::kernel, 3, 100),
                  resource_limit_error);
  CHECK_THROWS_AS(intersection_dim_exact(qlinalg::FieldSpec::make(2), 6, 6, 1 << 10),
                  resource_limit_error);
}

TEST_CASE("kernel-side full-group mass matches the rank marginal") {
  // P(subgroup = everything) for (1, Z/2) over F_2 at coords n is vtilde(n, n).
  for (std::uint32_t coords = 1; coords <= 4; ++coords) {
    const auto dist = exact_distribution(P(2, 1, {2}), Side::kernel, coords);
    CHECK(dist.probability_of(TruncSubgroup::full(2, coords)) ==
          qlinalg::vtilde(coords, coords, 1, 2));
  }
}

TEST_CASE("subgroup-order marginal reproduces the rank distribution") {
  // For (1, (Z/2)^kappa) over ambient 2, the law of |subgroup| = 2^k matches
  // vtilde_{n,k} for kappa constraints on n coordinates.
  const std::uint32_t kappa = 2, coords = 3;
  const auto dist = exact_distribution(P(2, 1, {2, 2}), Side::kernel, coords);
  std::vector<Rational> by_dim(coords + 1, Rational(0));
  for (const auto& [subgroup, prob] : dist.entries()) {
    const BigInt order = subgroup.order();
    std::uint32_t dim = 0;
    while (big_pow(BigInt(2), dim) < order) ++dim;
    by_dim[dim] += prob;
  }
  for (std::uint32_t k = 0; k <= coords; ++k) {
    CHECK(by_dim[k] == qlinalg::vtilde(coords, k, kappa, 2));
  }
}

TEST_CASE("intersection dimension distribution equals the closed form") {
  for (std::uint64_t q : {2ull, 3ull}) {
    auto field = qlinalg::FieldSpec::make(q);
    for (std::uint32_t kappa = 1; kappa <= 3; ++kappa) {
      for (std::uint32_t n = 1; n <= 3; ++n) {
        const auto exact = intersection_dim_exact(field, kappa, n);
        for (std::uint32_t k = 0; k <= n; ++k) {
          CHECK(exact[k] == qlinalg::vtilde(n, k, kappa, q));
        }
      }
    }
  }
}

TEST_CASE("monte carlo marginals stay within 4 sigma") {
  auto field = qlinalg::FieldSpec::make(2);
  SplitMix64 rng = SplitMix64::for_stream(1234, 0);
  const std::uint64_t samples = 100000;
  const auto counts = intersection_dim_monte_carlo(field, 3, 3, samples, rng);
  for (std::uint32_t k = 0; k <= 3; ++k) {
    const double p = qlinalg::vtilde(3, k, 3, 2).convert_to<double>();
    const double sigma = std::sqrt(p * (1 - p) * samples);
    CHECK(std::abs(counts[k] - p * samples) <= 4 * sigma);
  }
}

TEST_CASE("limit classification") {
  SequenceDescriptor diverging;
  diverging.n_trend = SequenceDescriptor::Trend::diverges;
  CHECK(classify_limit(diverging) == (CrsParam{0, 0, FinAbGroup{}}));

  SequenceDescriptor unbounded;
  unbounded.n_trend = SequenceDescriptor::Trend::constant;
  unbounded.n = 2;
  unbounded.maxorder_trend = SequenceDescriptor::Trend::diverges;
  CHECK(classify_limit(unbounded) == (CrsParam{0, 0, FinAbGroup{}}));

  SequenceDescriptor growing2;
  growing2.n = 2;
  growing2.growing_blocks = {2};
  CHECK(classify_limit(growing2) == (CrsParam{0, 2, FinAbGroup{}}));

  SequenceDescriptor stable3;
  stable3.n = 1;
  stable3.stable_part = G({3});
  stable3.growing_blocks = {2};
  CHECK(classify_limit(stable3) == (CrsParam{0, 2, G({3})}));

  // The canonical representative drops summands killed by the lcm.
  SequenceDescriptor absorbed;
  absorbed.n = 1;
  absorbed.stable_part = G({2});
  absorbed.growing_blocks = {4};
  CHECK(classify_limit(absorbed) == (CrsParam{0, 4, FinAbGroup{}}));

  SequenceDescriptor bad;
  bad.n = 2;
  bad.growing_blocks = {6};
  CHECK_THROWS_AS(classify_limit(bad), domain_error);
}

TEST_CASE("tv distance") {
  const auto dist = exact_distribution(P(2, 1, {2}), Side::kernel, 2);
  CHECK(tv_distance(dist, dist) == 0);

  SubgroupDistribution::Table full_mass;
  full_mass.emplace(TruncSubgroup::full(2, 2), Rational(1));
  const SubgroupDistribution point_full(2, 2, std::move(full_mass));
  CHECK(tv_distance(dist, point_full) == Rational(3, 4));

  SubgroupDistribution::Table zero_mass;
  zero_mass.emplace(TruncSubgroup::zero(2, 2), Rational(1));
  const SubgroupDistribution point_zero(2, 2, std::move(zero_mass));
  CHECK(tv_distance(point_full, point_zero) == 1);

  CHECK_THROWS_AS(tv_distance(dist, SubgroupDistribution(
                                        3, 2,
                                        {{TruncSubgroup::full(3, 2), Rational(1)}})),
                  domain_error);
}

TEST_CASE("tv distance to the classified limit decreases along the sequence") {
  // Laws of (1, (Z/2)^k) truncated at ambient 2, coords 2, against the
  // limit parameter (2, 0), whose truncated law is the point mass at the
  // full group.
  SequenceDescriptor seq;
  seq.n = 1;
  seq.growing_blocks = {2};
  const CrsParam limit = classify_limit(seq);
  CHECK(limit == (CrsParam{0, 2, FinAbGroup{}}));
  const auto target = exact_distribution(CrsParam::checked(2, limit.m, limit.group),
                                         Side::annihilator, 2);
  REQUIRE(target.entries().size() == 1);
  CHECK(target.entries().begin()->first.is_full());

  Rational prev = 2;
  for (std::uint32_t k = 1; k <= 6; ++k) {
    std::vector<std::uint64_t> orders(k, 2);
    const auto law = exact_distribution(
        CrsParam::checked(2, 1, FinAbGroup::from_orders(orders)), Side::annihilator, 2);
    const Rational tv = tv_distance(law, target);
    CHECK(tv < prev);
    prev = tv;
  }
}

TEST_CASE("distribution json round-trip") {
  const auto dist = exact_distribution(P(4, 2, {4}), Side::kernel, 2);
  const std::string text = distribution_to_json(dist);
  CHECK(distribution_from_json(text) == dist);
  CHECK_THROWS_AS(distribution_from_json("{"), domain_error);
  CHECK_THROWS_AS(distribution_from_json("{\"modulus\": 2}"), domain_error);
}

TEST_CASE("descriptor json") {
  const auto seq = descriptor_from_json(
      R"({"n_trend": "constant", "n": 1, "stable": [3], "growing": [2]})");
  CHECK(classify_limit(seq) == (CrsParam{0, 2, G({3})}));
  CHECK(classify_limit(descriptor_from_json(R"({"n_trend": "diverges"})")) ==
        (CrsParam{0, 0, FinAbGroup{}}));
  CHECK_THROWS_AS(descriptor_from_json(R"({"n_trend": "sideways"})"), domain_error);
  CHECK_THROWS_AS(descriptor_from_json(R"({"n_trend": "constant", "n": 2, "growing": [6]})"),
                  domain_error);
}
