#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "crslab/errors.hpp"
#include "crslab/freeword.hpp"
#include "crslab/permgroup.hpp"
#include "crslab/qformulas.hpp"
#include "crslab/rng.hpp"
#include "crslab/schreier.hpp"

using namespace crslab;
using namespace crslab::freegrp;

namespace {

FreeWord W(std::uint32_t rank, const std::string& text) { return FreeWord::parse(rank, text); }

FreeWord random_word(std::uint32_t rank, SplitMix64& rng) {
  std::vector<Syllable> syllables;
  const std::size_t count = rng.below(6);
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t exp = static_cast<std::int64_t>(rng.below(7)) - 3;
    syllables.push_back(Syllable{static_cast<std::uint32_t>(1 + rng.below(rank)), exp});
  }
  return FreeWord::reduce(rank, std::move(syllables));
}

std::vector<Permutation> s3_generators() {
  return {Permutation::parse_cycles("(1 2)"), Permutation::parse_cycles("(1 2 3)", 3)};
}

}  // namespace

TEST_CASE("word reduction and arithmetic") {
  const FreeWord x1 = FreeWord::generator(2, 1);
  CHECK(multiply(x1, invert(x1)).empty());
  CHECK(FreeWord::reduce(2, {{1, 2}, {1, -1}}) == x1);
  const FreeWord c = commutator(x1, FreeWord::generator(2, 2));
  CHECK(c.length() == 4);
  CHECK(c.to_string() == "x1 x2 x1^-1 x2^-1");
  CHECK_THROWS_AS(multiply(x1, FreeWord::generator(3, 3)), domain_error);
  CHECK_THROWS_AS(FreeWord::reduce(2, {{3, 1}}), domain_error);
}

TEST_CASE("word parse/print round-trip") {
  for (const char* text : {"x1^2 x2^-3 x1", "1", "x2", "x1^-1 x2^-1 x1 x2"}) {
    const FreeWord w = W(2, text);
    CHECK(FreeWord::parse(2, w.to_string()) == w);
  }
  CHECK(W(2, "x1 x1^-1").empty());
  CHECK(W(2, "x1^2 x2^-3 x1").to_string() == "x1^2 x2^-3 x1");
  CHECK_THROWS_AS(W(2, "y3"), domain_error);
}

TEST_CASE("reduction properties on random words") {
  SplitMix64 rng(31337);
  for (int i = 0; i < 10000; ++i) {
    const FreeWord u = random_word(3, rng);
    const FreeWord v = random_word(3, rng);
    CHECK(multiply(u, invert(u)).empty());
    CHECK(invert(invert(u)) == u);
    CHECK(multiply(u, v).length() <= u.length() + v.length());
    // associativity
    const FreeWord w = random_word(3, rng);
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
  }
}

TEST_CASE("adyan words") {
  const FreeWord a12 = adyan_word(1, 2);
  CHECK(a12.to_string() == "x1^2 x2^2 x1^-2 x2^-2");
  CHECK(a12.length() == 8);
  CHECK(adyan_word(3, 2).length() == 72);
  for (std::uint32_t n = 1; n <= 10; ++n) {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
      const FreeWord w = adyan_word(n, p);
      CHECK(w.length() == 4ull * n * n * p);
      // reduced by construction: adjacent syllables use distinct generators
      for (std::size_t i = 1; i < w.syllables().size(); ++i) {
        CHECK(w.syllables()[i].gen != w.syllables()[i - 1].gen);
      }
    }
  }
  CHECK(adyan_word(2, 3) != adyan_word(2, 5));
  CHECK_THROWS_AS(adyan_word(2, 4), domain_error);
  CHECK_THROWS_AS(adyan_word(0, 2), domain_error);
}

TEST_CASE("permutation parsing and printing") {
  const Permutation p = Permutation::parse_cycles("(1 2 3)(4 5)");
  CHECK(p.degree() == 5);
  CHECK(p.apply(0) == 1);
  CHECK(p.apply(3) == 4);
  CHECK(p.to_cycle_string() == "(1 2 3)(4 5)");
  CHECK(Permutation::parse_cycles(p.to_cycle_string()) == p);
  CHECK(Permutation(4).to_cycle_string() == "()");
  CHECK(Permutation::parse_cycles("()").is_identity());
  CHECK_THROWS_AS(Permutation::parse_cycles("(1 2)(2 3)"), domain_error);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.power(3).apply(0) == 0);  // the 3-cycle part closes
}

TEST_CASE("word map evaluation") {
  const auto gens = s3_generators();
  const Permutation threecycle = Permutation::parse_cycles("(1 2 3)");
  std::vector<Permutation> tuple{threecycle};
  CHECK(word_map_eval(W(1, "x1^2"), tuple) == Permutation::parse_cycles("(1 3 2)"));
  CHECK(word_map_eval(W(1, "1"), tuple).is_identity());
  const Permutation a = Permutation::parse_cycles("(1 2 3)");
  const Permutation b = Permutation::parse_cycles("(1 3 2)");
  std::vector<Permutation> commuting{a, b};
  CHECK(word_map_eval(W(2, "x1 x2 x1^-1 x2^-1"), commuting).is_identity());
  CHECK_THROWS_AS(word_map_eval(W(2, "x2"), tuple), domain_error);
}

TEST_CASE("verbal subgroups of S3") {
  const FinGroup s3 = FinGroup::generated_by(s3_generators());
  REQUIRE(s3.order() == 6);
  const FinGroup squares = verbal_subgroup(s3, {W(1, "x1^2")});
  CHECK(squares.order() == 3);
  const FinGroup commutators = verbal_subgroup(s3, {W(2, "x1 x2 x1^-1 x2^-1")});
  CHECK(commutators.order() == 3);
  // Abelian groups kill commutators.
  const FinGroup z6 = FinGroup::generated_by({Permutation::parse_cycles("(1 2 3 4 5 6)")});
  CHECK(verbal_subgroup(z6, {W(2, "x1 x2 x1^-1 x2^-1")}).order() == 1);
}

TEST_CASE("verbal subgroups are fully invariant under relabelings") {
  // Every point relabeling that normalizes G induces an automorphism of G;
  // the verbal subgroup must be setwise fixed by all of them. Checked
  // exhaustively over the symmetric group of the degree.
  struct Case {
    std::vector<Permutation> gens;
    std::string word;
  };
  const std::vector<Case> cases{
      {s3_generators(), "x1^2"},
      {s3_generators(), "x1 x2 x1^-1 x2^-1"},
      {{Permutation::parse_cycles("(1 2 3 4)")}, "x1^2"},
      {{Permutation::parse_cycles("(1 2 3 4)"), Permutation::parse_cycles("(1 3)")}, "x1^2"},
  };
  for (const auto& c : cases) {
    const FinGroup g = FinGroup::generated_by(c.gens);
    REQUIRE(g.order() <= 24);
    const std::uint32_t rank = c.word.find("x2") == std::string::npos ? 1 : 2;
    const FinGroup v = verbal_subgroup(g, {W(rank, c.word)});
    std::set<Permutation> v_set(v.elements().begin(), v.elements().end());

    // Walk all of Sym(degree) via the full symmetric group closure.
    std::vector<Permutation> sym_gens{Permutation::parse_cycles("(1 2)", g.degree())};
    {
      std::vector<std::uint32_t> cycle(g.degree());
      for (std::uint32_t i = 0; i < g.degree(); ++i) cycle[i] = (i + 1) % g.degree();
      sym_gens.emplace_back(std::move(cycle));
    }
    const FinGroup sym = FinGroup::generated_by(sym_gens, 1000000);
    for (const auto& sigma : sym.elements()) {
      const Permutation inv = sigma.inverse();
      bool normalizes = true;
      for (const auto& gen : g.generators()) {
        if (!g.contains(inv * gen * sigma)) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      for (const auto& x : v.elements()) {
        CHECK(v_set.count(inv * x * sigma) == 1);
      }
    }
  }
}

TEST_CASE("group closure caps") {
  CHECK_THROWS_AS(FinGroup::generated_by({Permutation::parse_cycles("(1 2 3 4 5 6 7)")}, 5),
                  resource_limit_error);
  CHECK_THROWS_AS(FinGroup::generated_by({Permutation(13)}), domain_error);
  const FinGroup s3 = FinGroup::generated_by(s3_generators());
  CHECK_THROWS_AS(verbal_subgroup(s3, {W(2, "x1 x2 x1^-1 x2^-1")}, 10), resource_limit_error);
}

TEST_CASE("schreier graph shapes") {
  // All generators trivial: a single coset.
  const SchreierGraph trivial =
      SchreierGraph::build(2, {Permutation(1), Permutation(1)});
  CHECK(trivial.index() == 1);
  CHECK(schreier_basis(trivial).size() == 2);  // the generators themselves

  const Permutation c3 = Permutation::parse_cycles("(1 2 3)");
  const SchreierGraph z3 = SchreierGraph::build(2, {c3, c3});
  CHECK(z3.index() == 3);
  CHECK(schreier_basis(z3).size() == 4);

  const SchreierGraph s3 =
      SchreierGraph::build(2, {Permutation::parse_cycles("(1 2)", 3), c3});
  CHECK(s3.index() == 6);
  CHECK(schreier_basis(s3).size() == 7);

  CHECK_THROWS_AS(SchreierGraph::build(
                      2, {Permutation::parse_cycles("(1 2)", 4),
                          Permutation::parse_cycles("(3 4)")}),
                  domain_error);  // intransitive
}

TEST_CASE("index-1 basis is the generating set") {
  const SchreierGraph g = SchreierGraph::build(3, {Permutation(1), Permutation(1), Permutation(1)});
  const auto basis = schreier_basis(g);
  REQUIRE(basis.size() == 3);
  for (std::uint32_t i = 0; i < 3; ++i) {
    CHECK(basis[i] == FreeWord::generator(3, i + 1));
  }
}

TEST_CASE("basis words lie in the kernel and rewrite to unit vectors") {
  SplitMix64 rng(777);
  int built = 0;
  while (built < 20) {
    const std::uint32_t rank = 2 + rng.below(2);
    const std::uint32_t degree = 3 + rng.below(2);
    std::vector<Permutation> images;
    for (std::uint32_t i = 0; i < rank; ++i) {
      // random permutation by sorting a random sequence
      std::vector<std::uint32_t> img(degree);
      for (std::uint32_t j = 0; j < degree; ++j) img[j] = j;
      for (std::uint32_t j = degree; j > 1; --j) {
        std::swap(img[j - 1], img[rng.below(j)]);
      }
      images.emplace_back(std::move(img));
    }
    SchreierGraph graph(SchreierGraph::build(1, {Permutation(1)}));
    try {
      graph = SchreierGraph::build(rank, images);
    } catch (const domain_error&) {
      continue;  // intransitive draw
    }
    if (graph.index() > 24) continue;
    ++built;

    const auto basis = schreier_basis(graph);
    CHECK(basis.size() == 1 + std::size_t(graph.index()) * (rank - 1));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      CHECK(word_map_eval(basis[b], images).is_identity());
      const auto coords = rewrite_in_basis(graph, basis[b]);
      for (std::size_t j = 0; j < coords.size(); ++j) {
        CHECK(coords[j] == (j == b ? 1 : 0));
      }
    }
  }
}

TEST_CASE("rewrite is additive on the abelianization") {
  const Permutation c3 = Permutation::parse_cycles("(1 2 3)");
  const SchreierGraph graph = SchreierGraph::build(2, {c3, c3});
  const auto basis = schreier_basis(graph);
  REQUIRE(basis.size() == 4);
  const auto v01 = rewrite_in_basis(graph, multiply(basis[0], basis[1]));
  CHECK(v01 == std::vector<std::int64_t>{1, 1, 0, 0});
  // x1^3 is in the kernel of x1 -> (1 2 3).
  const auto cube = rewrite_in_basis(graph, W(2, "x1^3"));
  std::int64_t total = 0;
  for (auto c : cube) total += c;
  CHECK(total != 0);
  CHECK_THROWS_AS(rewrite_in_basis(graph, W(2, "x1")), domain_error);
}

TEST_CASE("index-p functional sampling") {
  SplitMix64 rng(2024);
  std::map<std::vector<std::uint64_t>, std::uint64_t> counts;
  const std::uint64_t samples = 30000;
  for (std::uint64_t i = 0; i < samples; ++i) {
    counts[sample_index_p_subgroup(2, 2, rng)] += 1;
  }
  REQUIRE(counts.size() == 3);  // the three nonzero functionals on (Z/2)^2
  for (const auto& [functional, count] : counts) {
    CHECK(std::abs(static_cast<double>(count) - samples / 3.0) <=
          4 * std::sqrt(samples * (1.0 / 3) * (2.0 / 3)));
  }
  // s = 1, p = 2: only one nonzero functional.
  CHECK(sample_index_p_subgroup(1, 2, rng) == std::vector<std::uint64_t>{1});
  CHECK_THROWS_AS(sample_index_p_subgroup(2, 4, rng), domain_error);

  // Cross-check: the number of index-p subgroups of (Z/p)^s.
  CHECK(qlinalg::gaussian_binomial(2, 1, 2) == 3);
  CHECK(qlinalg::gaussian_binomial(3, 2, 3) == (27 - 1) / (3 - 1));
}
