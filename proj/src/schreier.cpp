#include "crslab/schreier.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "crslab/errors.hpp"
#include "crslab/numtheory.hpp"

namespace crslab::freegrp {

SchreierGraph SchreierGraph::build(std::uint32_t rank, const std::vector<Permutation>& images,
                                   std::uint64_t group_cap) {
  if (rank == 0 || images.size() != rank) {
    throw domain_error("SchreierGraph: need one image per generator, rank >= 1");
  }
  std::uint32_t degree = 1;
  for (const auto& p : images) degree = std::max(degree, p.degree());
  std::vector<Permutation> padded;
  padded.reserve(images.size());
  for (const auto& p : images) padded.push_back(p.padded_to(degree));

  // Transitivity of the permutation action on its points.
  {
    std::vector<bool> reached(degree, false);
    std::deque<std::uint32_t> queue{0};
    reached[0] = true;
    std::uint32_t count = 1;
    while (!queue.empty()) {
      const std::uint32_t x = queue.front();
      queue.pop_front();
      for (const auto& p : padded) {
        for (std::uint32_t y : {p.apply(x), p.inverse().apply(x)}) {
          if (!reached[y]) {
            reached[y] = true;
            ++count;
            queue.push_back(y);
          }
        }
      }
    }
    if (count != degree) {
      throw domain_error("SchreierGraph: the action is not transitive on its points");
    }
  }

  const FinGroup group = FinGroup::generated_by(padded, group_cap);
  const std::uint32_t index = static_cast<std::uint32_t>(group.order());

  // Index the cosets (= group elements) by BFS discovery from the identity,
  // so coset 0 is the identity coset and the tree below is breadth-first.
  std::map<Permutation, std::uint32_t> coset_id;
  std::vector<Permutation> coset_rep;
  SchreierGraph g;
  g.rank_ = rank;
  g.index_ = index;
  g.tree_.resize(index);

  const Permutation id(group.degree());
  coset_id.emplace(id, 0);
  coset_rep.push_back(id);
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t gen = 1; gen <= rank; ++gen) {
      for (bool positive : {true, false}) {
        const Permutation& image = padded[gen - 1];
        Permutation next = positive ? coset_rep[v] * image : coset_rep[v] * image.inverse();
        auto [it, inserted] = coset_id.emplace(next, static_cast<std::uint32_t>(coset_rep.size()));
        if (inserted) {
          coset_rep.push_back(std::move(next));
          g.tree_[it->second] = TreeEdge{v, gen, positive};
          queue.push_back(it->second);
        }
      }
    }
  }
  if (coset_rep.size() != index) throw internal_error("SchreierGraph: coset walk incomplete");

  g.fwd_.assign(rank, std::vector<std::uint32_t>(index));
  g.bwd_.assign(rank, std::vector<std::uint32_t>(index));
  for (std::uint32_t v = 0; v < index; ++v) {
    for (std::uint32_t gen = 1; gen <= rank; ++gen) {
      const std::uint32_t w = coset_id.at(coset_rep[v] * padded[gen - 1]);
      g.fwd_[gen - 1][v] = w;
      g.bwd_[gen - 1][w] = v;
    }
  }

  // Non-tree edges in positive orientation, ordered by (coset, generator).
  g.edge_index_.assign(std::size_t(index) * rank, -1);
  for (std::uint32_t v = 0; v < index; ++v) {
    for (std::uint32_t gen = 1; gen <= rank; ++gen) {
      const std::uint32_t w = g.fwd_[gen - 1][v];
      const bool tree_fwd = w != 0 && g.tree_[w].parent == v && g.tree_[w].gen == gen &&
                            g.tree_[w].positive;
      const bool tree_bwd = v != 0 && g.tree_[v].parent == w && g.tree_[v].gen == gen &&
                            !g.tree_[v].positive;
      if (tree_fwd || tree_bwd) continue;
      g.edge_index_[std::size_t(v) * rank + (gen - 1)] =
          static_cast<std::int32_t>(g.edges_.size());
      g.edges_.push_back(NonTreeEdge{v, gen});
    }
  }
  return g;
}

std::uint32_t SchreierGraph::step(std::uint32_t coset, std::uint32_t gen, bool positive) const {
  return positive ? fwd_[gen - 1][coset] : bwd_[gen - 1][coset];
}

std::int32_t SchreierGraph::edge_basis_index(std::uint32_t from, std::uint32_t gen) const {
  return edge_index_[std::size_t(from) * rank_ + (gen - 1)];
}

FreeWord SchreierGraph::path_word(std::uint32_t coset) const {
  std::vector<Syllable> reversed;
  std::uint32_t v = coset;
  while (v != 0) {
    const TreeEdge& e = tree_[v];
    reversed.push_back(Syllable{e.gen, e.positive ? 1 : -1});
    v = e.parent;
  }
  std::reverse(reversed.begin(), reversed.end());
  return FreeWord::reduce(rank_, reversed);
}

std::vector<FreeWord> schreier_basis(const SchreierGraph& graph) {
  std::vector<FreeWord> basis;
  basis.reserve(graph.non_tree_edges().size());
  for (const auto& e : graph.non_tree_edges()) {
    const std::uint32_t w = graph.step(e.from, e.gen, true);
    FreeWord word = multiply(
        multiply(graph.path_word(e.from), FreeWord::generator(graph.rank(), e.gen)),
        invert(graph.path_word(w)));
    basis.push_back(std::move(word));
  }
  return basis;
}

std::vector<std::int64_t> rewrite_in_basis(const SchreierGraph& graph, const FreeWord& w) {
  if (w.rank() != graph.rank()) throw domain_error("rewrite_in_basis: rank mismatch");
  std::vector<std::int64_t> coords(graph.non_tree_edges().size(), 0);
  std::uint32_t v = 0;
  for (const auto& s : w.syllables()) {
    const std::uint64_t reps = static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
    const bool positive = s.exp > 0;
    for (std::uint64_t i = 0; i < reps; ++i) {
      if (positive) {
        const std::int32_t idx = graph.edge_basis_index(v, s.gen);
        if (idx >= 0) coords[idx] += 1;
        v = graph.step(v, s.gen, true);
      } else {
        const std::uint32_t prev = graph.step(v, s.gen, false);
        const std::int32_t idx = graph.edge_basis_index(prev, s.gen);
        if (idx >= 0) coords[idx] -= 1;
        v = prev;
      }
    }
  }
  if (v != 0) {
    throw domain_error("rewrite_in_basis: word is not in the kernel (walk ends at coset " +
                       std::to_string(v) + ")");
  }
  return coords;
}

std::vector<std::uint64_t> sample_index_p_subgroup(std::uint32_t s, std::uint64_t p,
                                                   SplitMix64& rng) {
  if (s == 0) throw domain_error("sample_index_p_subgroup: s must be >= 1");
  if (!finab::is_prime(p)) {
    throw domain_error("sample_index_p_subgroup: p = " + std::to_string(p) + " is not prime");
  }
  // Uniform over the p^s - 1 nonzero functionals, by rejection.
  std::vector<std::uint64_t> functional(s);
  for (;;) {
    bool nonzero = false;
    for (auto& c : functional) {
      c = rng.below(p);
      nonzero = nonzero || c != 0;
    }
    if (nonzero) return functional;
  }
}

}  // namespace crslab::freegrp
