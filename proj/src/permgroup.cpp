#include "crslab/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "crslab/errors.hpp"
#include "crslab/rational.hpp"

namespace crslab::freegrp {

Permutation::Permutation(std::uint32_t degree) : img_(degree) {
  for (std::uint32_t i = 0; i < degree; ++i) img_[i] = i;
}

Permutation::Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t v : img_) {
    if (v >= img_.size() || seen[v]) throw domain_error("Permutation: images are not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree()) throw domain_error("Permutation: degree mismatch");
  std::vector<std::uint32_t> images(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) images[i] = other.img_[img_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> images(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) images[img_[i]] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::power(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t k = static_cast<std::uint64_t>(e < 0 ? -e : e);
  Permutation acc(degree());
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

Permutation Permutation::padded_to(std::uint32_t degree) const {
  if (degree < img_.size()) throw domain_error("Permutation: cannot shrink degree");
  std::vector<std::uint32_t> images(img_);
  for (std::uint32_t i = static_cast<std::uint32_t>(img_.size()); i < degree; ++i) {
    images.push_back(i);
  }
  return Permutation(std::move(images));
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (std::uint32_t start = 0; start < degree(); ++start) {
    if (seen[start] || img_[start] == start) continue;
    any = true;
    out << '(';
    std::uint32_t x = start;
    bool first = true;
    do {
      seen[x] = true;
      if (!first) out << ' ';
      out << (x + 1);
      first = false;
      x = img_[x];
    } while (x != start);
    out << ')';
  }
  return any ? out.str() : "()";
}

Permutation Permutation::parse_cycles(const std::string& text, std::uint32_t min_degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::uint32_t max_point = min_degree;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw domain_error("Permutation: expected '(' in cycle notation");
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw domain_error("Permutation: expected a point in cycle notation");
      const std::uint64_t point = std::stoull(text.substr(pos, end - pos));
      if (point == 0) throw domain_error("Permutation: points are 1-based");
      cycle.push_back(static_cast<std::uint32_t>(point - 1));
      max_point = std::max(max_point, static_cast<std::uint32_t>(point));
      pos = end;
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  std::vector<std::uint32_t> images(std::max<std::uint32_t>(max_point, 1));
  for (std::uint32_t i = 0; i < images.size(); ++i) images[i] = i;
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::uint32_t from = cycle[i];
      const std::uint32_t to = cycle[(i + 1) % cycle.size()];
      if (images[from] != from && images[from] != to) {
        throw domain_error("Permutation: point repeated across cycles");
      }
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

FinGroup FinGroup::generated_by(std::vector<Permutation> generators, std::uint64_t order_cap) {
  if (generators.empty()) throw domain_error("FinGroup: at least one generator required");
  std::uint32_t degree = 1;
  for (const auto& g : generators) degree = std::max(degree, g.degree());
  if (degree > 12) throw domain_error("FinGroup: degree is capped at 12");
  for (auto& g : generators) g = g.padded_to(degree);

  std::set<Permutation> elements;
  std::vector<Permutation> frontier{Permutation(degree)};
  elements.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier) {
      for (const auto& g : generators) {
        Permutation candidate = e * g;
        if (elements.insert(candidate).second) {
          if (elements.size() > order_cap) {
            throw resource_limit_error("FinGroup: order exceeds the cap of " +
                                       std::to_string(order_cap));
          }
          next.push_back(std::move(candidate));
        }
      }
    }
    frontier = std::move(next);
  }

  FinGroup g;
  g.degree_ = degree;
  g.gens_ = std::move(generators);
  g.elems_.assign(elements.begin(), elements.end());
  return g;
}

bool FinGroup::contains(const Permutation& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

Permutation word_map_eval(const FreeWord& w, std::span<const Permutation> tuple) {
  std::uint32_t max_index = 0;
  for (const auto& s : w.syllables()) max_index = std::max(max_index, s.gen);
  if (tuple.size() < max_index) {
    throw domain_error("word_map_eval: tuple shorter than the largest variable index");
  }
  const std::uint32_t degree = tuple.empty() ? 1 : tuple[0].degree();
  Permutation acc(degree);
  for (const auto& s : w.syllables()) {
    acc = acc * tuple[s.gen - 1].power(s.exp);
  }
  return acc;
}

FinGroup verbal_subgroup(const FinGroup& g, const std::vector<FreeWord>& words,
                         std::uint64_t tuple_cap) {
  if (words.empty()) throw domain_error("verbal_subgroup: at least one word required");
  std::set<Permutation> images;
  images.insert(Permutation(g.degree()));
  for (const auto& w : words) {
    std::uint32_t vars = 0;
    for (const auto& s : w.syllables()) vars = std::max(vars, s.gen);
    BigInt tuples = big_pow(BigInt(g.order()), vars);
    if (tuples > tuple_cap) {
      throw resource_limit_error("verbal_subgroup: " + tuples.str() +
                                 " tuples exceeds the enumeration cap of " +
                                 std::to_string(tuple_cap));
    }
    std::vector<std::size_t> odo(vars, 0);
    std::vector<Permutation> tuple(vars, Permutation(g.degree()));
    for (;;) {
      for (std::uint32_t i = 0; i < vars; ++i) tuple[i] = g.elements()[odo[i]];
      images.insert(word_map_eval(w, tuple));
      std::size_t i = vars;
      bool done = (vars == 0);
      while (i > 0) {
        --i;
        if (++odo[i] < g.order()) break;
        odo[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }

  FinGroup sub = FinGroup::generated_by(std::vector<Permutation>(images.begin(), images.end()),
                                        g.order());
  // Verbal subgroups are normal; verify it.
  for (const auto& e : g.elements()) {
    const Permutation inv = e.inverse();
    for (const auto& s : sub.generators()) {
      if (!sub.contains(inv * s * e)) {
        throw internal_error("verbal_subgroup: result is not normal");
      }
    }
  }
  return sub;
}

}  // namespace crslab::freegrp
