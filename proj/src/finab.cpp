#include "crslab/finab.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "crslab/errors.hpp"
#include "crslab/numtheory.hpp"

namespace crslab::finab {

std::uint64_t PrimePower::order() const { return pow_u64_checked(p, r); }

FinAbGroup FinAbGroup::from_orders(const std::vector<std::uint64_t>& cyclic_orders) {
  std::vector<PrimePower> parts;
  for (std::uint64_t d : cyclic_orders) {
    if (d == 0) throw domain_error("FinAbGroup: cyclic order 0 is not representable");
    for (const auto& [p, e] : factorize(d)) parts.push_back({p, e});
  }
  return from_prime_powers(std::move(parts));
}

FinAbGroup FinAbGroup::from_prime_powers(std::vector<PrimePower> summands) {
  for (const auto& s : summands) {
    if (s.r == 0 || !is_prime(s.p)) {
      throw domain_error("FinAbGroup: summand must be p^r with p prime, r >= 1");
    }
  }
  std::sort(summands.begin(), summands.end());
  FinAbGroup g;
  g.summands_ = std::move(summands);
  return g;
}

BigInt FinAbGroup::order() const {
  BigInt n = 1;
  for (const auto& s : summands_) n *= s.order();
  return n;
}

std::uint64_t FinAbGroup::exponent() const {
  std::uint64_t e = 1;
  for (const auto& s : summands_) e = lcm_u64_checked(e, s.order());
  return e;
}

std::string FinAbGroup::to_sum_string() const {
  if (summands_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i) out << " + ";
    out << "Z/" << summands_[i].order();
  }
  return out.str();
}

std::string FinAbGroup::to_tuple_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i) out << ',';
    out << summands_[i].order();
  }
  out << ']';
  return out.str();
}

FinAbGroup FinAbGroup::parse(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw domain_error("FinAbGroup: empty text");

  std::vector<std::uint64_t> orders;
  auto parse_u64 = [](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw domain_error("FinAbGroup: bad integer '" + s + "'");
    }
    return std::stoull(s);
  };

  if (t.front() == '[') {
    if (t.back() != ']') throw domain_error("FinAbGroup: unterminated tuple form");
    std::string body = t.substr(1, t.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      orders.push_back(parse_u64(body.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  } else if (t == "0" || t == "trivial") {
    // trivial group
  } else {
    std::size_t pos = 0;
    while (pos < t.size()) {
      if (t.compare(pos, 2, "Z/") != 0) {
        throw domain_error("FinAbGroup: expected 'Z/<order>' at '" + t.substr(pos) + "'");
      }
      pos += 2;
      std::size_t plus = t.find('+', pos);
      if (plus == std::string::npos) plus = t.size();
      orders.push_back(parse_u64(t.substr(pos, plus - pos)));
      pos = (plus == t.size()) ? plus : plus + 1;
    }
  }
  for (std::uint64_t d : orders) {
    if (d == 1) throw domain_error("FinAbGroup: text form may not contain Z/1");
  }
  auto g = FinAbGroup::from_orders(orders);
  // The text forms are canonical: every listed order must be a prime power.
  if (g.summands().size() != orders.size()) {
    throw domain_error("FinAbGroup: text form must list prime-power orders");
  }
  return g;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<PrimePower> parts = a.summands();
  parts.insert(parts.end(), b.summands().begin(), b.summands().end());
  return FinAbGroup::from_prime_powers(std::move(parts));
}

bool is_over(const FinAbGroup& f, std::uint64_t m) {
  if (f.trivial()) return true;
  if (m == 0) return false;
  for (const auto& s : f.summands()) {
    if (m % s.order() == 0) return false;
  }
  return true;
}

FinAbGroup n_torsion(const FinAbGroup& f, std::uint64_t n) {
  if (n == 0) return FinAbGroup{};
  std::vector<PrimePower> parts;
  for (const auto& s : f.summands()) {
    const std::uint32_t k = std::min(s.r, valuation(n, s.p));
    if (k > 0) parts.push_back({s.p, k});
  }
  return FinAbGroup::from_prime_powers(std::move(parts));
}

FinAbGroup quotient_by_n_torsion(const FinAbGroup& f, std::uint64_t n) {
  if (n == 0) throw domain_error("quotient_by_n_torsion: n must be >= 1");
  std::vector<PrimePower> parts;
  for (const auto& s : f.summands()) {
    const std::uint32_t v = valuation(n, s.p);
    if (s.r > v) parts.push_back({s.p, s.r - v});
  }
  return FinAbGroup::from_prime_powers(std::move(parts));
}

FinAbGroup lift_over(const FinAbGroup& h, std::uint64_t n) {
  if (n == 0) {
    if (!h.trivial()) throw domain_error("lift_over: no lift over 0 for a nontrivial group");
    return FinAbGroup{};
  }
  std::vector<PrimePower> parts;
  for (const auto& s : h.summands()) {
    parts.push_back({s.p, s.r + valuation(n, s.p)});
  }
  return FinAbGroup::from_prime_powers(std::move(parts));
}

BigInt hom_count(const FinAbGroup& g, const FinAbGroup& h) {
  BigInt total = 1;
  for (const auto& a : g.summands()) {
    for (const auto& b : h.summands()) {
      total *= std::gcd(a.order(), b.order());
    }
  }
  return total;
}

namespace {

// Additive partitions of e, each partition ascending.
std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t e) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t remaining, std::uint32_t min_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t part = min_part; part <= remaining; ++part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, e, 1);
  return out;
}

}  // namespace

std::vector<FinAbGroup> groups_of_order(std::uint64_t n) {
  if (n == 0) throw domain_error("groups_of_order: n must be >= 1");
  std::vector<std::vector<PrimePower>> combos{{}};
  for (const auto& [p, e] : factorize(n)) {
    std::vector<std::vector<PrimePower>> next;
    for (const auto& partition : partitions(e)) {
      for (const auto& base : combos) {
        auto extended = base;
        for (std::uint32_t part : partition) extended.push_back({p, part});
        next.push_back(std::move(extended));
      }
    }
    combos = std::move(next);
  }
  std::vector<FinAbGroup> out;
  out.reserve(combos.size());
  for (auto& c : combos) out.push_back(FinAbGroup::from_prime_powers(std::move(c)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FinAbGroup> groups_up_to(std::uint64_t bound) {
  std::vector<FinAbGroup> out;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    auto g = groups_of_order(n);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

}  // namespace crslab::finab
