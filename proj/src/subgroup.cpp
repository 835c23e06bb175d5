#include "crslab/subgroup.hpp"

#include <numeric>
#include <string>

#include "crslab/errors.hpp"

namespace crslab::crs {

namespace {

void require_compatible(const TruncSubgroup& a, const TruncSubgroup& b, const char* op) {
  if (a.modulus() != b.modulus() || a.rank() != b.rank()) {
    throw domain_error(std::string(op) + ": modulus/rank mismatch");
  }
}

std::size_t leading_index(const ZRow& row) {
  std::size_t i = 0;
  while (i < row.size() && row[i] == 0) ++i;
  return i;
}

}  // namespace

TruncSubgroup::TruncSubgroup(std::uint64_t modulus, std::uint32_t rank, ZRowList generators)
    : modulus_(modulus), rank_(rank) {
  if (modulus == 0) throw domain_error("TruncSubgroup: modulus must be >= 1");
  gens_ = howell_form(std::move(generators), modulus, rank);
}

TruncSubgroup TruncSubgroup::zero(std::uint64_t modulus, std::uint32_t rank) {
  return TruncSubgroup(modulus, rank, {});
}

TruncSubgroup TruncSubgroup::full(std::uint64_t modulus, std::uint32_t rank) {
  ZRowList rows;
  for (std::uint32_t i = 0; i < rank; ++i) {
    ZRow row(rank, 0);
    row[i] = 1;
    rows.push_back(std::move(row));
  }
  return TruncSubgroup(modulus, rank, std::move(rows));
}

BigInt TruncSubgroup::order() const {
  // Each Howell row with pivot d contributes a factor N/d.
  BigInt n = 1;
  for (const auto& row : gens_) {
    n *= modulus_ / row[leading_index(row)];
  }
  return n;
}

bool TruncSubgroup::is_full() const {
  if (modulus_ == 1) return true;
  if (gens_.size() != rank_) return false;
  for (std::uint32_t i = 0; i < rank_; ++i) {
    if (gens_[i][leading_index(gens_[i])] != 1) return false;
  }
  return true;
}

bool TruncSubgroup::contains(const ZRow& v) const {
  if (v.size() != rank_) throw domain_error("TruncSubgroup::contains: wrong vector length");
  return howell_contains(gens_, v, modulus_);
}

TruncSubgroup ann_sub(const TruncSubgroup& h) {
  return TruncSubgroup(h.modulus(), h.rank(), kernel_mod(h.gens(), h.modulus(), h.rank()));
}

TruncSubgroup multiple_subgroup(std::uint64_t m, std::uint64_t modulus, std::uint32_t rank) {
  const std::uint64_t c = m % modulus;
  ZRowList rows;
  for (std::uint32_t i = 0; i < rank; ++i) {
    ZRow row(rank, 0);
    row[i] = c;
    rows.push_back(std::move(row));
  }
  return TruncSubgroup(modulus, rank, std::move(rows));
}

TruncSubgroup ann_of_multiple(std::uint64_t m, std::uint64_t modulus, std::uint32_t rank) {
  const std::uint64_t d = modulus / std::gcd(m, modulus);
  return multiple_subgroup(d, modulus, rank);
}

TruncSubgroup sum_sub(const TruncSubgroup& h, const TruncSubgroup& k) {
  require_compatible(h, k, "sum_sub");
  ZRowList rows = h.gens();
  rows.insert(rows.end(), k.gens().begin(), k.gens().end());
  return TruncSubgroup(h.modulus(), h.rank(), std::move(rows));
}

TruncSubgroup intersect_sub(const TruncSubgroup& h, const TruncSubgroup& k) {
  require_compatible(h, k, "intersect_sub");
  const std::uint64_t n = h.modulus();
  const std::uint32_t rank = h.rank();
  // Zassenhaus block trick: rows (x, x) for x in H and (y, 0) for y in K
  // span {(x + y, x)}; span elements with zero first block have x = -y,
  // i.e. x in H n K, visible in the second block. The Howell property
  // guarantees those rows generate all of them.
  ZRowList stacked;
  for (const auto& row : h.gens()) {
    ZRow wide(std::size_t{2} * rank, 0);
    for (std::uint32_t j = 0; j < rank; ++j) wide[j] = wide[rank + j] = row[j];
    stacked.push_back(std::move(wide));
  }
  for (const auto& row : k.gens()) {
    ZRow wide(std::size_t{2} * rank, 0);
    for (std::uint32_t j = 0; j < rank; ++j) wide[j] = row[j];
    stacked.push_back(std::move(wide));
  }
  ZRowList wide_howell = howell_form(std::move(stacked), n, std::size_t{2} * rank);
  ZRowList meet;
  for (const auto& row : wide_howell) {
    if (leading_index(row) < rank) continue;
    meet.emplace_back(row.begin() + rank, row.end());
  }
  return TruncSubgroup(n, rank, std::move(meet));
}

bool invertible_mod(const ZRowList& u, std::uint64_t modulus) {
  const std::size_t k = u.size();
  for (const auto& row : u) {
    if (row.size() != k) throw domain_error("invertible_mod: matrix must be square");
  }
  // Integer determinant by cofactor expansion (small k), then a unit test.
  auto det = [&](auto&& self, const std::vector<std::vector<BigInt>>& m) -> BigInt {
    const std::size_t d = m.size();
    if (d == 0) return 1;
    if (d == 1) return m[0][0];
    BigInt acc = 0;
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<std::vector<BigInt>> minor;
      for (std::size_t i = 1; i < d; ++i) {
        std::vector<BigInt> row;
        for (std::size_t j = 0; j < d; ++j) {
          if (j != c) row.push_back(m[i][j]);
        }
        minor.push_back(std::move(row));
      }
      const BigInt term = m[0][c] * self(self, minor);
      acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
  };
  std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = u[i][j] % modulus;
  }
  BigInt d = det(det, m) % modulus;
  if (d < 0) d += modulus;
  return boost::multiprecision::gcd(d, BigInt(modulus)) == 1;
}

TruncSubgroup apply_matrix(const TruncSubgroup& h, const ZRowList& u) {
  if (u.size() != h.rank()) throw domain_error("apply_matrix: matrix size must equal rank");
  if (!invertible_mod(u, h.modulus())) {
    throw domain_error("apply_matrix: matrix is not invertible mod " +
                       std::to_string(h.modulus()));
  }
  const std::uint64_t n = h.modulus();
  ZRowList mapped;
  for (const auto& row : h.gens()) {
    ZRow out(h.rank(), 0);
    for (std::uint32_t j = 0; j < h.rank(); ++j) {
      std::uint64_t acc = 0;
      for (std::uint32_t i = 0; i < h.rank(); ++i) {
        acc = (acc + row[i] * (u[i][j] % n)) % n;
      }
      out[j] = acc;
    }
    mapped.push_back(std::move(out));
  }
  return TruncSubgroup(n, h.rank(), std::move(mapped));
}

}  // namespace crslab::crs
