#include "crslab/howell.hpp"

#include <numeric>
#include <string>

#include "crslab/errors.hpp"

namespace crslab::crs {

namespace {

// gcd g = u*a + v*b over the integers.
void egcd(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& u, std::int64_t& v) {
  if (b == 0) {
    g = a;
    u = 1;
    v = 0;
    return;
  }
  std::int64_t g1, u1, v1;
  egcd(b, a % b, g1, u1, v1);
  g = g1;
  u = v1;
  v = u1 - (a / b) * v1;
}

std::uint64_t mod_reduce(std::int64_t x, std::uint64_t n) {
  std::int64_t m = x % static_cast<std::int64_t>(n);
  if (m < 0) m += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
  std::int64_t g, u, v;
  egcd(static_cast<std::int64_t>(a), static_cast<std::int64_t>(n), g, u, v);
  if (g != 1) throw internal_error("mod_inverse: not a unit");
  return mod_reduce(u, n);
}

std::size_t leading_index(const ZRow& row) {
  std::size_t i = 0;
  while (i < row.size() && row[i] == 0) ++i;
  return i;
}

ZRow scale_row(const ZRow& row, std::uint64_t c, std::uint64_t n) {
  ZRow out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) out[j] = (row[j] * c) % n;
  return out;
}

// r - q*s mod n.
void subtract_multiple(ZRow& r, const ZRow& s, std::uint64_t q, std::uint64_t n) {
  for (std::size_t j = 0; j < r.size(); ++j) {
    r[j] = (r[j] + (n - (s[j] * q) % n)) % n;
  }
}

bool is_zero(const ZRow& row) {
  for (std::uint64_t v : row) {
    if (v != 0) return false;
  }
  return true;
}

}  // namespace

std::uint64_t unit_scale(std::uint64_t a, std::uint64_t modulus) {
  const std::uint64_t d = std::gcd(a, modulus);
  const std::uint64_t n1 = modulus / d;
  std::uint64_t u = mod_inverse((a / d) % n1, n1);
  if (u == 0) u = 1;  // n1 == 1
  // Lift to a unit mod N; some u + t*n1 is coprime to N.
  std::uint64_t tries = 0;
  while (std::gcd(u, modulus) != 1) {
    u += n1;
    if (++tries > modulus) throw internal_error("unit_scale: no unit lift found");
  }
  return u % modulus;
}

ZRowList howell_form(ZRowList rows, std::uint64_t modulus, std::size_t width) {
  if (modulus == 0) throw domain_error("howell_form: modulus must be >= 1");
  if (modulus >= (std::uint64_t{1} << 31)) {
    throw domain_error("howell_form: modulus must be < 2^31");
  }
  if (modulus == 1) return {};

  ZRowList work;
  for (auto& row : rows) {
    if (row.size() != width) throw domain_error("howell_form: row width mismatch");
    for (auto& v : row) v %= modulus;
    if (!is_zero(row)) work.push_back(std::move(row));
  }

  ZRowList pivots;
  std::vector<std::size_t> pivot_cols;

  for (std::size_t col = 0; col < width; ++col) {
    ZRowList rest;
    ZRow pivot_row;
    bool have_pivot = false;
    for (auto& row : work) {
      const std::size_t lead = leading_index(row);
      if (lead != col) {
        rest.push_back(std::move(row));
        continue;
      }
      if (!have_pivot) {
        pivot_row = std::move(row);
        have_pivot = true;
        continue;
      }
      // Combine: one row keeps gcd of the leading entries, the other drops
      // out of this column.
      std::int64_t g, u, v;
      egcd(static_cast<std::int64_t>(pivot_row[col]), static_cast<std::int64_t>(row[col]), g, u,
           v);
      const std::uint64_t cu = mod_reduce(u, modulus);
      const std::uint64_t cv = mod_reduce(v, modulus);
      ZRow combined(width, 0);
      for (std::size_t j = 0; j < width; ++j) {
        combined[j] = (pivot_row[j] * cu + row[j] * cv) % modulus;
      }
      const std::uint64_t fr = pivot_row[col] / static_cast<std::uint64_t>(g);
      const std::uint64_t fs = row[col] / static_cast<std::uint64_t>(g);
      ZRow eliminated(width, 0);
      for (std::size_t j = 0; j < width; ++j) {
        eliminated[j] = ((row[j] * fr) % modulus + modulus - (pivot_row[j] * fs) % modulus) %
                        modulus;
      }
      pivot_row = std::move(combined);
      if (pivot_row[col] == 0) throw internal_error("howell_form: lost pivot");
      if (!is_zero(eliminated)) rest.push_back(std::move(eliminated));
    }
    if (have_pivot) {
      // Normalize the pivot entry to the divisor of N generating its ideal.
      const std::uint64_t unit = unit_scale(pivot_row[col], modulus);
      pivot_row = scale_row(pivot_row, unit, modulus);
      const std::uint64_t d = pivot_row[col];
      // (N/d) * row has zero leading entry; keeping it in the worklist is
      // what upgrades an echelon form to a Howell form.
      ZRow annihilated = scale_row(pivot_row, modulus / d, modulus);
      if (!is_zero(annihilated)) rest.push_back(std::move(annihilated));
      pivots.push_back(std::move(pivot_row));
      pivot_cols.push_back(col);
    }
    work = std::move(rest);
  }

  // Reduce entries above each pivot below the pivot value.
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const std::size_t col = pivot_cols[i];
    const std::uint64_t d = pivots[i][col];
    for (std::size_t i2 = 0; i2 < i; ++i2) {
      const std::uint64_t q = pivots[i2][col] / d;
      if (q != 0) subtract_multiple(pivots[i2], pivots[i], q, modulus);
    }
  }
  return pivots;
}

bool howell_contains(const ZRowList& howell, const ZRow& v, std::uint64_t modulus) {
  if (modulus == 1) return true;
  ZRow rem = v;
  for (auto& x : rem) x %= modulus;
  std::size_t row_idx = 0;
  for (std::size_t col = 0; col < rem.size(); ++col) {
    if (row_idx < howell.size() && leading_index(howell[row_idx]) == col) {
      const std::uint64_t d = howell[row_idx][col];
      const std::uint64_t q = rem[col] / d;
      if (q != 0) subtract_multiple(rem, howell[row_idx], q, modulus);
      ++row_idx;
    }
    if (rem[col] != 0) return false;
  }
  return true;
}

ZRowList kernel_mod(const ZRowList& constraints, std::uint64_t modulus, std::size_t width) {
  const std::size_t m = constraints.size();
  // Row span of [C^T | I] is {(x.C^T, x)}; rows of its Howell form whose
  // first m entries vanish generate the kernel, read off the identity block.
  ZRowList stacked;
  stacked.reserve(width);
  for (std::size_t i = 0; i < width; ++i) {
    ZRow row(m + width, 0);
    for (std::size_t j = 0; j < m; ++j) {
      if (constraints[j].size() != width) throw domain_error("kernel_mod: row width mismatch");
      row[j] = constraints[j][i] % modulus;
    }
    row[m + i] = 1;
    stacked.push_back(std::move(row));
  }
  ZRowList h = howell_form(std::move(stacked), modulus, m + width);
  ZRowList kernel;
  for (const auto& row : h) {
    if (leading_index(row) < m) continue;
    kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(m), row.end());
  }
  return howell_form(std::move(kernel), modulus, width);
}

}  // namespace crslab::crs
