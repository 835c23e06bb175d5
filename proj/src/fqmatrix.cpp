#include "crslab/fqmatrix.hpp"

#include <string>

#include "crslab/errors.hpp"
#include "crslab/qformulas.hpp"
#include "crslab/rational.hpp"

namespace crslab::qlinalg {

FqMatrix::FqMatrix(FieldPtr field, std::uint32_t rows, std::uint32_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(std::size_t(rows) * cols, 0) {}

FqMatrix::FqMatrix(FieldPtr field, std::uint32_t rows, std::uint32_t cols,
                   std::vector<std::uint32_t> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != std::size_t(rows_) * cols_) {
    throw domain_error("FqMatrix: entry count does not match rows*cols");
  }
  for (std::uint32_t v : a_) {
    if (v >= field_->order()) throw domain_error("FqMatrix: entry code out of range");
  }
}

FqMatrix FqMatrix::identity(FieldPtr field, std::uint32_t n) {
  FqMatrix m(std::move(field), n, n);
  for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

bool FqMatrix::operator==(const FqMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ &&
         field_->order() == other.field_->order() && a_ == other.a_;
}

std::uint32_t matrix_rank(const FqMatrix& m) {
  const FieldSpec& f = m.field();
  std::vector<std::uint32_t> a = m.entries();
  const std::uint32_t rows = m.rows(), cols = m.cols();
  auto at = [&](std::uint32_t i, std::uint32_t j) -> std::uint32_t& {
    return a[std::size_t(i) * cols + j];
  };

  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < cols && rank < rows; ++col) {
    std::uint32_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::uint32_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const std::uint32_t inv = f.inv(at(rank, col));
    for (std::uint32_t i = rank + 1; i < rows; ++i) {
      const std::uint32_t factor = f.mul(at(i, col), inv);
      if (factor == 0) continue;
      for (std::uint32_t j = col; j < cols; ++j) {
        at(i, j) = f.sub(at(i, j), f.mul(factor, at(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

FqMatrix matmul(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.rows() || a.field().order() != b.field().order()) {
    throw domain_error("matmul: dimension or field mismatch");
  }
  const FieldSpec& f = a.field();
  FqMatrix c(a.field_ptr(), a.rows(), b.cols());
  for (std::uint32_t i = 0; i < a.rows(); ++i) {
    for (std::uint32_t j = 0; j < b.cols(); ++j) {
      std::uint32_t acc = 0;
      for (std::uint32_t k = 0; k < a.cols(); ++k) {
        acc = f.add(acc, f.mul(a.at(i, k), b.at(k, j)));
      }
      c.set(i, j, acc);
    }
  }
  return c;
}

void enumerate_matrices(const FieldPtr& field, std::uint32_t rows, std::uint32_t cols,
                        const std::function<void(const FqMatrix&)>& visit,
                        std::uint64_t cap) {
  const BigInt total = big_pow(BigInt(field->order()), std::uint64_t(rows) * cols);
  if (total > cap) {
    throw resource_limit_error("enumerate_matrices: " + total.str() +
                               " matrices exceeds the enumeration cap of " + std::to_string(cap));
  }
  const std::uint64_t q = field->order();
  std::vector<std::uint32_t> odo(std::size_t(rows) * cols, 0);
  for (;;) {
    visit(FqMatrix(field, rows, cols, odo));
    // Increment from the last entry; lexicographic order overall.
    std::size_t i = odo.size();
    while (i > 0) {
      --i;
      if (++odo[i] < q) break;
      odo[i] = 0;
      if (i == 0) return;
    }
    if (odo.empty()) return;  // the unique empty matrix was visited once
  }
}

FqMatrix sample_uniform_matrix(FieldPtr field, std::uint32_t rows, std::uint32_t cols,
                               SplitMix64& rng) {
  const std::uint64_t q = field->order();
  std::vector<std::uint32_t> entries(std::size_t(rows) * cols);
  for (auto& v : entries) v = static_cast<std::uint32_t>(rng.below(q));
  return FqMatrix(std::move(field), rows, cols, std::move(entries));
}

Subspace::Subspace(FqMatrix rref_basis) : basis_(std::move(rref_basis)) {
  const std::uint32_t k = basis_.rows(), n = basis_.cols();
  std::int64_t prev_pivot = -1;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint32_t j = 0;
    while (j < n && basis_.at(i, j) == 0) ++j;
    if (j == n) throw domain_error("Subspace: zero row in basis");
    if (std::int64_t(j) <= prev_pivot) throw domain_error("Subspace: pivots not increasing");
    if (basis_.at(i, j) != 1) throw domain_error("Subspace: pivot not 1");
    for (std::uint32_t i2 = 0; i2 < k; ++i2) {
      if (i2 != i && basis_.at(i2, j) != 0) {
        throw domain_error("Subspace: pivot column not cleared");
      }
    }
    prev_pivot = j;
  }
}

std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, std::uint32_t n, std::uint32_t k,
                                          std::uint64_t cap) {
  const BigInt total = gaussian_binomial(n, k, field->order());
  if (total > cap) {
    throw resource_limit_error("enumerate_subspaces: " + total.str() +
                               " subspaces exceeds the enumeration cap of " + std::to_string(cap));
  }
  std::vector<Subspace> out;
  const std::uint64_t q = field->order();

  // Each subspace has a unique RREF basis, determined by its pivot columns
  // and the values of the free cells (right of the row's pivot, outside
  // pivot columns). Enumerating those directly yields each subspace once.
  std::vector<std::uint32_t> pivots(k);
  for (std::uint32_t i = 0; i < k; ++i) pivots[i] = i;

  auto emit_for_pivots = [&]() {
    std::vector<bool> is_pivot(n, false);
    for (std::uint32_t p : pivots) is_pivot[p] = true;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free_cells;
    for (std::uint32_t i = 0; i < k; ++i) {
      for (std::uint32_t j = pivots[i] + 1; j < n; ++j) {
        if (!is_pivot[j]) free_cells.emplace_back(i, j);
      }
    }
    std::vector<std::uint32_t> values(free_cells.size(), 0);
    for (;;) {
      FqMatrix basis(field, k, n);
      for (std::uint32_t i = 0; i < k; ++i) basis.set(i, pivots[i], 1);
      for (std::size_t c = 0; c < free_cells.size(); ++c) {
        basis.set(free_cells[c].first, free_cells[c].second, values[c]);
      }
      out.emplace_back(std::move(basis));
      std::size_t i = values.size();
      bool done = values.empty();
      while (i > 0) {
        --i;
        if (++values[i] < q) break;
        values[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  };

  if (k == 0) {
    out.emplace_back(FqMatrix(field, 0, n));
    return out;
  }
  // Iterate pivot column combinations in lexicographic order.
  for (;;) {
    emit_for_pivots();
    std::int64_t i = k - 1;
    while (i >= 0 && pivots[i] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (std::uint32_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

}  // namespace crslab::qlinalg
