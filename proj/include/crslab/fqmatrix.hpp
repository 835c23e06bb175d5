#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "crslab/caps.hpp"
#include "crslab/field.hpp"
#include "crslab/rng.hpp"

namespace crslab::qlinalg {

// Dense matrix over a finite field, row-major element codes in [0, q).
class FqMatrix {
 public:
  FqMatrix(FieldPtr field, std::uint32_t rows, std::uint32_t cols);
  FqMatrix(FieldPtr field, std::uint32_t rows, std::uint32_t cols,
           std::vector<std::uint32_t> entries);

  static FqMatrix identity(FieldPtr field, std::uint32_t n);

  const FieldSpec& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }
  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }

  std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return a_[i * cols_ + j]; }
  void set(std::uint32_t i, std::uint32_t j, std::uint32_t v) { a_[i * cols_ + j] = v; }
  const std::vector<std::uint32_t>& entries() const { return a_; }

  bool operator==(const FqMatrix& other) const;

 private:
  FieldPtr field_;
  std::uint32_t rows_, cols_;
  std::vector<std::uint32_t> a_;
};

std::uint32_t matrix_rank(const FqMatrix& m);

FqMatrix matmul(const FqMatrix& a, const FqMatrix& b);

// Visits all q^(rows*cols) matrices once, in lexicographic entry order
// (row-major entry vector read as a base-q number, first entry most
// significant). Throws resource_limit_error if the count exceeds cap.
void enumerate_matrices(const FieldPtr& field, std::uint32_t rows, std::uint32_t cols,
                        const std::function<void(const FqMatrix&)>& visit,
                        std::uint64_t cap = kDefaultEnumerationCap);

// Haar-uniform matrix: every entry independent uniform on [0, q).
FqMatrix sample_uniform_matrix(FieldPtr field, std::uint32_t rows, std::uint32_t cols,
                               SplitMix64& rng);

// A k-dimensional subspace of F_q^n, canonically represented by the unique
// reduced row-echelon basis.
class Subspace {
 public:
  Subspace(FqMatrix rref_basis);  // validates RREF

  const FqMatrix& basis() const { return basis_; }
  std::uint32_t ambient_dim() const { return basis_.cols(); }
  std::uint32_t dim() const { return basis_.rows(); }

  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

 private:
  FqMatrix basis_;
};

// All k-dimensional subspaces of F_q^n, each exactly once.
std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, std::uint32_t n, std::uint32_t k,
                                          std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace crslab::qlinalg
