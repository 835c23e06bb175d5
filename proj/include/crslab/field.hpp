#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace crslab::qlinalg {

// Arithmetic in the finite field of order q = p^e.
//
// Prime fields use residue arithmetic mod p and may have any prime order.
// Extension fields (e > 1) are shipped for q <= 64 only and follow a fixed
// irreducible polynomial per (p, e); elements are encoded as integers in
// [0, q) whose base-p digits are the polynomial coefficients. Multiplication
// and inverse tables are built at construction, and construction verifies
// that every nonzero element is invertible (which fails exactly when the
// modulus polynomial is reducible).
class FieldSpec {
 public:
  // q >= 2 must be a prime power; extension orders beyond 64 are rejected.
  static std::shared_ptr<const FieldSpec> make(std::uint64_t q);

  std::uint64_t order() const { return q_; }
  std::uint64_t characteristic() const { return p_; }
  std::uint32_t extension_degree() const { return e_; }

  // Coefficients c_0..c_{e-1} of the modulus x^e + c_{e-1}x^{e-1} + ... + c_0
  // (empty for prime fields).
  const std::vector<std::uint32_t>& modulus_coefficients() const { return poly_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // a != 0

 private:
  FieldSpec(std::uint64_t p, std::uint32_t e);

  std::uint64_t p_;
  std::uint32_t e_;
  std::uint64_t q_;
  std::vector<std::uint32_t> poly_;
  // Tables for e > 1 (q <= 64, so q*q entries are cheap).
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> inv_table_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

}  // namespace crslab::qlinalg
