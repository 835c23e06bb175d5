#pragma once

#include <cstdint>

#include "crslab/rational.hpp"

namespace crslab::qlinalg {

// s_n = (q^n - 1)(q^{n-1} - 1) ... (q - 1); empty product for n = 0.
BigInt s_seq(std::uint32_t n, std::uint64_t q);

// t_n = (q^n - 1)(q^n - q) ... (q^n - q^{n-1}) = |GL_n(q)|.
BigInt t_seq(std::uint32_t n, std::uint64_t q);

// d_{n,k}: the number of k-dimensional subspaces of F_q^n. Requires k <= n.
BigInt gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint64_t q);

// The number of rank-r matrices in M_{kappa x n}(F_q). Requires r <= min(kappa, n).
BigInt rank_count(std::uint32_t kappa, std::uint32_t n, std::uint32_t r, std::uint64_t q);

// vtilde_{n,k} = rank_count(kappa, n, n-k) / q^(kappa n) when n >= k and
// kappa >= n - k; exactly 0 for every other pair (including k > n).
Rational vtilde(std::uint32_t n, std::uint32_t k, std::uint32_t kappa, std::uint64_t q);

// v_{n,k} = vtilde_{n,k} / d_{n,k}. Requires k <= n.
Rational v_small(std::uint32_t n, std::uint32_t k, std::uint32_t kappa, std::uint64_t q);

}  // namespace crslab::qlinalg
