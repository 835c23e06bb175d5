#include "crslab/qformulas.hpp"

#include <string>

#include "crslab/errors.hpp"

namespace crslab::qlinalg {

namespace {

void require_q(std::uint64_t q) {
  if (q < 2) throw domain_error("q must be >= 2");
}

}  // namespace

BigInt s_seq(std::uint32_t n, std::uint64_t q) {
  require_q(q);
  BigInt result = 1;
  BigInt qi = 1;
  for (std::uint32_t i = 1; i <= n; ++i) {
    qi *= q;
    result *= qi - 1;
  }
  return result;
}

BigInt t_seq(std::uint32_t n, std::uint64_t q) {
  require_q(q);
  const BigInt qn = big_pow(BigInt(q), n);
  BigInt result = 1;
  BigInt qi = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    result *= qn - qi;
    qi *= q;
  }
  return result;
}

BigInt gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint64_t q) {
  require_q(q);
  if (k > n) {
    throw domain_error("gaussian_binomial: k = " + std::to_string(k) + " exceeds n = " +
                       std::to_string(n));
  }
  const BigInt num = s_seq(n, q);
  const BigInt den = s_seq(n - k, q) * s_seq(k, q);
  BigInt result = num / den;
  if (result * den != num) throw internal_error("gaussian_binomial: inexact division");
  return result;
}

BigInt rank_count(std::uint32_t kappa, std::uint32_t n, std::uint32_t r, std::uint64_t q) {
  require_q(q);
  if (r > kappa || r > n) {
    throw domain_error("rank_count: r = " + std::to_string(r) + " exceeds min(" +
                       std::to_string(kappa) + ", " + std::to_string(n) + ")");
  }
  const std::uint64_t choose2 = (std::uint64_t(r) * r - r) / 2;
  const BigInt num = big_pow(BigInt(q), choose2) * s_seq(kappa, q) * s_seq(n, q);
  const BigInt den = s_seq(r, q) * s_seq(kappa - r, q) * s_seq(n - r, q);
  BigInt result = num / den;
  if (result * den != num) throw internal_error("rank_count: inexact division");
  return result;
}

Rational vtilde(std::uint32_t n, std::uint32_t k, std::uint32_t kappa, std::uint64_t q) {
  require_q(q);
  if (k > n) return Rational(0);
  const std::uint32_t r = n - k;
  if (kappa < r) return Rational(0);
  return Rational(rank_count(kappa, n, r, q), big_pow(BigInt(q), std::uint64_t(kappa) * n));
}

Rational v_small(std::uint32_t n, std::uint32_t k, std::uint32_t kappa, std::uint64_t q) {
  if (k > n) {
    throw domain_error("v_small: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  }
  return vtilde(n, k, kappa, q) / Rational(gaussian_binomial(n, k, q));
}

}  // namespace crslab::qlinalg
