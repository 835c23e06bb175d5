#include "crslab/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "crslab/errors.hpp"

namespace crslab::finab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  if (n == 0) throw domain_error("factorize: n must be >= 1");
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw domain_error("divisors: n must be >= 1");
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw domain_error("mobius: n must be >= 1");
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint32_t valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) throw domain_error("valuation: need n >= 1 and p >= 2");
  std::uint32_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t pow_u64_checked(std::uint64_t p, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (p != 0 && r > std::numeric_limits<std::uint64_t>::max() / p) {
      throw domain_error("pow_u64_checked: overflow");
    }
    r *= p;
  }
  return r;
}

std::uint64_t lcm_u64_checked(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  if (q > std::numeric_limits<std::uint64_t>::max() / b) {
    throw domain_error("lcm_u64_checked: overflow");
  }
  return q * b;
}

bool as_prime_power(std::uint64_t n, std::uint64_t* p_out, std::uint32_t* e_out) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  if (p_out) *p_out = f[0].first;
  if (e_out) *e_out = f[0].second;
  return true;
}

}  // namespace crslab::finab
