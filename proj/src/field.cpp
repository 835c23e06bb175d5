#include "crslab/field.hpp"

#include <string>

#include "crslab/errors.hpp"
#include "crslab/numtheory.hpp"

namespace crslab::qlinalg {

namespace {

struct ModulusEntry {
  std::uint32_t p;
  std::uint32_t e;
  // c_0..c_{e-1} with x^e = -(c_{e-1}x^{e-1} + ... + c_0).
  std::vector<std::uint32_t> coeffs;
};

// Conway polynomials for the shipped extension orders.
const ModulusEntry kModuli[] = {
    {2, 2, {1, 1}},
    {2, 3, {1, 1, 0}},
    {2, 4, {1, 1, 0, 0}},
    {2, 5, {1, 0, 1, 0, 0}},
    {2, 6, {1, 1, 0, 1, 1, 0}},
    {3, 2, {2, 2}},
    {3, 3, {1, 2, 0}},
    {5, 2, {2, 4}},
    {7, 2, {3, 6}},
};

std::vector<std::uint32_t> digits_base_p(std::uint64_t code, std::uint64_t p, std::uint32_t e) {
  std::vector<std::uint32_t> d(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return d;
}

std::uint32_t encode_base_p(const std::vector<std::uint32_t>& d, std::uint64_t p,
                            std::uint32_t e) {
  std::uint64_t code = 0;
  for (std::uint32_t i = e; i-- > 0;) code = code * p + d[i];
  return static_cast<std::uint32_t>(code);
}

}  // namespace

FieldSpec::FieldSpec(std::uint64_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
  for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
  if (e_ == 1) return;

  for (const auto& entry : kModuli) {
    if (entry.p == p_ && entry.e == e_) poly_ = entry.coeffs;
  }
  if (poly_.empty()) {
    throw domain_error("no field table shipped for order " + std::to_string(q_));
  }

  // Polynomial multiplication mod the shipped modulus, tabulated once.
  mul_table_.assign(static_cast<std::size_t>(q_ * q_), 0);
  for (std::uint64_t a = 0; a < q_; ++a) {
    const auto da = digits_base_p(a, p_, e_);
    for (std::uint64_t b = 0; b < q_; ++b) {
      const auto db = digits_base_p(b, p_, e_);
      std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
      for (std::uint32_t i = 0; i < e_; ++i) {
        for (std::uint32_t j = 0; j < e_; ++j) {
          prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
        }
      }
      // Reduce: x^{e+k} = -(c_{e-1}x^{e-1+k} + ... + c_0 x^k).
      for (std::uint32_t deg = 2 * e_ - 2; deg >= e_; --deg) {
        const std::uint32_t lead = prod[deg];
        if (lead != 0) {
          prod[deg] = 0;
          for (std::uint32_t i = 0; i < e_; ++i) {
            const std::uint64_t sub = (std::uint64_t(lead) * poly_[i]) % p_;
            prod[deg - e_ + i] =
                static_cast<std::uint32_t>((prod[deg - e_ + i] + p_ - sub) % p_);
          }
        }
        if (deg == e_) break;
      }
      prod.resize(e_);
      mul_table_[a * q_ + b] = encode_base_p(prod, p_, e_);
    }
  }

  inv_table_.assign(static_cast<std::size_t>(q_), 0);
  for (std::uint64_t a = 1; a < q_; ++a) {
    std::uint32_t found = 0;
    for (std::uint64_t b = 1; b < q_; ++b) {
      if (mul_table_[a * q_ + b] == 1) {
        found = static_cast<std::uint32_t>(b);
        break;
      }
    }
    if (found == 0) {
      throw internal_error("shipped modulus polynomial is not irreducible for q = " +
                           std::to_string(q_));
    }
    inv_table_[a] = found;
  }
}

std::shared_ptr<const FieldSpec> FieldSpec::make(std::uint64_t q) {
  std::uint64_t p = 0;
  std::uint32_t e = 0;
  if (!finab::as_prime_power(q, &p, &e)) {
    throw domain_error(std::to_string(q) + " is not a prime power");
  }
  if (e > 1 && q > 64) {
    throw domain_error("extension fields are shipped only for q <= 64, got q = " +
                       std::to_string(q));
  }
  if (q >= (std::uint64_t{1} << 31)) {
    throw domain_error("field order must be < 2^31");
  }
  return std::shared_ptr<const FieldSpec>(new FieldSpec(p, e));
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) + b) % p_);
  const auto da = digits_base_p(a, p_, e_);
  const auto db = digits_base_p(b, p_, e_);
  std::vector<std::uint32_t> s(e_);
  for (std::uint32_t i = 0; i < e_; ++i) s[i] = static_cast<std::uint32_t>((da[i] + db[i]) % p_);
  return encode_base_p(s, p_, e_);
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const {
  if (e_ == 1) return static_cast<std::uint32_t>((p_ - a) % p_);
  const auto da = digits_base_p(a, p_, e_);
  std::vector<std::uint32_t> s(e_);
  for (std::uint32_t i = 0; i < e_; ++i) s[i] = static_cast<std::uint32_t>((p_ - da[i]) % p_);
  return encode_base_p(s, p_, e_);
}

std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
  return mul_table_[std::uint64_t(a) * q_ + b];
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a == 0) throw domain_error("field inverse of zero");
  if (e_ > 1) return inv_table_[a];
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1, base = a, exp = p_ - 2;
  while (exp > 0) {
    if (exp & 1) result = (result * base) % p_;
    base = (base * base) % p_;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace crslab::qlinalg
