#pragma once

// Arithmetic in F_q, q = p^ell with p an odd prime.
//
// An element is stored as the packed index idx = sum_i c_i p^i of its residue
// polynomial c_0 + c_1 X + ... + c_{ell-1} X^{ell-1} modulo the field modulus.
// For ell = 1 the index is the residue itself.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace fqdist {

struct FqElem {
  std::uint32_t idx = 0;

  friend constexpr auto operator<=>(FqElem, FqElem) = default;
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

// Largest supported field order.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

class FieldCtx {
 public:
  // Builds F_{p^ell} with the lexicographically smallest monic irreducible
  // modulus (c_0 most significant). Throws NonPrime, EvenCharacteristic,
  // BadDegree or FieldTooLarge.
  static FieldPtr make(std::int64_t p, std::int64_t ell);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t ell() const noexcept { return ell_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return ell_ == 1; }

  // Modulus coefficients c_0, ..., c_ell (c_ell = 1).
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

  FqElem zero() const noexcept { return {0}; }
  FqElem one() const noexcept { return {1}; }

  // Validated conversion from a packed index.
  FqElem element(std::int64_t idx) const;
  // Image of an integer under Z -> F_p -> F_q.
  FqElem from_int(std::int64_t v) const noexcept;

  std::vector<std::uint32_t> coefficients(FqElem a) const;
  FqElem from_coefficients(std::span<const std::uint32_t> coeffs) const;

  FqElem add(FqElem a, FqElem b) const noexcept {
    if (ell_ == 1) {
      std::uint32_t s = a.idx + b.idx;
      return {s >= p_ ? s - p_ : s};
    }
    if (!add_table_.empty()) return {add_table_[a.idx * q_ + b.idx]};
    return add_digits(a, b);
  }
  FqElem neg(FqElem a) const noexcept { return {neg_[a.idx]}; }
  FqElem sub(FqElem a, FqElem b) const noexcept { return add(a, neg(b)); }
  FqElem mul(FqElem a, FqElem b) const noexcept {
    if (ell_ == 1) {
      return {static_cast<std::uint32_t>(std::uint64_t{a.idx} * b.idx % p_)};
    }
    if (a.idx == 0 || b.idx == 0) return {0};
    std::uint32_t e = log_[a.idx] + log_[b.idx];
    if (e >= q_ - 1) e -= q_ - 1;
    return {exp_[e]};
  }
  FqElem sq(FqElem a) const noexcept { return mul(a, a); }
  // Throws DivisionByZero on zero.
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, std::uint64_t e) const noexcept;

  // Absolute trace to F_p, returned as an integer in [0, p).
  std::uint32_t trace(FqElem a) const noexcept { return trace_[a.idx]; }
  // Quadratic character with eta(0) = 0.
  int eta(FqElem a) const noexcept { return eta_[a.idx]; }
  // eta(-1): +1 iff q = 1 mod 4.
  int eta_minus_one() const noexcept { return q_ % 4 == 1 ? 1 : -1; }

 private:
  FieldCtx(std::uint32_t p, std::uint32_t ell, std::vector<std::uint32_t> modulus);

  FqElem add_digits(FqElem a, FqElem b) const noexcept;
  FqElem mul_poly(FqElem a, FqElem b) const;

  std::uint32_t p_;
  std::uint32_t ell_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i for i < ell

  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> add_table_;  // only for small extension fields
  std::vector<std::uint32_t> exp_;        // extension fields only
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> trace_;
  std::vector<std::int8_t> eta_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace fqdist
