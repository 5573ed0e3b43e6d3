#include "fqdist/field.hpp"

#include <algorithm>
#include <utility>
#include <string>

#include "fqdist/error.hpp"

namespace fqdist {

namespace {

constexpr std::uint32_t kAddTableMaxOrder = 729;

// Dense polynomials over F_p, lowest degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// a mod f over F_p.
Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(f.back(), p);
  while (a.size() > df && !a.empty()) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i) {
      const std::uint64_t sub = c * f[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin-style test: f of degree n is irreducible iff it shares no factor with
// X^{p^i} - X for 1 <= i <= n/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return n == 1;
  Poly x_pow{0, 1};
  for (std::size_t i = 1; i <= n / 2; ++i) {
    x_pow = poly_powmod(x_pow, p, f, p);
    Poly h = x_pow;
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    if (poly_gcd(f, h, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldPtr FieldCtx::make(std::int64_t p, std::int64_t ell) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(Errc::NonPrime, "p = " + std::to_string(p) + " is not prime");
  }
  if (p == 2) {
    throw Error(Errc::EvenCharacteristic, "characteristic 2 has no odd-order field");
  }
  if (ell < 1) {
    throw Error(Errc::BadDegree, "extension degree must be >= 1, got " + std::to_string(ell));
  }
  std::uint64_t q = 1;
  for (std::int64_t i = 0; i < ell; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldOrder) {
      throw Error(Errc::FieldTooLarge, "q = " + std::to_string(p) + "^" + std::to_string(ell) +
                                           " exceeds 2^20");
    }
  }
  const auto up = static_cast<std::uint32_t>(p);
  const auto uell = static_cast<std::uint32_t>(ell);

  // Candidates in lexicographic order of (c_0, ..., c_{ell-1}).
  Poly modulus;
  for (std::uint64_t k = 0; k < q; ++k) {
    Poly f(uell + 1, 0);
    std::uint64_t rest = k;
    for (std::uint32_t i = 0; i < uell; ++i) {
      f[uell - 1 - i] = static_cast<std::uint32_t>(rest % up);
      rest /= up;
    }
    f[uell] = 1;
    if (is_irreducible(f, up)) {
      modulus = std::move(f);
      break;
    }
  }
  return FieldPtr(new FieldCtx(up, uell, std::move(modulus)));
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t ell, std::vector<std::uint32_t> modulus)
    : p_(p), ell_(ell), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < ell_; ++i) {
    pow_p_.push_back(q_);
    q_ *= p_;
  }

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < ell_; ++i) {
      const std::uint32_t c = a / pow_p_[i] % p_;
      out += ((p_ - c) % p_) * pow_p_[i];
    }
    neg_[a] = out;
  }

  if (ell_ > 1) {
    if (q_ <= kAddTableMaxOrder) {
      add_table_.resize(std::size_t{q_} * q_);
      for (std::uint32_t a = 0; a < q_; ++a) {
        for (std::uint32_t b = 0; b < q_; ++b) {
          add_table_[std::size_t{a} * q_ + b] = add_digits({a}, {b}).idx;
        }
      }
    }

    const auto factors = prime_factors(q_ - 1);
    auto pow_slow = [&](FqElem base, std::uint64_t e) {
      FqElem r = one();
      while (e > 0) {
        if (e & 1) r = mul_poly(r, base);
        base = mul_poly(base, base);
        e >>= 1;
      }
      return r;
    };
    FqElem gen{0};
    for (std::uint32_t g = 1; g < q_; ++g) {
      bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) {
        return pow_slow({g}, (q_ - 1) / r) != one();
      });
      if (primitive) {
        gen = {g};
        break;
      }
    }
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    FqElem x = one();
    for (std::uint32_t e = 0; e + 1 < q_; ++e) {
      exp_[e] = x.idx;
      log_[x.idx] = e;
      x = mul_poly(x, gen);
    }
  }

  eta_.resize(q_);
  trace_.resize(q_);
  const std::uint64_t half = (q_ - 1) / 2;
  for (std::uint32_t a = 0; a < q_; ++a) {
    if (a == 0) {
      eta_[a] = 0;
    } else {
      eta_[a] = pow({a}, half) == one() ? 1 : -1;
    }
    FqElem frob{a};
    FqElem sum{0};
    for (std::uint32_t i = 0; i < ell_; ++i) {
      sum = add(sum, frob);
      frob = pow(frob, p_);
    }
    trace_[a] = sum.idx;
  }
}

FqElem FieldCtx::element(std::int64_t idx) const {
  if (idx < 0 || idx >= static_cast<std::int64_t>(q_)) {
    throw Error(Errc::InvalidElement,
                "index " + std::to_string(idx) + " outside [0, " + std::to_string(q_) + ")");
  }
  return {static_cast<std::uint32_t>(idx)};
}

FqElem FieldCtx::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> FieldCtx::coefficients(FqElem a) const {
  std::vector<std::uint32_t> c(ell_);
  for (std::uint32_t i = 0; i < ell_; ++i) c[i] = a.idx / pow_p_[i] % p_;
  return c;
}

FqElem FieldCtx::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != ell_) {
    throw Error(Errc::InvalidElement, "expected " + std::to_string(ell_) + " coefficients");
  }
  std::uint32_t idx = 0;
  for (std::uint32_t i = 0; i < ell_; ++i) {
    if (coeffs[i] >= p_) throw Error(Errc::InvalidElement, "coefficient out of range");
    idx += coeffs[i] * pow_p_[i];
  }
  return {idx};
}

FqElem FieldCtx::add_digits(FqElem a, FqElem b) const noexcept {
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < ell_; ++i) {
    const std::uint32_t s = a.idx / pow_p_[i] % p_ + b.idx / pow_p_[i] % p_;
    out += (s >= p_ ? s - p_ : s) * pow_p_[i];
  }
  return {out};
}

FqElem FieldCtx::mul_poly(FqElem a, FqElem b) const {
  Poly r = poly_mulmod(coefficients(a), coefficients(b), modulus_, p_);
  r.resize(ell_, 0);
  return from_coefficients(r);
}

FqElem FieldCtx::inv(FqElem a) const {
  if (a.idx == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (ell_ == 1) return {inv_mod_p(a.idx, p_)};
  const std::uint32_t l = log_[a.idx];
  return {exp_[l == 0 ? 0 : q_ - 1 - l]};
}

FqElem FieldCtx::pow(FqElem a, std::uint64_t e) const noexcept {
  FqElem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace fqdist
