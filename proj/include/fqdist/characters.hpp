#pragma once

// Additive character, Gauss sums and the Gauss-sum sign table.
//
// Complex values live only on the numeric cross-validation path. The exact
// pipeline consumes GaussSignPair, whose entries come from the (n mod 4,
// q mod 4) case table rather than from floating point.

#include <complex>
#include <vector>

#include "fqdist/field.hpp"

namespace fqdist {

using Cpx = std::complex<double>;

// Field plus a cached table chi(a) = exp(2 pi i Tr(a) / p).
class Characters {
 public:
  explicit Characters(FieldPtr field);

  const FieldCtx& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }

  Cpx chi(FqElem a) const noexcept { return chi_[a.idx]; }

 private:
  FieldPtr field_;
  std::vector<Cpx> chi_;
};

// G_a = sum_{s != 0} eta(s) chi(a s). Throws ZeroParameter for a = 0.
Cpx gauss_direct(const Characters& ch, FqElem a);

// Closed form of G_1 for q = p^ell: (-1)^{ell-1} sqrt(q) when p = 1 mod 4,
// (-1)^{ell-1} i^ell sqrt(q) when p = 3 mod 4.
Cpx gauss_closed(const FieldCtx& field);

// For even n: sigma = G_1^n / q^{n/2} and tau = eta(-1) G_1^n / q^{n/2}.
struct GaussSignPair {
  int sigma = 1;
  int tau = 1;

  friend bool operator==(const GaussSignPair&, const GaussSignPair&) = default;
};

// Throws OddExponent unless n is even and >= 2.
GaussSignPair gauss_signs(int n, const FieldCtx& field);

// |sum_s chi(a s^2 + b s) - eta(a) G_1 chi(b^2 / (-4a))|.
// Throws ZeroParameter for a = 0.
double completing_square_residual(const Characters& ch, FqElem a, FqElem b);

}  // namespace fqdist
