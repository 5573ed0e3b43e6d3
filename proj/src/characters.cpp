#include "fqdist/characters.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fqdist/error.hpp"

namespace fqdist {

Characters::Characters(FieldPtr field) : field_(std::move(field)) {
  const std::uint32_t p = field_->p();
  std::vector<Cpx> roots(p);
  for (std::uint32_t k = 0; k < p; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / p;
    roots[k] = {std::cos(angle), std::sin(angle)};
  }
  chi_.resize(field_->q());
  for (std::uint32_t a = 0; a < field_->q(); ++a) chi_[a] = roots[field_->trace({a})];
}

Cpx gauss_direct(const Characters& ch, FqElem a) {
  if (a.idx == 0) throw Error(Errc::ZeroParameter, "Gauss sum parameter must be nonzero");
  const FieldCtx& f = ch.field();
  Cpx sum = 0.0;
  for (std::uint32_t s = 1; s < f.q(); ++s) {
    sum += static_cast<double>(f.eta({s})) * ch.chi(f.mul(a, {s}));
  }
  return sum;
}

Cpx gauss_closed(const FieldCtx& field) {
  const double root_q = std::sqrt(static_cast<double>(field.q()));
  const double sign = (field.ell() - 1) % 2 == 0 ? 1.0 : -1.0;
  if (field.p() % 4 == 1) return {sign * root_q, 0.0};
  // i^ell by ell mod 4.
  static constexpr int kRe[4] = {1, 0, -1, 0};
  static constexpr int kIm[4] = {0, 1, 0, -1};
  const std::uint32_t r = field.ell() % 4;
  return {sign * kRe[r] * root_q, sign * kIm[r] * root_q};
}

GaussSignPair gauss_signs(int n, const FieldCtx& field) {
  if (n < 2 || n % 2 != 0) {
    throw Error(Errc::OddExponent, "sign table needs an even exponent >= 2, got " +
                                       std::to_string(n));
  }
  const bool q3 = field.q() % 4 == 3;
  GaussSignPair out;
  if (n % 4 == 0) {
    out.sigma = 1;
    out.tau = q3 ? -1 : 1;
  } else {
    out.sigma = q3 ? -1 : 1;
    out.tau = 1;
  }
  return out;
}

double completing_square_residual(const Characters& ch, FqElem a, FqElem b) {
  if (a.idx == 0) throw Error(Errc::ZeroParameter, "quadratic coefficient must be nonzero");
  const FieldCtx& f = ch.field();
  Cpx lhs = 0.0;
  for (std::uint32_t s = 0; s < f.q(); ++s) {
    const FqElem x{s};
    lhs += ch.chi(f.add(f.mul(a, f.sq(x)), f.mul(b, x)));
  }
  const FqElem shift = f.div(f.sq(b), f.neg(f.mul(f.from_int(4), a)));
  const Cpx rhs = static_cast<double>(f.eta(a)) * gauss_closed(f) * ch.chi(shift);
  return std::abs(lhs - rhs);
}

}  // namespace fqdist
