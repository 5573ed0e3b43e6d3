#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fqdist/characters.hpp"
#include "fqdist/error.hpp"
#include "fqdist/geometry.hpp"

using namespace fqdist;

namespace {

const double kTwoPi = 2 * std::numbers::pi;

// Odd prime powers up to 169.
std::vector<std::pair<int, int>> small_prime_powers(int limit) {
  std::vector<std::pair<int, int>> out;
  for (int p = 3; p <= limit; p += 2) {
    bool prime = true;
    for (int k = 3; k * k <= p; k += 2) prime = prime && p % k != 0;
    if (!prime) continue;
    int q = p;
    for (int ell = 1; q <= limit; ++ell, q *= p) out.push_back({p, ell});
  }
  return out;
}

// G_1 summed from its second expression, sum_s chi(s^2).
Cpx gauss_from_squares(const Characters& ch) {
  const FieldCtx& f = ch.field();
  Cpx sum = 0.0;
  for (std::uint32_t s = 0; s < f.q(); ++s) sum += ch.chi(f.sq({s}));
  return sum;
}

}  // namespace

TEST(AdditiveCharacter, Examples) {
  const Characters f5(FieldCtx::make(5, 1));
  EXPECT_NEAR(std::abs(f5.chi({0}) - Cpx(1, 0)), 0, 1e-15);
  Cpx sum = 0.0;
  for (std::uint32_t a = 0; a < 5; ++a) sum += f5.chi({a});
  EXPECT_LT(std::abs(sum), 1e-12);
  const Characters f9(FieldCtx::make(3, 2));
  EXPECT_NEAR(std::abs(f9.chi({3}) - Cpx(1, 0)), 0, 1e-15);
}

TEST(AdditiveCharacter, HomomorphismOnUnitCircle) {
  for (auto [p, ell] : small_prime_powers(81)) {
    const Characters ch(FieldCtx::make(p, ell));
    const FieldCtx& f = ch.field();
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      EXPECT_NEAR(std::abs(ch.chi({a})), 1.0, 1e-12);
      const Cpx expected = std::polar(1.0, kTwoPi * f.trace({a}) / p);
      EXPECT_LT(std::abs(ch.chi({a}) - expected), 1e-12);
      const std::uint32_t b = (7 * a + 2) % f.q();
      EXPECT_LT(std::abs(ch.chi(f.add({a}, {b})) - ch.chi({a}) * ch.chi({b})), 1e-12);
    }
  }
}

TEST(AdditiveCharacter, OrthogonalityOnVectors) {
  for (auto [p, ell] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const FieldPtr field = FieldCtx::make(p, ell);
    const Characters ch(field);
    for (int n = 1; n <= 3; ++n) {
      const double qn = std::pow(field->q(), n);
      for_each_vector(*field, n, [&](std::uint64_t, std::span<const FqElem> beta) {
        Cpx sum = 0.0;
        for_each_vector(*field, n, [&](std::uint64_t, std::span<const FqElem> alpha) {
          sum += ch.chi(dot(*field, beta, alpha));
        });
        const bool zero = std::all_of(beta.begin(), beta.end(), [](FqElem c) { return c.idx == 0; });
        EXPECT_LT(std::abs(sum - Cpx(zero ? qn : 0.0)), 1e-9 * qn);
      });
    }
  }
}

TEST(GaussSum, DirectExamples) {
  const Characters f3(FieldCtx::make(3, 1));
  EXPECT_LT(std::abs(gauss_direct(f3, {1}) - Cpx(0, std::sqrt(3.0))), 1e-12);
  const Characters f5(FieldCtx::make(5, 1));
  EXPECT_LT(std::abs(gauss_direct(f5, {1}) - Cpx(std::sqrt(5.0), 0)), 1e-12);
  EXPECT_LT(std::abs(gauss_direct(f5, {2}) - Cpx(-std::sqrt(5.0), 0)), 1e-12);
  EXPECT_THROW(gauss_direct(f5, {0}), Error);
}

TEST(GaussSum, ClosedExamples) {
  EXPECT_LT(std::abs(gauss_closed(*FieldCtx::make(3, 2)) - Cpx(3, 0)), 1e-12);
  EXPECT_LT(std::abs(gauss_closed(*FieldCtx::make(7, 1)) - Cpx(0, std::sqrt(7.0))), 1e-12);
  EXPECT_LT(std::abs(gauss_closed(*FieldCtx::make(13, 1)) - Cpx(std::sqrt(13.0), 0)), 1e-12);
}

TEST(GaussSum, ClosedFormAndMagnitudeUpTo169) {
  for (auto [p, ell] : small_prime_powers(169)) {
    const Characters ch(FieldCtx::make(p, ell));
    const FieldCtx& f = ch.field();
    const double root = std::sqrt(static_cast<double>(f.q()));
    const Cpx g1 = gauss_direct(ch, f.one());
    EXPECT_LT(std::abs(g1 - gauss_closed(f)), 1e-9 * root) << "q=" << f.q();
    EXPECT_LT(std::abs(g1 - gauss_from_squares(ch)), 1e-9 * root) << "q=" << f.q();
    for (std::uint32_t a = 1; a < f.q(); ++a) {
      const Cpx ga = gauss_direct(ch, {a});
      ASSERT_NEAR(std::abs(ga), root, 1e-9 * root);
      ASSERT_LT(std::abs(ga - static_cast<double>(f.eta({a})) * g1), 1e-9 * root);
    }
  }
}

TEST(GaussSigns, Examples) {
  EXPECT_EQ(gauss_signs(4, *FieldCtx::make(3, 1)).tau, -1);
  EXPECT_EQ(gauss_signs(2, *FieldCtx::make(3, 1)).sigma, -1);
  EXPECT_EQ(gauss_signs(4, *FieldCtx::make(5, 1)), (GaussSignPair{1, 1}));
  EXPECT_THROW(gauss_signs(3, *FieldCtx::make(5, 1)), Error);
  EXPECT_THROW(gauss_signs(0, *FieldCtx::make(5, 1)), Error);
}

TEST(GaussSigns, MatchNumericPowers) {
  for (auto [p, ell] : small_prime_powers(169)) {
    const Characters ch(FieldCtx::make(p, ell));
    const FieldCtx& f = ch.field();
    const Cpx g1 = gauss_direct(ch, f.one());
    Cpx power = 1.0;
    for (int n = 1; n <= 12; ++n) {
      power *= g1 / std::sqrt(static_cast<double>(f.q()));
      if (n % 2 == 1) continue;
      const GaussSignPair s = gauss_signs(n, f);
      EXPECT_LT(std::abs(power - Cpx(s.sigma)), 1e-9) << "q=" << f.q() << " n=" << n;
      EXPECT_LT(std::abs(static_cast<double>(f.eta_minus_one()) * power - Cpx(s.tau)), 1e-9);
    }
  }
}

TEST(CompletingSquare, Examples) {
  const Characters f3(FieldCtx::make(3, 1));
  EXPECT_LT(completing_square_residual(f3, {1}, {0}), 1e-12);
  const Characters f5(FieldCtx::make(5, 1));
  Cpx lhs = 0.0;
  for (std::uint32_t s = 0; s < 5; ++s) lhs += f5.chi({(s * s + s) % 5});
  EXPECT_LT(std::abs(lhs - Cpx(0.6910, 2.1266)), 1e-4);
  EXPECT_LT(std::abs(lhs - std::sqrt(5.0) * f5.chi({1})), 1e-12);
  EXPECT_LT(completing_square_residual(f5, {1}, {1}), 1e-12);
  EXPECT_THROW(completing_square_residual(f5, {0}, {1}), Error);
}

TEST(CompletingSquare, Exhaustive) {
  for (auto [p, ell] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {13, 1}, {5, 2}}) {
    const Characters ch(FieldCtx::make(p, ell));
    const FieldCtx& f = ch.field();
    const double tol = 1e-9 * std::sqrt(static_cast<double>(f.q()));
    int pairs = 0;
    for (std::uint32_t a = 1; a < f.q(); ++a) {
      for (std::uint32_t b = 0; b < f.q(); ++b) {
        ASSERT_LT(completing_square_residual(ch, {a}, {b}), tol);
        ++pairs;
      }
    }
    EXPECT_EQ(pairs, static_cast<int>((f.q() - 1) * f.q()));
  }
}
