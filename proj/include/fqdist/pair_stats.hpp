#pragma once

// Ordered-pair statistics of a point set A in F_q^d:
//   SQ(A) = #{(x, y) in A x A : eta(||x - y||) = 1},
//   ZR(A) = #{(x, y) in A x A : ||x - y|| = 0},
// counted directly and predicted exactly from the spectral masses.

#include <cstdint>

#include "fqdist/characters.hpp"
#include "fqdist/geometry.hpp"
#include "fqdist/rational.hpp"
#include "fqdist/spectral.hpp"

namespace fqdist {

inline constexpr std::uint64_t kMaxPairs = 1'000'000'000;

struct PairCounts {
  std::uint64_t sq = 0;
  std::uint64_t zr = 0;
  std::uint64_t nonsq = 0;

  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

// Throws EmptySet, TooManyPairs.
PairCounts count_pairs(const PointSet& a, unsigned threads = 0);

// E = A x F_q in F_q^{d+1}.
PointSet product_lift(const PointSet& a);

struct ConeLift {
  std::uint64_t cone_incidences = 0;  // #{(x~, y~) in E^2 : x~ - y~ in C_{d+1}}
  std::uint64_t predicted = 0;        // q (2 SQ + ZR)
  bool holds() const { return cone_incidences == predicted; }
};

// Brute force over the lifted set. Throws TooManyPairs.
ConeLift cone_lift_check(const PointSet& a, const PairCounts& counts);

struct SpectralPrediction {
  Rat sq_plus_half_zr;
  Rat half_zr;
  PairCounts counts;
};

// Exact SQ and ZR from (Omega^0, Omega^+, Omega^-), using the Gauss-sum sign
// table. Throws UnsupportedDimension for d = 1 and NonIntegralPrediction if a
// predicted count is not a nonnegative integer.
SpectralPrediction predict_from_spectrum(const PointSet& a, const SpectralMass& mass);

// |numeric RHS - (SQ + ZR/2)| for
//   SQ + ZR/2 = |A|^2/2 + (q^{d-1} eta^d(-1) G_1^{d+1} / 2)
//               sum_m sum_{s != 0} eta^{d+1}(s) chi(s ||m||) |A^(m)|^2.
// Throws EnumerationTooLarge when q^d > 10^5.
double master_formula_residual(const Characters& ch, const PointSet& a, const PairCounts& counts);

}  // namespace fqdist
