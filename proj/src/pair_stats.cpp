#include "fqdist/pair_stats.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fqdist/error.hpp"
#include "fqdist/parallel.hpp"

namespace fqdist {

PairCounts count_pairs(const PointSet& a, unsigned threads) {
  if (a.empty()) throw Error(Errc::EmptySet, "pair counts of an empty set");
  const std::uint64_t n = a.size();
  if (n > kMaxPairs / n) {
    throw Error(Errc::TooManyPairs, std::to_string(n) + "^2 pairs exceeds 10^9");
  }
  const FieldCtx& f = a.field();
  const auto d = static_cast<std::size_t>(a.dim());
  const std::vector<FqElem> coords = a.coordinates();

  std::vector<PairCounts> partials(resolve_threads(threads));
  parallel_blocks(n, threads, [&](std::size_t begin, std::size_t end, unsigned worker) {
    PairCounts& out = partials[worker];
    for (std::size_t i = begin; i < end; ++i) {
      const FqElem* x = &coords[i * d];
      for (std::size_t j = 0; j < n; ++j) {
        const FqElem* y = &coords[j * d];
        FqElem s = f.zero();
        for (std::size_t k = 0; k < d; ++k) s = f.add(s, f.sq(f.sub(x[k], y[k])));
        switch (f.eta(s)) {
          case 0: ++out.zr; break;
          case 1: ++out.sq; break;
          default: ++out.nonsq; break;
        }
      }
    }
  });
  PairCounts total;
  for (const PairCounts& p : partials) {
    total.sq += p.sq;
    total.zr += p.zr;
    total.nonsq += p.nonsq;
  }
  return total;
}

PointSet product_lift(const PointSet& a) {
  const std::uint64_t q = a.field().q();
  std::vector<std::uint64_t> lifted;
  lifted.reserve(a.size() * q);
  for (std::uint64_t idx : a.indices()) {
    for (std::uint64_t s = 0; s < q; ++s) lifted.push_back(idx * q + s);
  }
  return PointSet(a.field_ptr(), a.dim() + 1, std::move(lifted));
}

ConeLift cone_lift_check(const PointSet& a, const PairCounts& counts) {
  const std::uint64_t lifted = a.size() * a.field().q();
  if (lifted > kMaxPairs / std::max<std::uint64_t>(lifted, 1)) {
    throw Error(Errc::TooManyPairs, "lifted pair count exceeds 10^9");
  }
  const PointSet e = product_lift(a);
  const PointSet cone = enumerate_cone(a.field_ptr(), a.dim() + 1);
  ConeLift out;
  out.cone_incidences = count_difference_pairs(e, cone);
  out.predicted = a.field().q() * (2 * counts.sq + counts.zr);
  return out;
}

SpectralPrediction predict_from_spectrum(const PointSet& a, const SpectralMass& mass) {
  const int d = a.dim();
  if (d < 2) {
    throw Error(Errc::UnsupportedDimension, "spectral prediction needs d >= 2");
  }
  const FieldCtx& f = a.field();
  const std::int64_t q = f.q();
  const Rat size(static_cast<std::int64_t>(a.size()));
  const Rat size_sq = size * size;
  const Rat half(1, 2);

  SpectralPrediction out;
  if (d % 2 == 1) {
    const int tau = gauss_signs(d + 1, f).tau;
    out.sq_plus_half_zr = size_sq * half + tau * rat_pow(q, (3 * d + 1) / 2) * mass.omega0 * half -
                          tau * rat_pow(q, (d - 1) / 2) * size * half;
    out.half_zr = size_sq / (2 * q) +
                  tau * rat_pow(q, (3 * d - 1) / 2) * (mass.omega_plus - mass.omega_minus) * half;
  } else {
    const int sigma_shift = gauss_signs(d + 2, f).sigma;
    const int sigma = gauss_signs(d, f).sigma;
    out.sq_plus_half_zr =
        size_sq * half +
        sigma_shift * rat_pow(q, 3 * d / 2) * (mass.omega_plus - mass.omega_minus) * half;
    out.half_zr = size_sq / (2 * q) + sigma * rat_pow(q, 3 * d / 2) * mass.omega0 * half -
                  sigma * rat_pow(q, (d - 2) / 2) * size * half;
  }

  const Rat zr = 2 * out.half_zr;
  const Rat sq = out.sq_plus_half_zr - out.half_zr;
  const Rat nonsq = size_sq - sq - zr;
  for (const Rat* v : {&zr, &sq, &nonsq}) {
    if (!is_integer(*v) || *v < 0) {
      throw Error(Errc::NonIntegralPrediction,
                  "predicted count " + to_string(*v) + " is not a nonnegative integer");
    }
  }
  out.counts.sq = sq.convert_to<std::uint64_t>();
  out.counts.zr = zr.convert_to<std::uint64_t>();
  out.counts.nonsq = nonsq.convert_to<std::uint64_t>();
  return out;
}

double master_formula_residual(const Characters& ch, const PointSet& a, const PairCounts& counts) {
  const FieldCtx& f = ch.field();
  const int d = a.dim();
  space_size(f, d, 100'000);
  const std::vector<Cpx> transform = dft_indicator(ch, a);

  // Inner sum over s depends on m only through ||m||.
  std::vector<Cpx> inner(f.q(), 0.0);
  for (std::uint32_t t = 0; t < f.q(); ++t) {
    for (std::uint32_t s = 1; s < f.q(); ++s) {
      const int weight = (d + 1) % 2 == 0 ? 1 : f.eta({s});
      inner[t] += static_cast<double>(weight) * ch.chi(f.mul({s}, {t}));
    }
  }
  Cpx sum = 0.0;
  for_each_vector(f, d, [&](std::uint64_t idx, std::span<const FqElem> m) {
    sum += inner[norm(f, m).idx] * std::norm(transform[idx]);
  });

  Cpx g_pow = 1.0;
  const Cpx g = gauss_closed(f);
  for (int i = 0; i < d + 1; ++i) g_pow *= g;
  const double eta_d = d % 2 == 0 ? 1.0 : f.eta_minus_one();
  const double size = static_cast<double>(a.size());
  const Cpx rhs = size * size / 2.0 +
                  std::pow(static_cast<double>(f.q()), d - 1) * eta_d * g_pow / 2.0 * sum;
  const double exact = static_cast<double>(counts.sq) + static_cast<double>(counts.zr) / 2.0;
  return std::abs(rhs - exact);
}

}  // namespace fqdist
