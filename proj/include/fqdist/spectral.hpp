#pragma once

// Fourier transforms of indicator functions on F_q^d and the spectral masses
//   Omega^0 = sum_{||m|| = 0} |A^(m)|^2,
//   Omega^+ = sum_{eta(||m||) = 1} |A^(m)|^2,
//   Omega^- = sum_{eta(||m||) = -1} |A^(m)|^2,
// with A^(m) = q^{-d} sum_{x in A} chi(-m.x).
//
// Two independent routes exist: a numeric DFT, and an exact route through
// integer kernels k_S(v) = sum_{m in S} chi(m.v), which satisfy
//   sum_{m in S} |A^(m)|^2 = q^{-2d} sum_{x,y in A} k_S(y - x).

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fqdist/characters.hpp"
#include "fqdist/geometry.hpp"
#include "fqdist/rational.hpp"

namespace fqdist {

// Cap on q^d for transforms and kernels.
inline constexpr std::uint64_t kMaxSpectralSpace = 1'000'000;

enum class FrequencyClass { Zero = 0, Plus = 1, Minus = 2 };

std::string_view frequency_class_name(FrequencyClass c);

// Class of a frequency by eta(||m||).
FrequencyClass classify_frequency(const FieldCtx& field, std::span<const FqElem> m);

struct SpectralMass {
  Rat omega0;
  Rat omega_plus;
  Rat omega_minus;

  Rat total() const { return omega0 + omega_plus + omega_minus; }
};

struct NumericMass {
  double omega0 = 0;
  double omega_plus = 0;
  double omega_minus = 0;
};

class KernelTable {
 public:
  KernelTable(FieldPtr field, int d, std::array<std::vector<std::int64_t>, 3> values);

  const FieldCtx& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  int dim() const noexcept { return d_; }
  std::uint64_t size() const noexcept { return values_[0].size(); }

  std::int64_t at(FrequencyClass c, std::uint64_t v) const {
    return values_[static_cast<int>(c)][v];
  }
  std::span<const std::int64_t> values(FrequencyClass c) const {
    return values_[static_cast<int>(c)];
  }

 private:
  FieldPtr field_;
  int d_;
  std::array<std::vector<std::int64_t>, 3> values_;
};

// A^(m) for every packed frequency m. Throws EnumerationTooLarge.
std::vector<Cpx> dft_indicator(const Characters& ch, const PointSet& a);
// Transform of the indicator of `a` at one frequency.
Cpx dft_at(const Characters& ch, const PointSet& a, std::span<const FqElem> m);

NumericMass numeric_masses(const FieldCtx& field, int d, std::span<const Cpx> transform);

// Exact kernels via scaling classes {c m : c != 0}: a class contributes q - 1
// when m.v = 0 and -1 otherwise; the origin contributes 1 to the zero class.
KernelTable build_kernels(const FieldPtr& field, int d, unsigned threads = 0);

// Binary cache: see docs/kernel_cache.md. One file per frequency class.
void save_kernels(const KernelTable& table, const std::filesystem::path& dir);
std::optional<KernelTable> load_kernels(const FieldPtr& field, int d,
                                        const std::filesystem::path& dir);
std::filesystem::path kernel_cache_file(const FieldCtx& field, int d, FrequencyClass c,
                                        const std::filesystem::path& dir);
// Uses `dir` when given, else $FQDIST_KERNEL_CACHE when set, else builds only.
KernelTable load_or_build_kernels(const FieldPtr& field, int d,
                                  std::optional<std::filesystem::path> dir = std::nullopt,
                                  unsigned threads = 0);

// Throws EmptySet or DimensionMismatch.
SpectralMass spectral_masses_exact(const PointSet& a, const KernelTable& kernels,
                                   unsigned threads = 0);

// Closed-form transform of the cone C_n at m.
Cpx cone_fourier_formula(const Characters& ch, int n, std::span<const FqElem> m);
// Closed-form transform of S_0 in F_q^d at m; d >= 2.
Cpx sphere0_fourier_formula(const Characters& ch, int d, std::span<const FqElem> m);

struct CountingLemmaResult {
  std::uint64_t direct = 0;
  double fourier = 0;
  double fourier_imag = 0;
};

// Number of (x, y) in E x E with x - y in V, counted directly and as
// q^{2n} sum_m V^(m) |E^(m)|^2.
CountingLemmaResult verify_counting_lemma(const Characters& ch, const PointSet& e,
                                          const PointSet& v);

// Brute-force count of pairs whose difference lies in V.
std::uint64_t count_difference_pairs(const PointSet& e, const PointSet& v);

struct Omega0Bound {
  Rat omega0;
  Rat plancherel_bound;  // q^{-d} |A|
  Rat decay_bound;       // q^{-d-1} |A| + q^{-(3d+1)/2} |A|^2
  Rat trivial_lower;     // q^{-2d} |A|^2
  bool holds = false;
  Rat slack;  // min of the two bounds minus omega0
};

// Upper bounds on Omega^0 for odd d >= 3. Throws WrongParity otherwise.
Omega0Bound omega0_bound_check(const PointSet& a, const SpectralMass& mass);

}  // namespace fqdist
