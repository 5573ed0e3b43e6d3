#include "fqdist/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>

#include "fqdist/error.hpp"
#include "fqdist/parallel.hpp"

namespace fqdist {

namespace {

constexpr char kKernelMagic[4] = {'F', 'Q', 'D', 'K'};
constexpr std::uint32_t kKernelVersion = 1;

void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

bool get_u32(std::istream& in, std::uint32_t& v) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
  v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{b[i]} << (8 * i);
  return true;
}

bool get_u64(std::istream& in, std::uint64_t& v) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) return false;
  v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{b[i]} << (8 * i);
  return true;
}

// Powers of a complex number by repeated multiplication.
Cpx cpow(Cpx base, int n) {
  Cpx r = 1.0;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

// Transform of a set at m: q^{-d} sum_{x} chi(-m.x), grouped by the value m.x.
Cpx transform_at(const Characters& ch, std::span<const FqElem> coords, std::size_t count,
                 std::span<const FqElem> m, std::vector<std::uint64_t>& hist) {
  const FieldCtx& f = ch.field();
  const std::size_t d = m.size();
  std::fill(hist.begin(), hist.end(), 0);
  for (std::size_t i = 0; i < count; ++i) {
    FqElem t = f.zero();
    for (std::size_t k = 0; k < d; ++k) t = f.add(t, f.mul(m[k], coords[i * d + k]));
    ++hist[t.idx];
  }
  Cpx sum = 0.0;
  for (std::uint32_t t = 0; t < f.q(); ++t) {
    if (hist[t] != 0) sum += static_cast<double>(hist[t]) * ch.chi(f.neg({t}));
  }
  return sum / std::pow(static_cast<double>(f.q()), static_cast<double>(d));
}

}  // namespace

std::string_view frequency_class_name(FrequencyClass c) {
  switch (c) {
    case FrequencyClass::Zero: return "zero";
    case FrequencyClass::Plus: return "plus";
    case FrequencyClass::Minus: return "minus";
  }
  return "unknown";
}

FrequencyClass classify_frequency(const FieldCtx& field, std::span<const FqElem> m) {
  switch (field.eta(norm(field, m))) {
    case 0: return FrequencyClass::Zero;
    case 1: return FrequencyClass::Plus;
    default: return FrequencyClass::Minus;
  }
}

KernelTable::KernelTable(FieldPtr field, int d, std::array<std::vector<std::int64_t>, 3> values)
    : field_(std::move(field)), d_(d), values_(std::move(values)) {
  const std::uint64_t n = space_size(*field_, d_, kMaxSpectralSpace);
  for (const auto& v : values_) {
    if (v.size() != n) throw Error(Errc::DimensionMismatch, "kernel table has wrong length");
  }
}

std::vector<Cpx> dft_indicator(const Characters& ch, const PointSet& a) {
  const FieldCtx& f = ch.field();
  const int d = a.dim();
  const std::uint64_t n = space_size(f, d, kMaxSpectralSpace);
  const std::vector<FqElem> coords = a.coordinates();
  std::vector<Cpx> out(n);
  std::vector<std::uint64_t> hist(f.q());
  for_each_vector(f, d, [&](std::uint64_t idx, std::span<const FqElem> m) {
    out[idx] = transform_at(ch, coords, a.size(), m, hist);
  });
  return out;
}

Cpx dft_at(const Characters& ch, const PointSet& a, std::span<const FqElem> m) {
  if (static_cast<int>(m.size()) != a.dim()) {
    throw Error(Errc::DimensionMismatch, "frequency has wrong dimension");
  }
  std::vector<std::uint64_t> hist(ch.field().q());
  return transform_at(ch, a.coordinates(), a.size(), m, hist);
}

NumericMass numeric_masses(const FieldCtx& field, int d, std::span<const Cpx> transform) {
  NumericMass out;
  for_each_vector(field, d, [&](std::uint64_t idx, std::span<const FqElem> m) {
    const double w = std::norm(transform[idx]);
    switch (classify_frequency(field, m)) {
      case FrequencyClass::Zero: out.omega0 += w; break;
      case FrequencyClass::Plus: out.omega_plus += w; break;
      case FrequencyClass::Minus: out.omega_minus += w; break;
    }
  });
  return out;
}

KernelTable build_kernels(const FieldPtr& field, int d, unsigned threads) {
  const FieldCtx& f = *field;
  const std::uint64_t n = space_size(f, d, kMaxSpectralSpace);
  const auto ud = static_cast<std::size_t>(d);

  // One representative per scaling class: first nonzero coordinate equal to 1.
  std::vector<FqElem> reps;
  std::vector<int> rep_class;
  for_each_vector(f, d, [&](std::uint64_t, std::span<const FqElem> m) {
    auto lead = std::find_if(m.begin(), m.end(), [](FqElem c) { return c.idx != 0; });
    if (lead == m.end() || lead->idx != 1) return;
    reps.insert(reps.end(), m.begin(), m.end());
    rep_class.push_back(static_cast<int>(classify_frequency(f, m)));
  });
  const std::size_t num_reps = rep_class.size();
  const auto orth = static_cast<std::int64_t>(f.q()) - 1;

  std::array<std::vector<std::int64_t>, 3> values;
  for (auto& v : values) v.assign(n, 0);
  parallel_blocks(n, threads, [&](std::size_t begin, std::size_t end, unsigned) {
    VecFq v(ud);
    for (std::size_t idx = begin; idx < end; ++idx) {
      decode_vector(f, idx, v);
      std::int64_t acc[3] = {1, 0, 0};  // origin lies in S_0
      for (std::size_t r = 0; r < num_reps; ++r) {
        const FqElem* m = &reps[r * ud];
        FqElem t = f.zero();
        for (std::size_t k = 0; k < ud; ++k) t = f.add(t, f.mul(m[k], v[k]));
        acc[rep_class[r]] += t.idx == 0 ? orth : -1;
      }
      for (int c = 0; c < 3; ++c) values[c][idx] = acc[c];
    }
  });
  return KernelTable(field, d, std::move(values));
}

std::filesystem::path kernel_cache_file(const FieldCtx& field, int d, FrequencyClass c,
                                        const std::filesystem::path& dir) {
  std::string name = "kernel_p" + std::to_string(field.p()) + "_l" + std::to_string(field.ell()) +
                     "_d" + std::to_string(d) + "_m";
  for (std::size_t i = 0; i < field.modulus().size(); ++i) {
    if (i > 0) name += '-';
    name += std::to_string(field.modulus()[i]);
  }
  name += "_" + std::string(frequency_class_name(c)) + ".bin";
  return dir / name;
}

void save_kernels(const KernelTable& table, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const FieldCtx& f = table.field();
  for (int c = 0; c < 3; ++c) {
    const auto cls = static_cast<FrequencyClass>(c);
    const auto path = kernel_cache_file(f, table.dim(), cls, dir);
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error(Errc::IoError, "cannot write " + tmp.string());
      out.write(kKernelMagic, 4);
      put_u32(out, kKernelVersion);
      put_u32(out, f.p());
      put_u32(out, f.ell());
      put_u32(out, static_cast<std::uint32_t>(table.dim()));
      put_u32(out, static_cast<std::uint32_t>(f.modulus().size()));
      for (std::uint32_t coeff : f.modulus()) put_u32(out, coeff);
      put_u32(out, static_cast<std::uint32_t>(c));
      put_u64(out, table.size());
      for (std::int64_t v : table.values(cls)) put_u64(out, static_cast<std::uint64_t>(v));
      if (!out) throw Error(Errc::IoError, "short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  }
}

std::optional<KernelTable> load_kernels(const FieldPtr& field, int d,
                                        const std::filesystem::path& dir) {
  const FieldCtx& f = *field;
  const std::uint64_t n = space_size(f, d, kMaxSpectralSpace);
  std::array<std::vector<std::int64_t>, 3> values;
  for (int c = 0; c < 3; ++c) {
    std::ifstream in(kernel_cache_file(f, d, static_cast<FrequencyClass>(c), dir),
                     std::ios::binary);
    if (!in) return std::nullopt;
    char magic[4];
    std::uint32_t version, p, ell, dim, mod_len, tag;
    std::uint64_t count;
    if (!in.read(magic, 4) || !std::equal(magic, magic + 4, kKernelMagic)) return std::nullopt;
    if (!get_u32(in, version) || version != kKernelVersion) return std::nullopt;
    if (!get_u32(in, p) || !get_u32(in, ell) || !get_u32(in, dim) || !get_u32(in, mod_len)) {
      return std::nullopt;
    }
    if (p != f.p() || ell != f.ell() || dim != static_cast<std::uint32_t>(d) ||
        mod_len != f.modulus().size()) {
      return std::nullopt;
    }
    for (std::uint32_t i = 0; i < mod_len; ++i) {
      std::uint32_t coeff;
      if (!get_u32(in, coeff) || coeff != f.modulus()[i]) return std::nullopt;
    }
    if (!get_u32(in, tag) || tag != static_cast<std::uint32_t>(c)) return std::nullopt;
    if (!get_u64(in, count) || count != n) return std::nullopt;
    values[c].resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      std::uint64_t raw;
      if (!get_u64(in, raw)) return std::nullopt;
      values[c][i] = static_cast<std::int64_t>(raw);
    }
  }
  return KernelTable(field, d, std::move(values));
}

KernelTable load_or_build_kernels(const FieldPtr& field, int d,
                                  std::optional<std::filesystem::path> dir, unsigned threads) {
  if (!dir) {
    if (const char* env = std::getenv("FQDIST_KERNEL_CACHE"); env != nullptr && *env != '\0') {
      dir = env;
    }
  }
  if (dir) {
    if (auto cached = load_kernels(field, d, *dir)) return std::move(*cached);
  }
  KernelTable built = build_kernels(field, d, threads);
  if (dir) save_kernels(built, *dir);
  return built;
}

SpectralMass spectral_masses_exact(const PointSet& a, const KernelTable& kernels,
                                   unsigned threads) {
  if (a.empty()) throw Error(Errc::EmptySet, "spectral masses of an empty set");
  if (a.dim() != kernels.dim() || a.field().q() != kernels.field().q()) {
    throw Error(Errc::DimensionMismatch, "kernel table does not match the point set");
  }
  const FieldCtx& f = a.field();
  const auto d = static_cast<std::size_t>(a.dim());
  const std::vector<FqElem> coords = a.coordinates();
  const std::size_t size = a.size();

  struct Partial {
    std::int64_t sums[3] = {0, 0, 0};
  };
  std::vector<Partial> partials(resolve_threads(threads));
  parallel_blocks(size, threads, [&](std::size_t begin, std::size_t end, unsigned worker) {
    Partial& out = partials[worker];
    VecFq diff(d);
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        for (std::size_t k = 0; k < d; ++k) diff[k] = f.sub(coords[j * d + k], coords[i * d + k]);
        const std::uint64_t v = encode_vector(f, diff);
        for (int c = 0; c < 3; ++c) out.sums[c] += kernels.at(static_cast<FrequencyClass>(c), v);
      }
    }
  });
  std::int64_t sums[3] = {0, 0, 0};
  for (const Partial& p : partials) {
    for (int c = 0; c < 3; ++c) sums[c] += p.sums[c];
  }
  const Rat scale = rat_pow(f.q(), -2 * a.dim());
  return SpectralMass{Rat(sums[0]) * scale, Rat(sums[1]) * scale, Rat(sums[2]) * scale};
}

Cpx cone_fourier_formula(const Characters& ch, int n, std::span<const FqElem> m) {
  if (n < 2) throw Error(Errc::DimensionTooSmall, "cone needs n >= 2");
  if (static_cast<int>(m.size()) != n) {
    throw Error(Errc::DimensionMismatch, "frequency has wrong dimension");
  }
  const FieldCtx& f = ch.field();
  const double q = f.q();
  const bool origin = std::all_of(m.begin(), m.end(), [](FqElem c) { return c.idx == 0; });
  const FqElem cn = cone_norm(f, m);
  const FqElem minus_four = f.neg(f.from_int(4));
  Cpx inner = 0.0;
  for (std::uint32_t s = 1; s < f.q(); ++s) {
    const int weight = n % 2 == 0 ? 1 : f.eta({s});
    inner += static_cast<double>(weight) * ch.chi(f.div(cn, f.mul(minus_four, {s})));
  }
  const Cpx scale = static_cast<double>(f.eta_minus_one()) * cpow(gauss_closed(f), n) /
                    std::pow(q, static_cast<double>(n + 1));
  return (origin ? 1.0 / q : 0.0) + scale * inner;
}

Cpx sphere0_fourier_formula(const Characters& ch, int d, std::span<const FqElem> m) {
  if (d < 2) throw Error(Errc::DimensionTooSmall, "sphere transform needs d >= 2");
  if (static_cast<int>(m.size()) != d) {
    throw Error(Errc::DimensionMismatch, "frequency has wrong dimension");
  }
  const FieldCtx& f = ch.field();
  const double q = f.q();
  const bool origin = std::all_of(m.begin(), m.end(), [](FqElem c) { return c.idx == 0; });
  const FqElem nm = norm(f, m);
  const FqElem four = f.from_int(4);
  Cpx inner = 0.0;
  for (std::uint32_t s = 1; s < f.q(); ++s) {
    const int weight = d % 2 == 0 ? 1 : f.eta({s});
    inner += static_cast<double>(weight) * ch.chi(f.div(nm, f.mul(four, {s})));
  }
  const int eta_d = d % 2 == 0 ? 1 : f.eta_minus_one();
  const Cpx scale = static_cast<double>(eta_d) * cpow(gauss_closed(f), d) /
                    std::pow(q, static_cast<double>(d + 1));
  return (origin ? 1.0 / q : 0.0) + scale * inner;
}

std::uint64_t count_difference_pairs(const PointSet& e, const PointSet& v) {
  if (e.dim() != v.dim() || e.field().q() != v.field().q()) {
    throw Error(Errc::DimensionMismatch, "sets live in different spaces");
  }
  const FieldCtx& f = e.field();
  const auto n = static_cast<std::size_t>(e.dim());
  const std::uint64_t total = space_size(f, e.dim());
  std::vector<char> member(total, 0);
  for (std::uint64_t idx : v.indices()) member[idx] = 1;
  const std::vector<FqElem> coords = e.coordinates();
  std::uint64_t count = 0;
  VecFq diff(n);
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      for (std::size_t k = 0; k < n; ++k) diff[k] = f.sub(coords[i * n + k], coords[j * n + k]);
      count += member[encode_vector(f, diff)];
    }
  }
  return count;
}

CountingLemmaResult verify_counting_lemma(const Characters& ch, const PointSet& e,
                                          const PointSet& v) {
  if (e.dim() != v.dim() || e.field().q() != v.field().q()) {
    throw Error(Errc::DimensionMismatch, "sets live in different spaces");
  }
  const FieldCtx& f = ch.field();
  CountingLemmaResult out;
  out.direct = count_difference_pairs(e, v);
  const std::vector<Cpx> ve = dft_indicator(ch, v);
  const std::vector<Cpx> ee = dft_indicator(ch, e);
  Cpx sum = 0.0;
  for (std::size_t m = 0; m < ve.size(); ++m) sum += ve[m] * std::norm(ee[m]);
  sum *= std::pow(static_cast<double>(f.q()), 2.0 * e.dim());
  out.fourier = sum.real();
  out.fourier_imag = sum.imag();
  return out;
}

Omega0Bound omega0_bound_check(const PointSet& a, const SpectralMass& mass) {
  const int d = a.dim();
  if (d < 3 || d % 2 == 0) {
    throw Error(Errc::WrongParity, "Omega^0 decay bound needs odd d >= 3");
  }
  const std::int64_t q = a.field().q();
  const Rat size(static_cast<std::int64_t>(a.size()));
  Omega0Bound out;
  out.omega0 = mass.omega0;
  out.plancherel_bound = rat_pow(q, -d) * size;
  out.decay_bound = rat_pow(q, -d - 1) * size + rat_pow(q, -(3 * d + 1) / 2) * size * size;
  out.trivial_lower = rat_pow(q, -2 * d) * size * size;
  const Rat& cap = out.plancherel_bound < out.decay_bound ? out.plancherel_bound : out.decay_bound;
  out.slack = cap - out.omega0;
  out.holds = out.slack >= 0;
  return out;
}

}  // namespace fqdist
