#include "fqdist/set_factory.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "fqdist/bounds.hpp"
#include "fqdist/error.hpp"
#include "fqdist/io.hpp"
#include "fqdist/parallel.hpp"

namespace fqdist {

namespace {

constexpr std::uint64_t kMaxGeneratedSpace = std::uint64_t{1} << 62;
constexpr std::uint64_t kMaxSearchSpace = 100'000;
constexpr std::uint64_t kMaxCliqueGraph = 4096;
constexpr std::uint64_t kFullEnumerationLimit = 16;

// Rank of a list of vectors over F_q by Gaussian elimination.
std::size_t rank_of(const FieldCtx& f, std::vector<VecFq> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [c](const VecFq& r) { return r[c].idx != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    const FqElem inv = f.inv(rows[rank][c]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].idx == 0) continue;
      const FqElem factor = f.mul(rows[r][c], inv);
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

void check_vector(const FieldCtx& f, int d, const VecFq& v) {
  if (static_cast<int>(v.size()) != d) {
    throw Error(Errc::DimensionMismatch, "generator vector has wrong dimension");
  }
  for (FqElem c : v) f.element(c.idx);
}

PointSet affine_span(const FieldPtr& field, int d, const VecFq& offset,
                     const std::vector<VecFq>& basis) {
  const FieldCtx& f = *field;
  VecFq base = offset.empty() ? VecFq(static_cast<std::size_t>(d), f.zero()) : offset;
  check_vector(f, d, base);
  for (const VecFq& b : basis) check_vector(f, d, b);
  if (basis.empty() || rank_of(f, basis) != basis.size()) {
    throw Error(Errc::InvalidBasis, "directions must be nonempty and linearly independent");
  }
  const auto k = static_cast<int>(basis.size());
  space_size(f, k);
  std::vector<std::uint64_t> out;
  VecFq point(static_cast<std::size_t>(d));
  for_each_vector(f, k, [&](std::uint64_t, std::span<const FqElem> t) {
    point = base;
    for (int i = 0; i < k; ++i) {
      for (int c = 0; c < d; ++c) point[c] = f.add(point[c], f.mul(t[i], basis[i][c]));
    }
    out.push_back(encode_vector(f, point));
  });
  return PointSet(field, d, std::move(out));
}

// Differences whose norm is a nonsquare, indexed by packed vector.
std::vector<char> nonsquare_table(const FieldCtx& f, int d) {
  std::vector<char> bad(space_size(f, d, kMaxSearchSpace), 0);
  for_each_vector(f, d, [&](std::uint64_t idx, std::span<const FqElem> v) {
    bad[idx] = f.eta(norm(f, v)) == -1;
  });
  return bad;
}

std::uint64_t diff_index(const FieldCtx& f, const FqElem* x, const FqElem* y, std::size_t d) {
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < d; ++k) idx = idx * f.q() + f.sub(x[k], y[k]).idx;
  return idx;
}

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (std::uint64_t w : b) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bits> adj, std::uint64_t cap, std::uint64_t budget)
      : adj_(std::move(adj)), cap_(cap), budget_(budget) {}

  void run(std::uint64_t root, Bits candidates) {
    clique_.push_back(root);
    expand(std::move(candidates));
  }

  std::uint64_t best() const { return best_.size(); }
  const std::vector<std::uint64_t>& witness() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }
  bool reached_cap() const { return reached_cap_; }

 private:
  void expand(Bits cand) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (clique_.size() > best_.size()) best_ = clique_;
    if (best_.size() >= cap_) {
      reached_cap_ = true;
      return;
    }
    for (std::size_t w = 0; w < cand.size(); ++w) {
      while (cand[w] != 0) {
        if (exhausted_ || reached_cap_) return;
        if (clique_.size() + popcount(cand) <= best_.size()) return;
        const auto bit = static_cast<std::size_t>(std::countr_zero(cand[w]));
        const std::uint64_t v = w * 64 + bit;
        cand[w] &= cand[w] - 1;
        Bits next(cand.size());
        for (std::size_t i = 0; i < cand.size(); ++i) next[i] = cand[i] & adj_[v][i];
        clique_.push_back(v);
        expand(std::move(next));
        clique_.pop_back();
      }
    }
  }

  std::vector<Bits> adj_;
  std::uint64_t cap_;
  std::uint64_t budget_;
  std::vector<std::uint64_t> clique_;
  std::vector<std::uint64_t> best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool reached_cap_ = false;
};

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

std::vector<std::uint64_t> shuffled_prefix(std::uint64_t n, std::uint64_t k, std::uint64_t seed) {
  if (k > n) throw Error(Errc::SizeTooLarge, "prefix longer than the sequence");
  std::mt19937_64 rng(seed);
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  auto at = [&](std::uint64_t i) {
    auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };
  std::vector<std::uint64_t> out;
  out.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t j = i + uniform_below(rng, n - i);
    const std::uint64_t vi = at(i);
    const std::uint64_t vj = at(j);
    moved[j] = vi;
    out.push_back(vj);
  }
  return out;
}

PointSet generate(const FieldPtr& field, int d, const GenSpec& spec) {
  const FieldCtx& f = *field;
  switch (spec.kind) {
    case GenSpec::Kind::FullSpace: {
      const std::uint64_t n = space_size(f, d);
      std::vector<std::uint64_t> all(n);
      for (std::uint64_t i = 0; i < n; ++i) all[i] = i;
      return PointSet(field, d, std::move(all));
    }
    case GenSpec::Kind::Random: {
      const std::uint64_t n = space_size(f, d, kMaxGeneratedSpace);
      if (spec.size > n) throw Error(Errc::SizeTooLarge, "requested more points than q^d");
      return PointSet(field, d, shuffled_prefix(n, spec.size, spec.seed));
    }
    case GenSpec::Kind::Line:
      if (spec.basis.size() != 1) {
        throw Error(Errc::InvalidBasis, "a line needs exactly one direction");
      }
      return affine_span(field, d, spec.offset, spec.basis);
    case GenSpec::Kind::Subspace:
      if (static_cast<int>(spec.basis.size()) > d) {
        throw Error(Errc::InvalidBasis, "more directions than the dimension");
      }
      return affine_span(field, d, spec.offset, spec.basis);
    case GenSpec::Kind::SphereSlice: {
      f.element(spec.radius.idx);
      std::vector<std::uint64_t> slice;
      space_size(f, d);
      for_each_vector(f, d, [&](std::uint64_t idx, std::span<const FqElem> v) {
        if (norm(f, v) == spec.radius) slice.push_back(idx);
      });
      if (spec.size == 0) return PointSet(field, d, std::move(slice));
      if (spec.size > slice.size()) {
        throw Error(Errc::SizeTooLarge, "sphere slice has fewer points than requested");
      }
      std::vector<std::uint64_t> picked;
      for (std::uint64_t pos : shuffled_prefix(slice.size(), spec.size, spec.seed)) {
        picked.push_back(slice[pos]);
      }
      return PointSet(field, d, std::move(picked));
    }
    case GenSpec::Kind::ProductLift: {
      if (!spec.source) throw Error(Errc::EmptySet, "product lift needs a source set");
      if (spec.source->dim() + 1 != d || spec.source->field().q() != f.q()) {
        throw Error(Errc::DimensionMismatch, "product lift output must have dimension d + 1");
      }
      std::vector<std::uint64_t> lifted;
      for (std::uint64_t idx : spec.source->indices()) {
        for (std::uint64_t s = 0; s < f.q(); ++s) lifted.push_back(idx * f.q() + s);
      }
      return PointSet(field, d, std::move(lifted));
    }
    case GenSpec::Kind::File: {
      PointSet loaded = read_point_set_file(spec.path);
      if (loaded.dim() != d || loaded.field().q() != f.q()) {
        throw Error(Errc::DimensionMismatch, "set file does not match the requested space");
      }
      return PointSet(field, d, std::vector<std::uint64_t>(loaded.indices().begin(),
                                                          loaded.indices().end()));
    }
  }
  throw Error(Errc::UnsupportedCase, "unknown generator kind");
}

PointSet greedy_square_distance_search(const FieldPtr& field, int d, std::uint64_t seed,
                                       int restarts, unsigned threads) {
  if (d < 2) throw Error(Errc::UnsupportedCase, "square-distance search needs d >= 2");
  const FieldCtx& f = *field;
  const std::vector<char> bad = nonsquare_table(f, d);
  const std::uint64_t n = bad.size();
  const auto ud = static_cast<std::size_t>(d);
  std::vector<FqElem> coords(n * ud);
  for (std::uint64_t i = 0; i < n; ++i) {
    decode_vector(f, i, std::span<FqElem>(coords).subspan(i * ud, ud));
  }

  const auto runs = static_cast<std::size_t>(std::max(restarts, 1));
  std::vector<std::vector<std::uint64_t>> results(runs);
  parallel_blocks(runs, threads, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t r = begin; r < end; ++r) {
      std::vector<std::uint64_t> chosen;
      for (std::uint64_t x : shuffled_prefix(n, n, seed + r)) {
        const bool ok = std::none_of(chosen.begin(), chosen.end(), [&](std::uint64_t y) {
          return bad[diff_index(f, &coords[x * ud], &coords[y * ud], ud)] != 0;
        });
        if (ok) chosen.push_back(x);
      }
      std::sort(chosen.begin(), chosen.end());
      results[r] = std::move(chosen);
    }
  });
  const auto best = std::min_element(results.begin(), results.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return PointSet(field, d, *best);
}

ExhaustiveResult exhaustive_square_distance_max(const FieldPtr& field, int d,
                                                std::uint64_t node_budget) {
  if (d < 2) throw Error(Errc::UnsupportedCase, "square-distance search needs d >= 2");
  const FieldCtx& f = *field;
  const std::uint64_t n = space_size(f, d, kMaxCliqueGraph);
  const std::vector<char> bad = nonsquare_table(f, d);
  const auto ud = static_cast<std::size_t>(d);
  std::vector<FqElem> coords(n * ud);
  for (std::uint64_t i = 0; i < n; ++i) {
    decode_vector(f, i, std::span<FqElem>(coords).subspan(i * ud, ud));
  }

  ExhaustiveResult out;
  out.cap = square_set_size_bound(d, f.q());

  if (n <= kFullEnumerationLimit) {
    std::vector<std::uint32_t> compat(n, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = 0; j < n; ++j) {
        if (!bad[diff_index(f, &coords[i * ud], &coords[j * ud], ud)]) compat[i] |= 1u << j;
      }
    }
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      ++out.nodes;
      bool ok = true;
      for (std::uint64_t i = 0; i < n && ok; ++i) {
        if ((mask >> i) & 1u) ok = (mask & ~compat[i]) == 0;
      }
      if (ok && std::popcount(mask) > std::popcount(best_mask)) best_mask = mask;
    }
    std::vector<std::uint64_t> members;
    for (std::uint64_t i = 0; i < n; ++i) {
      if ((best_mask >> i) & 1u) members.push_back(i);
    }
    out.max_size = members.size();
    out.exact = true;
    out.full_enumeration = true;
    out.witness = PointSet(field, d, std::move(members));
    return out;
  }

  const std::size_t words = (n + 63) / 64;
  std::vector<Bits> adj(n, Bits(words, 0));
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) {
      if (i != j && !bad[diff_index(f, &coords[i * ud], &coords[j * ud], ud)]) {
        adj[i][j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }
  // Translation invariance lets every square-distance set be moved onto the origin.
  const BigInt cap_floor = boost::multiprecision::numerator(out.cap) /
                           boost::multiprecision::denominator(out.cap);
  CliqueSearch search(adj, cap_floor.convert_to<std::uint64_t>(), node_budget);
  search.run(0, adj[0]);
  out.max_size = search.best();
  out.nodes = search.nodes();
  out.budget_exhausted = search.exhausted();
  out.reached_cap = search.reached_cap();
  out.exact = !out.budget_exhausted;
  out.witness = PointSet(field, d, search.witness());
  return out;
}

}  // namespace fqdist
