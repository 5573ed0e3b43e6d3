#pragma once

// Deterministic point-set generators and square-distance-set search.
//
// Randomness comes from std::mt19937_64 (its output sequence is fixed by the
// C++ standard) with rejection-sampled bounded draws, so a seed reproduces the
// same set on every platform.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "fqdist/geometry.hpp"
#include "fqdist/rational.hpp"

namespace fqdist {

// Uniform integer in [0, bound), bound > 0.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// First k entries of a seeded Fisher-Yates shuffle of 0, ..., n-1.
std::vector<std::uint64_t> shuffled_prefix(std::uint64_t n, std::uint64_t k, std::uint64_t seed);

struct GenSpec {
  enum class Kind { Random, Line, Subspace, SphereSlice, FullSpace, ProductLift, File };

  Kind kind = Kind::FullSpace;
  std::uint64_t size = 0;  // Random; SphereSlice (0 keeps the whole slice)
  std::uint64_t seed = 0;
  VecFq offset;               // Line, Subspace; empty means the origin
  std::vector<VecFq> basis;   // Line: one direction; Subspace: independent vectors
  FqElem radius{0};           // SphereSlice
  std::shared_ptr<const PointSet> source;  // ProductLift
  std::filesystem::path path;              // File
};

// Throws SizeTooLarge, InvalidBasis, DimensionMismatch, EnumerationTooLarge.
PointSet generate(const FieldPtr& field, int d, const GenSpec& spec);

// Greedy maximal square-distance set, best over restarts by (size, then
// lexicographically smallest index list). Restart r uses seed + r.
// Throws EnumerationTooLarge when q^d > 10^5, UnsupportedCase for d < 2.
PointSet greedy_square_distance_search(const FieldPtr& field, int d, std::uint64_t seed,
                                       int restarts, unsigned threads = 0);

struct ExhaustiveResult {
  std::uint64_t max_size = 0;
  bool exact = false;             // false only when the node budget ran out
  bool budget_exhausted = false;
  bool reached_cap = false;       // search stopped at the size bound
  bool full_enumeration = false;  // all subsets were enumerated
  std::uint64_t nodes = 0;
  Rat cap;
  std::optional<PointSet> witness;
};

inline constexpr std::uint64_t kExhaustiveNodeBudget = 100'000'000;

// Maximum square-distance-set size. Enumerates all subsets when q^d <= 16;
// otherwise branch and bound with the origin fixed and the size bound as a cap.
// Throws UnsupportedCase for d < 2.
ExhaustiveResult exhaustive_square_distance_max(const FieldPtr& field, int d,
                                                std::uint64_t node_budget = kExhaustiveNodeBudget);

}  // namespace fqdist
