#pragma once

// Vectors in F_q^d, the distance form ||x|| = x_1^2 + ... + x_d^2, the cone
// norm x_1^2 + ... + x_{n-1}^2 - x_n^2 and point sets.
//
// A vector is packed as idx = sum_i x_i q^{d-1-i}, so increasing index order is
// lexicographic order on coordinates.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fqdist/field.hpp"

namespace fqdist {

using VecFq = std::vector<FqElem>;

// Enumeration cap for explicit varieties and full-space scans.
inline constexpr std::uint64_t kMaxEnumeration = 10'000'000;

// q^d, throwing EnumerationTooLarge above `cap` and DimensionTooSmall for d < 1.
std::uint64_t space_size(const FieldCtx& field, int d, std::uint64_t cap = kMaxEnumeration);

std::uint64_t encode_vector(const FieldCtx& field, std::span<const FqElem> v);
void decode_vector(const FieldCtx& field, std::uint64_t idx, std::span<FqElem> out);
VecFq decode_vector(const FieldCtx& field, int d, std::uint64_t idx);

FqElem dot(const FieldCtx& field, std::span<const FqElem> a, std::span<const FqElem> b);
FqElem norm(const FieldCtx& field, std::span<const FqElem> v);
// Throws DimensionTooSmall for length < 2.
FqElem cone_norm(const FieldCtx& field, std::span<const FqElem> x);

// Calls fn(index, coords) for every vector of F_q^d in lexicographic order.
void for_each_vector(const FieldCtx& field, int d,
                     const std::function<void(std::uint64_t, std::span<const FqElem>)>& fn);

class PointSet {
 public:
  PointSet(FieldPtr field, int d, std::vector<std::uint64_t> indices);
  PointSet(FieldPtr field, int d, const std::vector<VecFq>& points);

  const FieldCtx& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  int dim() const noexcept { return d_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  // Sorted, duplicate-free packed indices.
  std::span<const std::uint64_t> indices() const noexcept { return points_; }
  VecFq point(std::size_t i) const { return decode_vector(*field_, d_, points_[i]); }
  bool contains(std::uint64_t idx) const;

  // Row-major |A| x d coordinate matrix.
  std::vector<FqElem> coordinates() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.d_ == b.d_ && a.field_->q() == b.field_->q() && a.points_ == b.points_;
  }

 private:
  FieldPtr field_;
  int d_;
  std::vector<std::uint64_t> points_;
};

PointSet translate(const PointSet& a, std::span<const FqElem> t);

// S_0 = {x in F_q^d : ||x|| = 0}.
PointSet enumerate_sphere_zero(const FieldPtr& field, int d);
// C_n = {x in F_q^n : ||x||_{C_n} = 0}.
PointSet enumerate_cone(const FieldPtr& field, int n);

// Delta(A) as a sorted list. Throws EmptySet.
std::vector<FqElem> distance_set(const PointSet& a);
// Delta_x(A) = {||x - a|| : a in A}. Throws EmptySet.
std::vector<FqElem> pinned_distance_set(std::span<const FqElem> x, const PointSet& a);

}  // namespace fqdist
