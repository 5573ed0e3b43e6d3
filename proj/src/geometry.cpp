#include "fqdist/geometry.hpp"

#include <algorithm>
#include <string>

#include "fqdist/error.hpp"

namespace fqdist {

namespace {

constexpr std::uint64_t kMaxPackedIndex = std::uint64_t{1} << 62;

}  // namespace

std::uint64_t space_size(const FieldCtx& field, int d, std::uint64_t cap) {
  if (d < 1) throw Error(Errc::DimensionTooSmall, "dimension must be >= 1");
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) {
    n *= field.q();
    if (n > cap) {
      throw Error(Errc::EnumerationTooLarge, std::to_string(field.q()) + "^" + std::to_string(d) +
                                                 " exceeds cap " + std::to_string(cap));
    }
  }
  return n;
}

std::uint64_t encode_vector(const FieldCtx& field, std::span<const FqElem> v) {
  std::uint64_t idx = 0;
  for (FqElem c : v) idx = idx * field.q() + c.idx;
  return idx;
}

void decode_vector(const FieldCtx& field, std::uint64_t idx, std::span<FqElem> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = {static_cast<std::uint32_t>(idx % field.q())};
    idx /= field.q();
  }
}

VecFq decode_vector(const FieldCtx& field, int d, std::uint64_t idx) {
  VecFq v(static_cast<std::size_t>(d));
  decode_vector(field, idx, v);
  return v;
}

FqElem dot(const FieldCtx& field, std::span<const FqElem> a, std::span<const FqElem> b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot product lengths differ");
  FqElem s = field.zero();
  for (std::size_t i = 0; i < a.size(); ++i) s = field.add(s, field.mul(a[i], b[i]));
  return s;
}

FqElem norm(const FieldCtx& field, std::span<const FqElem> v) {
  FqElem s = field.zero();
  for (FqElem c : v) s = field.add(s, field.sq(c));
  return s;
}

FqElem cone_norm(const FieldCtx& field, std::span<const FqElem> x) {
  if (x.size() < 2) throw Error(Errc::DimensionTooSmall, "cone norm needs n >= 2");
  return field.sub(norm(field, x.first(x.size() - 1)), field.sq(x.back()));
}

void for_each_vector(const FieldCtx& field, int d,
                     const std::function<void(std::uint64_t, std::span<const FqElem>)>& fn) {
  const std::uint64_t total = space_size(field, d, kMaxPackedIndex);
  VecFq v(static_cast<std::size_t>(d), field.zero());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    fn(idx, v);
    for (std::size_t i = v.size(); i-- > 0;) {
      if (++v[i].idx < field.q()) break;
      v[i].idx = 0;
    }
  }
}

PointSet::PointSet(FieldPtr field, int d, std::vector<std::uint64_t> indices)
    : field_(std::move(field)), d_(d), points_(std::move(indices)) {
  const std::uint64_t total = space_size(*field_, d_, kMaxPackedIndex);
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  if (!points_.empty() && points_.back() >= total) {
    throw Error(Errc::InvalidElement, "point index outside F_q^d");
  }
}

PointSet::PointSet(FieldPtr field, int d, const std::vector<VecFq>& points)
    : PointSet(field, d, [&] {
        std::vector<std::uint64_t> idx;
        idx.reserve(points.size());
        for (const VecFq& v : points) {
          if (static_cast<int>(v.size()) != d) {
            throw Error(Errc::DimensionMismatch, "point has wrong dimension");
          }
          for (FqElem c : v) field->element(c.idx);
          idx.push_back(encode_vector(*field, v));
        }
        return idx;
      }()) {}

bool PointSet::contains(std::uint64_t idx) const {
  return std::binary_search(points_.begin(), points_.end(), idx);
}

std::vector<FqElem> PointSet::coordinates() const {
  std::vector<FqElem> out(points_.size() * static_cast<std::size_t>(d_));
  for (std::size_t i = 0; i < points_.size(); ++i) {
    decode_vector(*field_, points_[i],
                  std::span<FqElem>(out).subspan(i * d_, static_cast<std::size_t>(d_)));
  }
  return out;
}

PointSet translate(const PointSet& a, std::span<const FqElem> t) {
  if (static_cast<int>(t.size()) != a.dim()) {
    throw Error(Errc::DimensionMismatch, "translation vector has wrong dimension");
  }
  const FieldCtx& f = a.field();
  std::vector<std::uint64_t> out;
  out.reserve(a.size());
  VecFq v(t.size());
  for (std::uint64_t idx : a.indices()) {
    decode_vector(f, idx, v);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], t[i]);
    out.push_back(encode_vector(f, v));
  }
  return PointSet(a.field_ptr(), a.dim(), std::move(out));
}

PointSet enumerate_sphere_zero(const FieldPtr& field, int d) {
  space_size(*field, d);
  std::vector<std::uint64_t> out;
  for_each_vector(*field, d, [&](std::uint64_t idx, std::span<const FqElem> v) {
    if (norm(*field, v).idx == 0) out.push_back(idx);
  });
  return PointSet(field, d, std::move(out));
}

PointSet enumerate_cone(const FieldPtr& field, int n) {
  if (n < 2) throw Error(Errc::DimensionTooSmall, "cone needs n >= 2");
  space_size(*field, n);
  std::vector<std::uint64_t> out;
  for_each_vector(*field, n, [&](std::uint64_t idx, std::span<const FqElem> v) {
    if (cone_norm(*field, v).idx == 0) out.push_back(idx);
  });
  return PointSet(field, n, std::move(out));
}

std::vector<FqElem> distance_set(const PointSet& a) {
  if (a.empty()) throw Error(Errc::EmptySet, "distance set of an empty set");
  const FieldCtx& f = a.field();
  const auto d = static_cast<std::size_t>(a.dim());
  const std::vector<FqElem> coords = a.coordinates();
  std::vector<char> seen(f.q(), 0);
  seen[0] = 1;
  std::uint32_t found = 1;
  for (std::size_t i = 0; i < a.size() && found < f.q(); ++i) {
    const FqElem* x = &coords[i * d];
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const FqElem* y = &coords[j * d];
      FqElem s = f.zero();
      for (std::size_t k = 0; k < d; ++k) s = f.add(s, f.sq(f.sub(x[k], y[k])));
      if (!seen[s.idx]) {
        seen[s.idx] = 1;
        if (++found == f.q()) break;
      }
    }
  }
  std::vector<FqElem> out;
  for (std::uint32_t v = 0; v < f.q(); ++v) {
    if (seen[v]) out.push_back({v});
  }
  return out;
}

std::vector<FqElem> pinned_distance_set(std::span<const FqElem> x, const PointSet& a) {
  if (a.empty()) throw Error(Errc::EmptySet, "pinned distance set of an empty set");
  if (static_cast<int>(x.size()) != a.dim()) {
    throw Error(Errc::DimensionMismatch, "pin has wrong dimension");
  }
  const FieldCtx& f = a.field();
  std::vector<char> seen(f.q(), 0);
  VecFq diff(x.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    VecFq y = a.point(i);
    for (std::size_t k = 0; k < x.size(); ++k) diff[k] = f.sub(x[k], y[k]);
    seen[norm(f, diff).idx] = 1;
  }
  std::vector<FqElem> out;
  for (std::uint32_t v = 0; v < f.q(); ++v) {
    if (seen[v]) out.push_back({v});
  }
  return out;
}

}  // namespace fqdist
