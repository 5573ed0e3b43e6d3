#include "fqdist/bounds.hpp"

#include <algorithm>

#include "fqdist/error.hpp"

namespace fqdist {

namespace {

int total_clause(int d, std::int64_t q) {
  const int dm = d % 4;
  const bool q3 = q % 4 == 3;
  if (dm == 3) return q3 ? 1 : 2;
  if (dm == 1) return 2;
  if (dm == 2) return q3 ? 3 : 4;
  return 4;
}

void require_supported(int d, std::int64_t q) {
  if (d < 2) throw Error(Errc::UnsupportedCase, "bounds need d >= 2");
  if (q < 3 || q % 2 == 0) throw Error(Errc::UnsupportedCase, "bounds need odd q");
}

Rat pw(std::int64_t q, int e) { return rat_pow(q, e); }

}  // namespace

std::string_view bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::SqZrTotal: return "sq_zr_total";
    case BoundKind::SqOdd: return "sq_odd";
    case BoundKind::SqEven: return "sq_even";
    case BoundKind::SqEvenSimple: return "sq_even_simple";
    case BoundKind::SquareSetSize: return "square_set_size";
  }
  return "unknown";
}

CaseTag case_tag(BoundKind kind, int d, std::int64_t q) {
  require_supported(d, q);
  CaseTag tag{d % 4, static_cast<int>(q % 4), 0};
  const bool q3 = q % 4 == 3;
  switch (kind) {
    case BoundKind::SqZrTotal:
    case BoundKind::SquareSetSize:
      tag.clause = total_clause(d, q);
      break;
    case BoundKind::SqOdd:
      if (d % 2 == 0) throw Error(Errc::WrongParity, "odd-dimension SQ bound with even d");
      tag.clause = d % 4 == 3 && q3 ? 1 : 2;
      break;
    case BoundKind::SqEven:
      if (d % 2 == 1) throw Error(Errc::WrongParity, "even-dimension SQ bound with odd d");
      tag.clause = d % 4 == 2 && q3 ? 1 : 2;
      break;
    case BoundKind::SqEvenSimple:
      if (d % 2 == 1) throw Error(Errc::WrongParity, "even-dimension SQ bound with odd d");
      tag.clause = 1;
      break;
  }
  return tag;
}

Rat sq_zr_total_bound(int d, std::int64_t q, std::int64_t size) {
  const CaseTag tag = case_tag(BoundKind::SqZrTotal, d, q);
  const Rat a(size);
  const Rat a2 = a * a;
  const Rat base = a2 / 2 + a2 / (2 * q);
  switch (tag.clause) {
    case 1:
      return base - a2 / (2 * pw(q, (d - 1) / 2)) - a2 / (2 * pw(q, (d + 1) / 2)) +
             pw(q, (d - 1) / 2) * a;
    case 2:
      return base + pw(q, (d + 1) / 2) * a / 2 - pw(q, (d - 1) / 2) * a / 2;
    case 3:
      return base - a2 / pw(q, d / 2) + pw(q, d / 2) * a / 2 + pw(q, (d - 2) / 2) * a / 2;
    default:
      return base + pw(q, d / 2) * a / 2 - pw(q, (d - 2) / 2) * a / 2;
  }
}

Rat sq_threshold(int d, std::int64_t q) {
  require_supported(d, q);
  // (q^{k+1} + q) / (1 + q^{-(k-1)}) with k = (d+1)/2 for odd d, d/2 for even d.
  const int top = d % 2 == 1 ? (d + 1) / 2 : d / 2;
  const int inner = d % 2 == 1 ? (d - 1) / 2 : (d - 2) / 2;
  return (pw(q, top) + q) / (1 + pw(q, -inner));
}

Bound sq_odd_bound(int d, std::int64_t q, std::int64_t size) {
  const CaseTag tag = case_tag(BoundKind::SqOdd, d, q);
  const Rat a(size);
  const Rat a2 = a * a;
  const Rat lo = pw(q, (d - 1) / 2);
  const Rat hi = pw(q, (d + 1) / 2);
  if (tag.clause == 1) {
    const Rat large = a2 / 2 + lo * a - a2 / (2 * q) - a2 / (2 * lo) - a2 / (2 * hi);
    const Rat small = a2 / 2 + lo * a / 2 - a2 / (2 * lo) - a / 2;
    const Rat t = sq_threshold(d, q);
    if (a > t) return {large, "large"};
    if (a < t) return {small, "small"};
    return {std::min(large, small), "both"};
  }
  const Rat terms[3] = {
      hi * a / 2,
      lo * a / 2 + a2 / 2,
      a / 2 + hi * a / 2 - a2 / (2 * q),
  };
  const auto best = std::min_element(std::begin(terms), std::end(terms));
  const auto arg = static_cast<int>(best - std::begin(terms));
  return {a2 / 2 - lo * a / 2 - a / 2 + *best, "min" + std::to_string(arg)};
}

Bound sq_even_bound(int d, std::int64_t q, std::int64_t size) {
  const CaseTag tag = case_tag(BoundKind::SqEven, d, q);
  const Rat a(size);
  const Rat a2 = a * a;
  const Rat half_dim = pw(q, d / 2);
  const Rat below = pw(q, (d - 2) / 2);
  if (tag.clause == 1) {
    return {a2 / 2 + half_dim * a / 2 - a2 / (2 * q) - below * a / 2, "single"};
  }
  const Rat large = a2 / 2 + half_dim * a / 2 - a2 / half_dim - a2 / (2 * q) + below * a / 2;
  const Rat small = sq_even_simple_bound(d, q, size);
  const Rat t = sq_threshold(d, q);
  if (a > t) return {large, "large"};
  if (a < t) return {small, "small"};
  return {std::min(large, small), "both"};
}

Rat sq_even_simple_bound(int d, std::int64_t q, std::int64_t size) {
  case_tag(BoundKind::SqEvenSimple, d, q);
  const Rat a(size);
  const Rat half_dim = pw(q, d / 2);
  return a * a / 2 + half_dim * a / 2 - a * a / (2 * half_dim) - a / 2;
}

Rat square_set_size_bound(int d, std::int64_t q) {
  const CaseTag tag = case_tag(BoundKind::SquareSetSize, d, q);
  switch (tag.clause) {
    case 1:
      return 2 * pw(q, (d + 1) / 2) / (Rat(q - 1) + (q + 1) * pw(q, -(d - 1) / 2));
    case 2:
      return pw(q, (d + 1) / 2);
    case 3:
      return pw(q, d / 2) + 2 * (pw(q, d / 2) - q) / (Rat(q - 1) + 2 * pw(q, -(d - 2) / 2));
    default:
      return pw(q, d / 2);
  }
}

bool is_square_distance_set(const PointSet& a) {
  const FieldCtx& f = a.field();
  const auto d = static_cast<std::size_t>(a.dim());
  const std::vector<FqElem> coords = a.coordinates();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      FqElem s = f.zero();
      for (std::size_t k = 0; k < d; ++k) s = f.add(s, f.sq(f.sub(coords[i * d + k], coords[j * d + k])));
      if (f.eta(s) == -1) return false;
    }
  }
  return true;
}

std::vector<BoundReport> check_all(const PointSet& a, const PairCounts& counts) {
  const int d = a.dim();
  const std::int64_t q = a.field().q();
  const auto size = static_cast<std::int64_t>(a.size());
  std::vector<BoundReport> out;
  auto push = [&](BoundKind kind, Rat lhs, Rat rhs, std::string branch) {
    BoundReport r{kind, case_tag(kind, d, q), std::move(lhs), std::move(rhs), Rat(0), false,
                  std::move(branch)};
    r.slack = r.rhs - r.lhs;
    r.holds = r.slack >= 0;
    out.push_back(std::move(r));
  };
  const Rat sq(counts.sq);
  push(BoundKind::SqZrTotal, Rat(counts.sq + counts.zr), sq_zr_total_bound(d, q, size), "single");
  if (d % 2 == 1) {
    Bound b = sq_odd_bound(d, q, size);
    push(BoundKind::SqOdd, sq, std::move(b.value), std::move(b.branch));
  } else {
    Bound b = sq_even_bound(d, q, size);
    push(BoundKind::SqEven, sq, std::move(b.value), std::move(b.branch));
    push(BoundKind::SqEvenSimple, sq, sq_even_simple_bound(d, q, size), "single");
  }
  if (counts.nonsq == 0) {
    push(BoundKind::SquareSetSize, Rat(size), square_set_size_bound(d, q), "single");
  }
  return out;
}

std::vector<BoundReport> check_all(const PointSet& a) { return check_all(a, count_pairs(a)); }

}  // namespace fqdist
