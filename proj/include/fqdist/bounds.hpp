#pragma once

// Exact upper bounds on SQ + ZR, on SQ, and on the size of square-distance
// sets, dispatched on (d mod 4, q mod 4). Every exponent is an integer under
// its clause's parity hypothesis, so all arithmetic stays in Rat.
//
// Clause numbering (same for the SQ + ZR bound and the size bound):
//   1: d = 3 (mod 4), q = 3 (mod 4)
//   2: d = 1 (mod 4), or d = 3 (mod 4) and q = 1 (mod 4)
//   3: d = 2 (mod 4), q = 3 (mod 4)
//   4: d = 0 (mod 4), or d = 2 (mod 4) and q = 1 (mod 4)
// The odd-d SQ bound uses clause 1 for (3, 3) and clause 2 otherwise; the
// even-d SQ bound uses clause 1 for (2, 3) and clause 2 otherwise.

#include <cstdint>
#include <string>
#include <vector>

#include "fqdist/geometry.hpp"
#include "fqdist/pair_stats.hpp"
#include "fqdist/rational.hpp"

namespace fqdist {

enum class BoundKind {
  SqZrTotal,      // SQ + ZR
  SqOdd,          // SQ, odd d
  SqEven,         // SQ, even d
  SqEvenSimple,   // SQ, even d, single expression
  SquareSetSize,  // |A| for square-distance sets
};

std::string_view bound_kind_name(BoundKind kind);

struct CaseTag {
  int d_mod4 = 0;
  int q_mod4 = 1;
  int clause = 0;

  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

// Throws UnsupportedCase for d < 2 and WrongParity when the kind does not
// apply to the parity of d.
CaseTag case_tag(BoundKind kind, int d, std::int64_t q);

// Which sub-expression produced a bound: threshold side or argmin index.
struct Bound {
  Rat value;
  std::string branch;
};

Rat sq_zr_total_bound(int d, std::int64_t q, std::int64_t size);
Bound sq_odd_bound(int d, std::int64_t q, std::int64_t size);
Bound sq_even_bound(int d, std::int64_t q, std::int64_t size);
Rat sq_even_simple_bound(int d, std::int64_t q, std::int64_t size);
Rat square_set_size_bound(int d, std::int64_t q);

// Size threshold separating the large-set and small-set SQ bounds (clause 1
// for odd d, clause 2 for even d).
Rat sq_threshold(int d, std::int64_t q);

bool is_square_distance_set(const PointSet& a);

struct BoundReport {
  BoundKind kind;
  CaseTag tag;
  Rat lhs;
  Rat rhs;
  Rat slack;  // rhs - lhs
  bool holds = false;
  std::string branch;
};

// One report per applicable bound, using exact pair counts. The size bound is
// included only when A is a square-distance set.
std::vector<BoundReport> check_all(const PointSet& a, const PairCounts& counts);
std::vector<BoundReport> check_all(const PointSet& a);

}  // namespace fqdist
