#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "intcone/bigint.hpp"

namespace intcone {

/// {x in R^d : A x <= b} with integer data. Rows of A are stored row-major.
struct Polytope {
  std::vector<Point> A;
  Point b;

  std::size_t rows() const { return A.size(); }
  std::size_t cols() const { return A.empty() ? 0 : A.front().size(); }

  friend bool operator==(const Polytope&, const Polytope&) = default;
};

/// Names the first broken shape invariant (m >= 1, d >= 1, rectangular, |b| == m).
std::optional<std::string> validate(const Polytope& p);

/// Axis-aligned integer box. An empty box has no meaningful bounds.
struct Box {
  Point lower;
  Point upper;
  bool empty = false;

  /// max_i max(|lower_i|, |upper_i|): the boundedness constant M.
  BigInt radius() const;
  /// Number of integer points in the box (0 when empty).
  BigInt volume() const;
};

bool contains(const Polytope& p, std::span<const BigInt> x);

/// Interval propagation: seeds bounds from single-variable rows, then tightens
/// every coordinate against every row until nothing changes (at most d*m
/// rounds). Throws BoxUnderivable if a coordinate stays unbounded.
Box bounding_box(const Polytope& p);

/// All lattice points of p in lexicographic order. Depth-first over
/// coordinates in index order, pruning a prefix as soon as some row's smallest
/// achievable left side exceeds its bound. Throws ExplosionGuard when the box
/// holds more than `cap` points.
std::vector<Point> integer_points(const Polytope& p, std::uint64_t cap = kDefaultExplosionCap);

}  // namespace intcone
