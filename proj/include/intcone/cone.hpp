#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "intcone/bigint.hpp"

namespace intcone {

/// Ordered list of distinct, coordinatewise nonnegative lattice points.
/// Throws NegativeInput, DimensionMismatch, or std::invalid_argument (duplicates).
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }
  /// Dimension of the points; 0 for an empty set.
  std::size_t dim() const { return points_.empty() ? 0 : points_.front().size(); }
  std::optional<std::size_t> index_of(const Point& p) const;

  GeneratorSet subset(std::span<const std::size_t> indices) const;

 private:
  std::vector<Point> points_;
};

/// Generator -> multiplicity; zero multiplicities are not stored.
using ConeWitness = std::map<Point, BigInt>;

/// Decides q in IntCone(X) by memoized descent over residuals: from r, some
/// generator covering each nonzero coordinate must be subtracted, so only the
/// generators covering the most constrained coordinate are tried (in list
/// order). Failed residuals are remembered. Zero generators are ignored.
/// Throws ExplosionGuard once more than `cap` residuals are memoized.
std::optional<ConeWitness> decide_membership(const GeneratorSet& generators,
                                             std::span<const BigInt> q,
                                             std::uint64_t cap = kDefaultExplosionCap);

/// Exact check of sum lambda_x * x == q. Throws std::invalid_argument if a key
/// is not a generator, DimensionMismatch on length mismatch.
bool check_certificate(const GeneratorSet& generators, const ConeWitness& w,
                       std::span<const BigInt> q);

inline constexpr std::size_t kMaxSupportSearchGenerators = 24;

struct SupportResult {
  std::size_t size = 0;
  std::vector<std::size_t> generators;  // indices into the generator list
  ConeWitness witness;
};

/// Smallest k such that q lies in the integer cone of some k generators.
/// Subsets are scanned by size, then lexicographically by index vector.
std::optional<SupportResult> min_support(const GeneratorSet& generators,
                                         std::span<const BigInt> q,
                                         std::uint64_t cap = kDefaultExplosionCap);

}  // namespace intcone
