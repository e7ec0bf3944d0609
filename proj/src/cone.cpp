#include "intcone/cone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "intcone/errors.hpp"

namespace intcone {

GeneratorSet::GeneratorSet(std::vector<Point> points) : points_(std::move(points)) {
  std::set<Point> seen;
  for (const Point& p : points_) {
    if (p.size() != dim()) throw DimensionMismatch("generators must share one dimension");
    if (std::any_of(p.begin(), p.end(), [](const BigInt& z) { return z < 0; })) {
      throw NegativeInput("generators must be coordinatewise nonnegative");
    }
    if (!seen.insert(p).second) throw std::invalid_argument("generators must be distinct");
  }
}

std::optional<std::size_t> GeneratorSet::index_of(const Point& p) const {
  auto it = std::find(points_.begin(), points_.end(), p);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

GeneratorSet GeneratorSet::subset(std::span<const std::size_t> indices) const {
  GeneratorSet out;
  for (std::size_t i : indices) out.points_.push_back(points_.at(i));
  return out;
}

namespace {

void check_target(const GeneratorSet& generators, std::span<const BigInt> q) {
  if (generators.size() > 0 && generators.dim() != q.size()) {
    throw DimensionMismatch("target has length " + std::to_string(q.size()) +
                            ", generators have dimension " + std::to_string(generators.dim()));
  }
  if (std::any_of(q.begin(), q.end(), [](const BigInt& z) { return z < 0; })) {
    throw NegativeInput("target must be coordinatewise nonnegative");
  }
}

bool fits(const Point& x, const Point& r) {
  for (std::size_t c = 0; c < r.size(); ++c) {
    if (x[c] > r[c]) return false;
  }
  return true;
}

class ConeSearch {
 public:
  ConeSearch(const GeneratorSet& generators, std::uint64_t cap) : cap_(cap) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (!is_zero(generators[i])) {
        nonzero_.push_back(&generators[i]);
      }
    }
  }

  std::optional<ConeWitness> run(const Point& q) {
    if (is_zero(q)) return ConeWitness{};
    std::vector<Frame> stack;
    stack.push_back(Frame{q, branches(q)});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == top.options.size()) {
        remember_failure(std::move(top.residual));
        stack.pop_back();
        continue;
      }
      const Point& x = *nonzero_[top.options[top.next++]];
      Point child(top.residual.size());
      for (std::size_t c = 0; c < child.size(); ++c) child[c] = top.residual[c] - x[c];
      if (is_zero(child)) return witness_along(stack);
      if (failed_.contains(child)) continue;
      std::vector<std::size_t> options = branches(child);
      if (options.empty()) {
        remember_failure(std::move(child));
        continue;
      }
      stack.push_back(Frame{std::move(child), std::move(options)});
    }
    return std::nullopt;
  }

 private:
  struct Frame {
    Point residual;
    std::vector<std::size_t> options;
    std::size_t next = 0;
  };

  // Generators that fit under r and cover the nonzero coordinate of r with
  // the fewest such generators. Empty means r is unreachable.
  std::vector<std::size_t> branches(const Point& r) const {
    std::vector<std::size_t> fitting;
    for (std::size_t g = 0; g < nonzero_.size(); ++g) {
      if (fits(*nonzero_[g], r)) fitting.push_back(g);
    }
    std::optional<std::size_t> best_coord;
    std::size_t best_count = 0;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] == 0) continue;
      std::size_t count = 0;
      for (std::size_t g : fitting) count += (*nonzero_[g])[c] > 0;
      if (!best_coord || count < best_count) {
        best_coord = c;
        best_count = count;
        if (count == 0) return {};
      }
    }
    std::vector<std::size_t> out;
    for (std::size_t g : fitting) {
      if ((*nonzero_[g])[*best_coord] > 0) out.push_back(g);
    }
    return out;
  }

  void remember_failure(Point r) {
    failed_.insert(std::move(r));
    if (failed_.size() > cap_) {
      throw ExplosionGuard("cone search memoized more than " + std::to_string(cap_) +
                           " residuals");
    }
  }

  ConeWitness witness_along(const std::vector<Frame>& stack) const {
    ConeWitness w;
    for (const Frame& f : stack) w[*nonzero_[f.options[f.next - 1]]] += 1;
    return w;
  }

  std::uint64_t cap_;
  std::vector<const Point*> nonzero_;
  std::unordered_set<Point, PointHash> failed_;
};

}  // namespace

std::optional<ConeWitness> decide_membership(const GeneratorSet& generators,
                                             std::span<const BigInt> q, std::uint64_t cap) {
  check_target(generators, q);
  return ConeSearch(generators, cap).run(Point(q.begin(), q.end()));
}

bool check_certificate(const GeneratorSet& generators, const ConeWitness& w,
                       std::span<const BigInt> q) {
  Point sum(q.size(), BigInt(0));
  for (const auto& [x, lambda] : w) {
    if (!generators.index_of(x)) throw std::invalid_argument("witness key is not a generator");
    if (x.size() != q.size()) throw DimensionMismatch("witness point length differs from target");
    if (lambda < 0) return false;
    for (std::size_t c = 0; c < q.size(); ++c) sum[c] += lambda * x[c];
  }
  return std::equal(sum.begin(), sum.end(), q.begin(), q.end());
}

std::optional<SupportResult> min_support(const GeneratorSet& generators,
                                         std::span<const BigInt> q, std::uint64_t cap) {
  if (generators.size() > kMaxSupportSearchGenerators) {
    throw SupportSearchTooLarge("support search over " + std::to_string(generators.size()) +
                                " generators exceeds the limit of " +
                                std::to_string(kMaxSupportSearchGenerators));
  }
  check_target(generators, q);
  if (!decide_membership(generators, q, cap)) return std::nullopt;
  if (is_zero(q)) return SupportResult{};

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!is_zero(generators[i])) candidates.push_back(i);
  }
  for (std::size_t k = 1; k <= candidates.size(); ++k) {
    // Lexicographic k-combinations of candidate positions.
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) pos[i] = i;
    while (true) {
      std::vector<std::size_t> chosen;
      for (std::size_t p : pos) chosen.push_back(candidates[p]);
      if (auto w = decide_membership(generators.subset(chosen), q, cap)) {
        return SupportResult{k, std::move(chosen), std::move(*w)};
      }
      std::size_t i = k;
      while (i > 0 && pos[i - 1] == candidates.size() - k + i - 1) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return std::nullopt;  // unreachable: the full set already succeeded
}

}  // namespace intcone
