#include "intcone/polytope.hpp"

#include <algorithm>

#include "intcone/errors.hpp"

namespace intcone {

namespace {

using Bound = std::optional<BigInt>;

// Smallest value of coef * x over x in [lo, hi]; nullopt when unbounded.
Bound min_term(const BigInt& coef, const Bound& lo, const Bound& hi) {
  if (coef == 0) return BigInt(0);
  const Bound& end = coef > 0 ? lo : hi;
  if (!end) return std::nullopt;
  return BigInt(coef * *end);
}

void check_dimension(const Polytope& p, std::size_t size) {
  if (size != p.cols()) {
    throw DimensionMismatch("point of length " + std::to_string(size) +
                            " against a polytope in dimension " + std::to_string(p.cols()));
  }
}

}  // namespace

std::optional<std::string> validate(const Polytope& p) {
  if (p.A.empty()) return "polytope needs at least one row (m >= 1)";
  if (p.cols() == 0) return "polytope needs at least one column (d >= 1)";
  for (const Point& row : p.A) {
    if (row.size() != p.cols()) return "every row of A has length d";
  }
  if (p.b.size() != p.rows()) return "b has one entry per row of A";
  return std::nullopt;
}

BigInt Box::radius() const {
  BigInt m = 0;
  if (empty) return m;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    m = std::max({m, BigInt(abs(lower[i])), BigInt(abs(upper[i]))});
  }
  return m;
}

BigInt Box::volume() const {
  if (empty) return 0;
  BigInt v = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) v *= upper[i] - lower[i] + 1;
  return v;
}

bool contains(const Polytope& p, std::span<const BigInt> x) {
  check_dimension(p, x.size());
  for (std::size_t r = 0; r < p.rows(); ++r) {
    if (dot(p.A[r], x) > p.b[r]) return false;
  }
  return true;
}

Box bounding_box(const Polytope& p) {
  if (auto bad = validate(p)) throw InvalidInstance(*bad);
  const std::size_t d = p.cols();
  const std::size_t m = p.rows();
  std::vector<Bound> lo(d), hi(d);

  auto tighten = [&](std::size_t j, const BigInt& coef, const BigInt& rhs) {
    // coef * x_j <= rhs
    bool changed = false;
    if (coef > 0) {
      BigInt bound = floor_div(rhs, coef);
      if (!hi[j] || bound < *hi[j]) {
        hi[j] = std::move(bound);
        changed = true;
      }
    } else {
      BigInt bound = ceil_div(rhs, coef);
      if (!lo[j] || bound > *lo[j]) {
        lo[j] = std::move(bound);
        changed = true;
      }
    }
    return changed;
  };

  for (std::size_t r = 0; r < m; ++r) {
    const auto nonzero = std::count_if(p.A[r].begin(), p.A[r].end(),
                                       [](const BigInt& z) { return z != 0; });
    if (nonzero != 1) continue;
    const auto j = static_cast<std::size_t>(
        std::find_if(p.A[r].begin(), p.A[r].end(), [](const BigInt& z) { return z != 0; }) -
        p.A[r].begin());
    tighten(j, p.A[r][j], p.b[r]);
  }

  auto is_empty = [&] {
    for (std::size_t j = 0; j < d; ++j) {
      if (lo[j] && hi[j] && *lo[j] > *hi[j]) return true;
    }
    return false;
  };

  const std::size_t max_rounds = std::max<std::size_t>(1, d * m);
  for (std::size_t round = 0; round < max_rounds && !is_empty(); ++round) {
    bool changed = false;
    for (std::size_t r = 0; r < m; ++r) {
      const Point& row = p.A[r];
      // Sum of finite minima, and how many terms are unbounded.
      BigInt finite = 0;
      std::size_t unbounded = 0;
      std::size_t unbounded_at = 0;
      std::vector<Bound> terms(d);
      for (std::size_t k = 0; k < d; ++k) {
        terms[k] = min_term(row[k], lo[k], hi[k]);
        if (terms[k]) {
          finite += *terms[k];
        } else {
          ++unbounded;
          unbounded_at = k;
        }
      }
      for (std::size_t j = 0; j < d; ++j) {
        if (row[j] == 0) continue;
        if (unbounded > 1 || (unbounded == 1 && unbounded_at != j)) continue;
        BigInt rest = terms[j] ? BigInt(finite - *terms[j]) : finite;
        changed |= tighten(j, row[j], p.b[r] - rest);
      }
    }
    if (!changed) break;
  }

  Box box;
  if (is_empty()) {
    box.empty = true;
    return box;
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (!lo[j] || !hi[j]) {
      throw BoxUnderivable("coordinate " + std::to_string(j + 1) +
                           " has no finite bound from interval propagation");
    }
    box.lower.push_back(*lo[j]);
    box.upper.push_back(*hi[j]);
  }
  return box;
}

namespace {

class LatticeWalker {
 public:
  LatticeWalker(const Polytope& p, const Box& box) : p_(p), box_(box) {
    const std::size_t d = p.cols();
    const std::size_t m = p.rows();
    suffix_min_.assign(m, Point(d + 1, BigInt(0)));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t k = d; k-- > 0;) {
        suffix_min_[r][k] = suffix_min_[r][k + 1] + *min_term(p.A[r][k], box.lower[k], box.upper[k]);
      }
    }
    partial_.assign(m, BigInt(0));
    current_.resize(d);
  }

  std::vector<Point> run() {
    descend(0);
    return std::move(out_);
  }

 private:
  bool feasible_prefix(std::size_t level) const {
    for (std::size_t r = 0; r < p_.rows(); ++r) {
      if (partial_[r] + suffix_min_[r][level] > p_.b[r]) return false;
    }
    return true;
  }

  void descend(std::size_t level) {
    if (!feasible_prefix(level)) return;
    if (level == p_.cols()) {
      out_.push_back(current_);
      return;
    }
    for (BigInt v = box_.lower[level]; v <= box_.upper[level]; ++v) {
      current_[level] = v;
      for (std::size_t r = 0; r < p_.rows(); ++r) partial_[r] += p_.A[r][level] * v;
      descend(level + 1);
      for (std::size_t r = 0; r < p_.rows(); ++r) partial_[r] -= p_.A[r][level] * v;
    }
  }

  const Polytope& p_;
  const Box& box_;
  std::vector<Point> suffix_min_;
  Point partial_;
  Point current_;
  std::vector<Point> out_;
};

}  // namespace

std::vector<Point> integer_points(const Polytope& p, std::uint64_t cap) {
  const Box box = bounding_box(p);
  if (box.empty) return {};
  to_bounded(box.volume(), cap, "bounding box volume");
  return LatticeWalker(p, box).run();
}

}  // namespace intcone
