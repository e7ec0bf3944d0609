#include "intcone/solvers.hpp"

#include "intcone/errors.hpp"

namespace intcone {

namespace {

struct SmallItems {
  std::size_t target;
  std::vector<std::size_t> items;  // items larger than target are kept as target + 1
};

// Deliberately weaker than validate(): items above t are allowed (they are
// simply unusable), so unnormalized inputs still get an answer.
void require_positive(const std::vector<BigInt>& items, const BigInt& target) {
  if (items.empty()) throw InvalidInstance("items must be nonempty");
  if (target < 1) throw InvalidInstance("target must be positive (t >= 1)");
  for (const BigInt& a : items) {
    if (a < 1) throw InvalidInstance("every item must be positive (a_i >= 1)");
  }
}

SmallItems shrink(const std::vector<BigInt>& items, const BigInt& target, std::uint64_t cap) {
  SmallItems s;
  s.target = static_cast<std::size_t>(to_bounded(target, cap, "target"));
  for (const BigInt& a : items) {
    s.items.push_back(a > target ? s.target + 1 : static_cast<std::size_t>(a));
  }
  return s;
}

}  // namespace

std::optional<Witness> ss_decide(const SubsetSumInstance& inst, std::uint64_t cap) {
  require_positive(inst.items, inst.target);
  const SmallItems s = shrink(inst.items, inst.target, cap);
  const std::size_t n = s.items.size();
  const std::size_t t = s.target;

  // suffix[i][v]: v is a subset sum of items i..n-1.
  std::vector<std::vector<bool>> suffix(n + 1, std::vector<bool>(t + 1, false));
  suffix[n][0] = true;
  for (std::size_t i = n; i-- > 0;) {
    suffix[i] = suffix[i + 1];
    for (std::size_t v = s.items[i]; v <= t; ++v) {
      if (suffix[i + 1][v - s.items[i]]) suffix[i][v] = true;
    }
  }
  if (!suffix[0][t]) return std::nullopt;

  Witness w;
  std::size_t remaining = t;
  for (std::size_t i = 0; i < n && remaining > 0; ++i) {
    if (s.items[i] <= remaining && suffix[i + 1][remaining - s.items[i]]) {
      w.set(i, 1);
      remaining -= s.items[i];
    }
  }
  return w;
}

std::optional<Witness> ssm_decide(const SsmInstance& inst, std::uint64_t cap) {
  require_positive(inst.items, inst.target);
  const SmallItems s = shrink(inst.items, inst.target, cap);
  const std::size_t t = s.target;

  std::vector<bool> reachable(t + 1, false);
  reachable[0] = true;
  for (std::size_t v = 1; v <= t; ++v) {
    for (std::size_t a : s.items) {
      if (a <= v && reachable[v - a]) {
        reachable[v] = true;
        break;
      }
    }
  }
  if (!reachable[t]) return std::nullopt;

  Witness w;
  for (std::size_t v = t; v > 0;) {
    for (std::size_t i = 0; i < s.items.size(); ++i) {
      if (s.items[i] <= v && reachable[v - s.items[i]]) {
        w.add(i, 1);
        v -= s.items[i];
        break;
      }
    }
  }
  return w;
}

}  // namespace intcone
