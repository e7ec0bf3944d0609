#include "intcone/instances.hpp"

#include <algorithm>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "intcone/errors.hpp"

namespace intcone {

Witness Witness::from_dense(std::span<const BigInt> lambda) {
  Witness w;
  for (std::size_t i = 0; i < lambda.size(); ++i) w.set(i, lambda[i]);
  return w;
}

const BigInt& Witness::operator[](std::size_t index) const {
  static const BigInt zero = 0;
  auto it = coefficients_.find(index);
  return it == coefficients_.end() ? zero : it->second;
}

void Witness::set(std::size_t index, BigInt value) {
  if (value < 0) throw NegativeInput("witness multiplicities are nonnegative");
  if (value == 0) {
    coefficients_.erase(index);
  } else {
    coefficients_[index] = std::move(value);
  }
}

void Witness::add(std::size_t index, const BigInt& value) { set(index, (*this)[index] + value); }

std::vector<BigInt> Witness::to_dense(std::size_t n) const {
  std::vector<BigInt> dense(n, BigInt(0));
  for (const auto& [i, lambda] : coefficients_) {
    if (i >= n) throw DimensionMismatch("witness index " + std::to_string(i) + " out of range");
    dense[i] = lambda;
  }
  return dense;
}

namespace {

std::optional<std::string> validate_items(const std::vector<BigInt>& items, const BigInt& target) {
  if (items.empty()) return "items must be nonempty";
  if (target < 1) return "target must be positive (t >= 1)";
  for (const BigInt& a : items) {
    if (a < 1) return "every item must be positive (a_i >= 1)";
    if (a > target) return "every item must satisfy a_i <= t";
  }
  return std::nullopt;
}

bool check_combination(const std::vector<BigInt>& items, const BigInt& target, const Witness& w) {
  BigInt sum = 0;
  for (const auto& [i, lambda] : w.coefficients()) {
    if (i >= items.size()) return false;
    sum += lambda * items[i];
  }
  return sum == target;
}

}  // namespace

std::optional<std::string> validate(const SubsetSumInstance& inst) {
  return validate_items(inst.items, inst.target);
}

std::optional<std::string> validate(const SsmInstance& inst) {
  return validate_items(inst.items, inst.target);
}

std::optional<std::string> validate(const PointInConeInstance& inst) {
  if (inst.dim < 1) return "dimension must be positive";
  if (auto bad = validate(inst.polytope)) return bad;
  if (inst.polytope.cols() != inst.dim) return "polytope columns must equal dim";
  if (inst.target.size() != inst.dim) return "target point must have length dim";
  try {
    bounding_box(inst.polytope);
  } catch (const BoxUnderivable& e) {
    return std::string("polytope must be bounded: ") + e.what();
  }
  return std::nullopt;
}

std::optional<std::string> validate(const AnyInstance& inst) {
  return std::visit([](const auto& x) { return validate(x); }, inst);
}

bool check_ssm_witness(const SsmInstance& inst, const Witness& w) {
  return check_combination(inst.items, inst.target, w);
}

bool check_ss_witness(const SubsetSumInstance& inst, const Witness& w) {
  const auto& c = w.coefficients();
  return std::all_of(c.begin(), c.end(), [](const auto& kv) { return kv.second == 1; }) &&
         check_combination(inst.items, inst.target, w);
}

std::size_t integer_cost(const BigInt& z) { return 2 + bit_length(z); }

std::size_t encoding_size(const Polytope& p, std::span<const BigInt> q) {
  std::size_t bits = 0;
  for (const Point& row : p.A) {
    for (const BigInt& z : row) bits += integer_cost(z);
  }
  for (const BigInt& z : p.b) bits += integer_cost(z);
  for (const BigInt& z : q) bits += integer_cost(z);
  return bits;
}

namespace {

void visit_sorted(std::vector<BigInt>& items, std::size_t n, int lowest, int t,
                  const std::function<void(const SubsetSumInstance&)>& visit) {
  if (items.size() == n) {
    visit(SubsetSumInstance{items, BigInt(t)});
    return;
  }
  for (int a = lowest; a <= t; ++a) {
    items.emplace_back(a);
    visit_sorted(items, n, a, t, visit);
    items.pop_back();
  }
}

BigInt binomial(int n, int k) {
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Multisets of size n drawn from {1..t}.
BigInt multiset_count(int n, int t) { return binomial(t + n - 1, n); }

}  // namespace

void visit_family(int max_n, int max_t,
                  const std::function<void(const SubsetSumInstance&)>& visit) {
  std::vector<BigInt> items;
  for (int n = 1; n <= max_n; ++n) {
    for (int t = 1; t <= max_t; ++t) {
      visit_sorted(items, static_cast<std::size_t>(n), 1, t, visit);
    }
  }
}

std::vector<SubsetSumInstance> gen_family(int max_n, int max_t) {
  std::vector<SubsetSumInstance> out;
  visit_family(max_n, max_t, [&](const SubsetSumInstance& inst) { out.push_back(inst); });
  return out;
}

BigInt family_size(int max_n, int max_t) {
  BigInt total = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int t = 1; t <= max_t; ++t) total += multiset_count(n, t);
  }
  return total;
}

std::vector<SubsetSumInstance> gen_family_random(int max_n, int max_t, std::uint64_t seed,
                                                 std::size_t count) {
  std::vector<SubsetSumInstance> out;
  const BigInt total = family_size(max_n, max_t);
  if (total == 0) return out;
  boost::random::mt19937_64 rng(seed);
  boost::random::uniform_int_distribution<BigInt> pick(0, total - 1);

  for (std::size_t k = 0; k < count; ++k) {
    BigInt u = pick(rng);
    int n = 1;
    int t = 1;
    for (bool found = false; !found;) {
      for (t = 1; t <= max_t; ++t) {
        const BigInt c = multiset_count(n, t);
        if (u < c) {
          found = true;
          break;
        }
        u -= c;
      }
      if (!found) ++n;
    }
    // Stars and bars: a uniform n-subset c_1 < ... < c_n of {1..t+n-1}
    // gives the uniform multiset a_k = c_k - (k - 1).
    std::vector<int> pool(static_cast<std::size_t>(t + n - 1));
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i) + 1;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      boost::random::uniform_int_distribution<std::size_t> swap_with(i, pool.size() - 1);
      std::swap(pool[i], pool[swap_with(rng)]);
    }
    std::sort(pool.begin(), pool.begin() + n);
    SubsetSumInstance inst{{}, BigInt(t)};
    for (int i = 0; i < n; ++i) inst.items.emplace_back(pool[static_cast<std::size_t>(i)] - i);
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace intcone
