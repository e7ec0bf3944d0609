#include "intcone/reductions.hpp"

#include <algorithm>
#include <bit>

#include "intcone/errors.hpp"

namespace intcone {

namespace {

BigInt pow2(std::size_t k) { return BigInt(1) << k; }

}  // namespace

std::size_t BlockLayout::offset(Block b) const {
  switch (b) {
    case Block::low:
      return 0;
    case Block::middle:
      return low_width;
    case Block::high:
      return low_width + middle_width;
  }
  return 0;
}

std::size_t BlockLayout::width(Block b) const {
  switch (b) {
    case Block::low:
      return low_width;
    case Block::middle:
      return middle_width;
    case Block::high:
      return high_width;
  }
  return 0;
}

BigInt BlockLayout::compose(const BigInt& high, const BigInt& middle, const BigInt& low) const {
  return (high << offset(Block::high)) + (middle << offset(Block::middle)) + low;
}

BigInt BlockLayout::extract(const BigInt& x, Block b) const {
  return (x >> offset(b)) & (pow2(width(b)) - 1);
}

BlockEncoding ss_to_ssm(const SubsetSumInstance& inst, const ReductionFaults& faults) {
  if (auto bad = validate(inst)) throw InvalidInstance(*bad);
  const std::size_t n = inst.items.size();
  const auto middle = static_cast<long long>(bit_length(inst.target)) + faults.middle_width_delta;

  BlockEncoding out;
  out.layout = BlockLayout{n, static_cast<std::size_t>(std::max(0LL, middle)), n};
  const BlockLayout& layout = out.layout;
  auto& items = out.instance.items;
  for (std::size_t i = 1; i <= n; ++i) {
    items.push_back(layout.compose(pow2(n - i), inst.items[i - 1], pow2(i - 1)));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    items.push_back(layout.compose(pow2(n - i), 0, pow2(i - 1)));
  }
  out.instance.target = layout.compose(pow2(n) - 1, inst.target, pow2(n) - 1);
  return out;
}

std::optional<std::string> check_block_tables(const SubsetSumInstance& source,
                                              const BlockEncoding& encoding) {
  const std::size_t n = source.items.size();
  const BlockLayout& layout = encoding.layout;
  const SsmInstance& inst = encoding.instance;
  if (inst.items.size() != 2 * n) return "block encoding must have 2n items";

  auto fields_match = [&](const BigInt& x, const BigInt& high, const BigInt& middle,
                          const BigInt& low) {
    const std::size_t top = layout.offset(Block::high) + layout.width(Block::high);
    return (x >> top) == 0 && layout.extract(x, Block::high) == high &&
           layout.extract(x, Block::middle) == middle && layout.extract(x, Block::low) == low;
  };
  for (std::size_t i = 1; i <= n; ++i) {
    if (!fields_match(inst.items[i - 1], pow2(n - i), source.items[i - 1], pow2(i - 1))) {
      return "a'_" + std::to_string(i) + " does not decode to (2^(n-i), a_i, 2^(i-1))";
    }
    if (!fields_match(inst.items[n + i - 1], pow2(n - i), 0, pow2(i - 1))) {
      return "b_" + std::to_string(i) + " does not decode to (2^(n-i), 0, 2^(i-1))";
    }
  }
  if (!fields_match(inst.target, pow2(n) - 1, source.target, pow2(n) - 1)) {
    return "t' does not decode to (2^n - 1, t, 2^n - 1)";
  }
  return std::nullopt;
}

Witness project_witness_ssm_to_ss(const Witness& w, const SsmInstance& reduced, std::size_t n) {
  if (reduced.items.size() != 2 * n) {
    throw DimensionMismatch("block-encoded instance must have 2n items");
  }
  if (!check_ssm_witness(reduced, w)) {
    throw CertificateError("witness does not certify the block-encoded instance");
  }
  Witness subset;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] + w[n + i] != 1) {
      throw PairSumViolation("lambda_" + std::to_string(i + 1) + " + lambda_" +
                             std::to_string(n + i + 1) + " = " + to_decimal(w[i] + w[n + i]) +
                             ", expected 1");
    }
    if (w[i] == 1) subset.set(i, 1);
  }
  return subset;
}

Witness lift_witness_ss_to_ssm(const Witness& subset, std::size_t n) {
  Witness lambda;
  for (const auto& [i, value] : subset.coefficients()) {
    if (i >= n || value != 1) throw InvalidInstance("subset witness must be 0/1 over [n]");
  }
  for (std::size_t i = 0; i < n; ++i) {
    lambda.set(subset[i] == 1 ? i : n + i, 1);
  }
  return lambda;
}

std::size_t gadget_dimension(std::size_t n) { return std::bit_width(n) + 1; }

std::vector<int> bit_code(std::size_t i, std::size_t d) {
  std::vector<int> code(d);
  for (std::size_t j = 0; j < d; ++j) code[j] = static_cast<int>((i >> (d - 1 - j)) & 1U);
  return code;
}

GadgetPointSet gadget_points(const SsmInstance& inst) {
  GadgetPointSet g;
  g.n = inst.items.size();
  g.d = gadget_dimension(g.n);
  const std::size_t count = std::size_t{1} << g.d;
  for (std::size_t i = 0; i < count; ++i) {
    Point p;
    for (int bit : bit_code(i, g.d)) p.emplace_back(bit);
    p.push_back(i >= 1 && i <= g.n ? inst.items[i - 1] : BigInt(0));
    g.points.push_back(std::move(p));
  }
  return g;
}

ConeEncoding ssm_to_pic(const SsmInstance& inst, const ReductionFaults& faults) {
  if (auto bad = validate(inst)) throw InvalidInstance(*bad);
  ConeEncoding out;
  out.gadget = gadget_points(inst);
  const GadgetPointSet& g = out.gadget;
  const std::size_t d = g.d;
  const BigInt& t = inst.target;

  Polytope& poly = out.instance.polytope;
  auto add_row = [&](Point row, BigInt rhs) {
    poly.A.push_back(std::move(row));
    poly.b.push_back(std::move(rhs));
  };
  auto unit = [&](std::size_t j, int sign) {
    Point row(d + 1, BigInt(0));
    row[j] = sign;
    return row;
  };

  for (std::size_t j = 0; j < d; ++j) {
    add_row(unit(j, -1), 0);
    add_row(unit(j, 1), 1);
  }
  add_row(unit(d, -1), 0);
  add_row(unit(d, 1), t);

  // Penalty sum S_i(x) = sum_{chi_i(j)=0} t x_j + sum_{chi_i(j)=1} t (1 - x_j),
  // which vanishes exactly on the fiber chi_i. Written as -(coeffs . x) + t |chi_i|.
  auto fiber_row = [&](std::size_t i, int last_sign) {
    Point row(d + 1, BigInt(0));
    std::size_t ones = 0;
    const std::vector<int> chi = bit_code(i, d);
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = chi[j] ? BigInt(t) : BigInt(-t);
      ones += static_cast<std::size_t>(chi[j]);
    }
    row[d] = last_sign;
    return std::pair{std::move(row), BigInt(t * ones)};
  };
  // x_last + S_i(x) >= c_i
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto [row, ones] = fiber_row(i, -1);
    add_row(std::move(row), ones - g[i][d]);
  }
  // t - x_last + S_i(x) >= t - c_i
  if (!faults.drop_upper_fiber_rows) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto [row, ones] = fiber_row(i, 1);
      add_row(std::move(row), ones + g[i][d]);
    }
  }

  out.instance.dim = d + 1;
  out.instance.target = Point(d + 1, t);
  return out;
}

ConeWitness lift_witness_ssm_to_pic(const Witness& lambda, const SsmInstance& inst,
                                    const GadgetPointSet& gadget, const ReductionFaults& faults) {
  if (!check_ssm_witness(inst, lambda)) {
    throw CertificateError("multiplicities do not certify the instance");
  }
  const std::size_t top = gadget.all_ones_index();
  ConeWitness w;
  BigInt total = 0;
  for (const auto& [index, value] : lambda.coefficients()) {
    const std::size_t i = index + 1;
    w[gadget[i]] += value;
    w[gadget[top - i]] += value;
    total += value;
  }
  if (total > inst.target) {
    throw NegativeSlack("sum of multiplicities " + to_decimal(total) + " exceeds t = " +
                        to_decimal(inst.target));
  }
  const BigInt slack = inst.target - total + faults.top_slack_offset;
  if (slack > 0) w[gadget[top]] += slack;
  return w;
}

Witness project_witness_pic_to_ssm(const ConeWitness& w, const PointInConeInstance& instance,
                                   const GadgetPointSet& gadget) {
  const GeneratorSet generators(gadget.points);
  bool ok = false;
  try {
    ok = check_certificate(generators, w, instance.target);
  } catch (const std::invalid_argument&) {
  } catch (const DimensionMismatch&) {
  }
  if (!ok) throw CertificateError("cone witness does not certify the target point");
  Witness lambda;
  for (std::size_t i = 1; i <= gadget.n; ++i) {
    auto it = w.find(gadget[i]);
    if (it != w.end()) lambda.set(i - 1, it->second);
  }
  return lambda;
}

}  // namespace intcone
