#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "intcone/cone.hpp"
#include "intcone/instances.hpp"

namespace intcone {

enum class Block { high, middle, low };

/// Three adjacent bit fields, `low` least significant:
///   x = high * 2^(w_middle + w_low) + middle * 2^w_low + low.
struct BlockLayout {
  std::size_t high_width = 0;
  std::size_t middle_width = 0;
  std::size_t low_width = 0;

  std::size_t offset(Block b) const;
  std::size_t width(Block b) const;

  BigInt compose(const BigInt& high, const BigInt& middle, const BigInt& low) const;
  /// floor(x / 2^offset) mod 2^width.
  BigInt extract(const BigInt& x, Block b) const;

  friend bool operator==(const BlockLayout&, const BlockLayout&) = default;
};

/// Deliberate corruptions of the reductions. Used only to prove the audit can
/// fail; every field off by default.
struct ReductionFaults {
  bool drop_upper_fiber_rows = false;  // omit the "x_last <= p_i(last)" row family
  int top_slack_offset = 0;            // added to the multiplicity of (1,...,1,0)
  int middle_width_delta = 0;          // added to the width of the middle block

  bool any() const { return drop_upper_fiber_rows || top_slack_offset || middle_width_delta; }
};

struct BlockEncoding {
  SsmInstance instance;  // items a'_1..a'_n, b_1..b_n, then target t'
  BlockLayout layout;
};

/// Subset Sum -> Subset Sum with Multiplicities. High and low blocks are n bits
/// wide and hold a one-hot pair code; the middle block holds a_i (or 0 for b_i)
/// and is bitlength(t) wide.
BlockEncoding ss_to_ssm(const SubsetSumInstance& inst, const ReductionFaults& faults = {});

/// Decodes every block-encoded number back into its three fields and compares
/// them with the defining tables; also rejects bits above the high block.
/// nullopt when all tables hold, else the first mismatch.
std::optional<std::string> check_block_tables(const SubsetSumInstance& source,
                                              const BlockEncoding& encoding);

/// J = {i : lambda_i = 1} from a certified witness over the 2n block-encoded
/// items. Throws CertificateError if w does not certify `reduced`, and
/// PairSumViolation if some lambda_i + lambda_{n+i} != 1.
Witness project_witness_ssm_to_ss(const Witness& w, const SsmInstance& reduced, std::size_t n);

/// lambda_i = [i in J], lambda_{n+i} = [i not in J].
Witness lift_witness_ss_to_ssm(const Witness& subset, std::size_t n);

/// The lattice points the cone instance is built around: p_i = (chi_i, c_i)
/// where chi_i is the d-bit code of i (first coordinate most significant) and
/// c_i = a_i for 1 <= i <= n, else 0.
struct GadgetPointSet {
  std::size_t d = 0;
  std::size_t n = 0;
  std::vector<Point> points;

  const Point& operator[](std::size_t i) const { return points[i]; }
  std::size_t size() const { return points.size(); }
  std::size_t all_ones_index() const { return points.size() - 1; }
};

/// ceil(log2(n + 1)) + 1, the smallest d with 2^d >= 2n + 2.
std::size_t gadget_dimension(std::size_t n);

/// 0/1 vector of length d encoding i, most significant bit first.
std::vector<int> bit_code(std::size_t i, std::size_t d);

GadgetPointSet gadget_points(const SsmInstance& inst);

struct ConeEncoding {
  PointInConeInstance instance;
  GadgetPointSet gadget;
};

/// Subset Sum with Multiplicities -> Point in Cone in dimension d + 1 with
/// target t * (1,...,1). Rows, in order: 0 <= x_j <= 1 for each j (lower
/// first), 0 <= x_last <= t, then for every i one row forcing x_last >= c_i on
/// the fiber x_{1..d} = chi_i, then for every i one row forcing x_last <= c_i.
ConeEncoding ssm_to_pic(const SsmInstance& inst, const ReductionFaults& faults = {});

/// Pairs p_i with its complement p_{2^d-1-i}, each with multiplicity lambda_i,
/// then tops up (1,...,1,0) with t - sum(lambda). Throws CertificateError for an
/// uncertified lambda and NegativeSlack if sum(lambda) > t.
ConeWitness lift_witness_ssm_to_pic(const Witness& lambda, const SsmInstance& inst,
                                    const GadgetPointSet& gadget,
                                    const ReductionFaults& faults = {});

/// lambda_i = w(p_i) for 1 <= i <= n. Throws CertificateError unless w
/// certifies the cone instance.
Witness project_witness_pic_to_ssm(const ConeWitness& w, const PointInConeInstance& instance,
                                   const GadgetPointSet& gadget);

}  // namespace intcone
