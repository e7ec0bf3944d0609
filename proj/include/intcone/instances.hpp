#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "intcone/bigint.hpp"
#include "intcone/polytope.hpp"

namespace intcone {

/// Subset Sum: is there J with sum_{j in J} a_j = t?
struct SubsetSumInstance {
  std::vector<BigInt> items;
  BigInt target;

  friend bool operator==(const SubsetSumInstance&, const SubsetSumInstance&) = default;
  /// Family order: n, then t, then items.
  friend bool operator<(const SubsetSumInstance& l, const SubsetSumInstance& r) {
    if (l.items.size() != r.items.size()) return l.items.size() < r.items.size();
    if (l.target != r.target) return l.target < r.target;
    return l.items < r.items;
  }
};

/// Subset Sum with Multiplicities: are there lambda >= 0 with sum lambda_i a_i = t?
struct SsmInstance {
  std::vector<BigInt> items;
  BigInt target;

  friend bool operator==(const SsmInstance&, const SsmInstance&) = default;
};

/// Is q in IntCone(P cap Z^dim)?
struct PointInConeInstance {
  std::size_t dim = 0;
  Polytope polytope;
  Point target;

  friend bool operator==(const PointInConeInstance&, const PointInConeInstance&) = default;
};

using AnyInstance = std::variant<SubsetSumInstance, SsmInstance, PointInConeInstance>;

inline SsmInstance as_ssm(const SubsetSumInstance& inst) { return {inst.items, inst.target}; }

/// Sparse nonnegative multiplicities keyed by 0-based item index. Zero
/// coefficients are never stored, so the key set is the support.
class Witness {
 public:
  Witness() = default;
  static Witness from_dense(std::span<const BigInt> lambda);

  const BigInt& operator[](std::size_t index) const;
  void set(std::size_t index, BigInt value);
  void add(std::size_t index, const BigInt& value);

  std::size_t support_size() const { return coefficients_.size(); }
  const std::map<std::size_t, BigInt>& coefficients() const { return coefficients_; }
  std::vector<BigInt> to_dense(std::size_t n) const;

  friend bool operator==(const Witness&, const Witness&) = default;

 private:
  std::map<std::size_t, BigInt> coefficients_;
};

/// nullopt when every invariant holds, otherwise the first violated one.
std::optional<std::string> validate(const SubsetSumInstance& inst);
std::optional<std::string> validate(const SsmInstance& inst);
std::optional<std::string> validate(const PointInConeInstance& inst);
std::optional<std::string> validate(const AnyInstance& inst);

/// sum lambda_i a_i == t, indices inside [0, n).
bool check_ssm_witness(const SsmInstance& inst, const Witness& w);
/// As above, additionally every multiplicity is exactly 1.
bool check_ss_witness(const SubsetSumInstance& inst, const Witness& w);

/// Bits to write one integer: sign bit, terminator bit, magnitude bits.
std::size_t integer_cost(const BigInt& z);

/// Total cost of all entries of A, b and q.
std::size_t encoding_size(const Polytope& p, std::span<const BigInt> q);

/// Every canonical instance with n <= max_n and 1 <= a_1 <= ... <= a_n <= t <= max_t,
/// ordered by n, then t, then items lexicographically.
void visit_family(int max_n, int max_t, const std::function<void(const SubsetSumInstance&)>& visit);
std::vector<SubsetSumInstance> gen_family(int max_n, int max_t);

/// `count` instances drawn uniformly from the same family; reproducible from seed.
std::vector<SubsetSumInstance> gen_family_random(int max_n, int max_t, std::uint64_t seed,
                                                 std::size_t count);

/// Number of instances in gen_family(max_n, max_t).
BigInt family_size(int max_n, int max_t);

}  // namespace intcone
