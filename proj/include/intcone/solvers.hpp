#pragma once

#include <optional>

#include "intcone/instances.hpp"

namespace intcone {

// Both oracles accept any nonempty positive data; a_i <= t is not required.
// InvalidInstance otherwise.

/// Subset Sum oracle: DP over reachable sums in [0, t]. On yes, returns the
/// lexicographically smallest index set J (as 0/1 multiplicities).
/// Throws ExplosionGuard when t exceeds `cap`.
std::optional<Witness> ss_decide(const SubsetSumInstance& inst,
                                 std::uint64_t cap = kDefaultExplosionCap);

/// Subset Sum with Multiplicities oracle: coin-change DP over [0, t]. The
/// witness walks back from t, always stepping through the smallest usable item.
std::optional<Witness> ssm_decide(const SsmInstance& inst,
                                  std::uint64_t cap = kDefaultExplosionCap);

}  // namespace intcone
