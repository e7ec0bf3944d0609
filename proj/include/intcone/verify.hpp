#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "intcone/instances.hpp"
#include "intcone/reductions.hpp"

namespace intcone {

struct VerifyOptions {
  std::uint64_t explosion_cap = kDefaultExplosionCap;
  /// Memo budget for deciding the cone instance built from the block-encoded
  /// instance; 0 skips that (usually enormous) check.
  std::uint64_t reduced_cone_budget = 0;
  ReductionFaults faults;
};

/// Lattice points of the constructed polytope versus the gadget point set.
struct Claim1Report {
  bool pass = false;
  std::size_t enumerated = 0;
  std::size_t expected = 0;
  std::vector<Point> diff;  // points on exactly one side, sorted
};

Claim1Report verify_claim1(const SsmInstance& inst, const VerifyOptions& options = {});

enum class Answer { yes, no, skipped };

std::string to_string(Answer a);

/// Answers along both reductions for a single instance I:
///   ss          Subset Sum on I
///   ssm_reduced Subset Sum with Multiplicities on the block encoding of I
///   ssm         Subset Sum with Multiplicities on I itself
///   pic         Point in Cone on the cone encoding of I
///   pic_reduced Point in Cone on the cone encoding of the block encoding
///               (only within options.reduced_cone_budget)
struct ChainReport {
  Answer ss = Answer::skipped;
  Answer ssm_reduced = Answer::skipped;
  Answer ssm = Answer::skipped;
  Answer pic = Answer::skipped;
  Answer pic_reduced = Answer::skipped;
  bool consistent = false;
  bool witnesses_ok = false;
  std::vector<std::string> problems;

  bool pass() const { return consistent && witnesses_ok; }
};

/// Runs every decider and checks the block encoding decodes back to I. Then on each yes lifts the source witness to the target
/// problem and projects the target's own witness back, checking every
/// certificate on the way.
ChainReport verify_equivalence_chain(const SubsetSumInstance& inst,
                                     const VerifyOptions& options = {});

struct AuditFailure {
  SubsetSumInstance instance;
  std::string claim;
  std::string detail;

  friend bool operator==(const AuditFailure&, const AuditFailure&) = default;
};

struct AuditSummary {
  std::size_t instances = 0;
  std::vector<AuditFailure> failures;  // sorted by instance, then claim
};

struct AuditEntry {
  const SubsetSumInstance& instance;
  const Claim1Report& claim1;
  const ChainReport& chain;
  const std::string& error;  // nonempty if checking the instance threw

  bool pass() const { return error.empty() && claim1.pass && chain.pass(); }
};

/// Gadget point-set check and the equivalence chain on every given instance. Errors raised
/// while checking an instance are recorded as failures, not rethrown.
AuditSummary audit_instances(std::span<const SubsetSumInstance> instances,
                             const VerifyOptions& options = {},
                             const std::function<void(const AuditEntry&)>& on_entry = {});

AuditSummary run_family_audit(int max_n, int max_t, const VerifyOptions& options = {},
                              const std::function<void(const AuditEntry&)>& on_entry = {});

}  // namespace intcone
