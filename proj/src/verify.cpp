#include "intcone/verify.hpp"

#include <algorithm>
#include <sstream>

#include "intcone/cone.hpp"
#include "intcone/errors.hpp"
#include "intcone/solvers.hpp"

namespace intcone {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::yes:
      return "yes";
    case Answer::no:
      return "no";
    case Answer::skipped:
      return "skipped";
  }
  return "skipped";
}

Claim1Report verify_claim1(const SsmInstance& inst, const VerifyOptions& options) {
  const ConeEncoding enc = ssm_to_pic(inst, options.faults);
  std::vector<Point> found = integer_points(enc.instance.polytope, options.explosion_cap);
  std::vector<Point> expected = enc.gadget.points;
  std::sort(found.begin(), found.end());
  std::sort(expected.begin(), expected.end());

  Claim1Report report;
  report.enumerated = found.size();
  report.expected = expected.size();
  std::set_symmetric_difference(found.begin(), found.end(), expected.begin(), expected.end(),
                                std::back_inserter(report.diff));
  report.pass = report.diff.empty();
  return report;
}

namespace {

Answer answer_of(bool yes) { return yes ? Answer::yes : Answer::no; }

std::string instance_text(const SubsetSumInstance& inst) {
  std::ostringstream out;
  out << "items=[";
  for (std::size_t i = 0; i < inst.items.size(); ++i) out << (i ? "," : "") << inst.items[i];
  out << "] t=" << inst.target;
  return out.str();
}

// Runs `check`, turning a false result or a non-guard exception into a problem.
template <typename Check>
void expect(std::vector<std::string>& problems, const std::string& what, Check&& check) {
  try {
    if (!check()) problems.push_back(what);
  } catch (const GuardTrip&) {
    throw;
  } catch (const std::exception& e) {
    problems.push_back(what + ": " + e.what());
  }
}

struct ConeDecision {
  ConeEncoding encoding;
  GeneratorSet generators;
  std::optional<ConeWitness> witness;
};

ConeDecision decide_cone(const SsmInstance& inst, const ReductionFaults& faults,
                         std::uint64_t enumeration_cap, std::uint64_t search_cap) {
  ConeDecision out{ssm_to_pic(inst, faults), {}, std::nullopt};
  out.generators = GeneratorSet(integer_points(out.encoding.instance.polytope, enumeration_cap));
  out.witness = decide_membership(out.generators, out.encoding.instance.target, search_cap);
  return out;
}

}  // namespace

ChainReport verify_equivalence_chain(const SubsetSumInstance& inst, const VerifyOptions& options) {
  ChainReport report;
  auto& problems = report.problems;
  const std::size_t n = inst.items.size();
  const std::uint64_t cap = options.explosion_cap;

  // Subset Sum <-> block-encoded Subset Sum with Multiplicities.
  const std::optional<Witness> subset = ss_decide(inst, cap);
  const BlockEncoding blocks = ss_to_ssm(inst, options.faults);
  const std::optional<Witness> blocks_lambda = ssm_decide(blocks.instance, cap);
  report.ss = answer_of(subset.has_value());
  report.ssm_reduced = answer_of(blocks_lambda.has_value());
  if (auto bad = check_block_tables(inst, blocks)) problems.push_back("block tables: " + *bad);

  if (subset) {
    expect(problems, "subset-sum witness certifies", [&] { return check_ss_witness(inst, *subset); });
    expect(problems, "lifted subset witness certifies the block encoding", [&] {
      return check_ssm_witness(blocks.instance, lift_witness_ss_to_ssm(*subset, n));
    });
  }
  if (blocks_lambda) {
    expect(problems, "block-encoding witness projects to a subset-sum witness", [&] {
      return check_ss_witness(inst, project_witness_ssm_to_ss(*blocks_lambda, blocks.instance, n));
    });
  }

  // Subset Sum with Multiplicities <-> Point in Cone, on the same items.
  const SsmInstance ssm = as_ssm(inst);
  const std::optional<Witness> lambda = ssm_decide(ssm, cap);
  const ConeDecision cone = decide_cone(ssm, options.faults, cap, cap);
  const Point& q = cone.encoding.instance.target;
  report.ssm = answer_of(lambda.has_value());
  report.pic = answer_of(cone.witness.has_value());

  if (lambda) {
    expect(problems, "multiplicity witness certifies", [&] { return check_ssm_witness(ssm, *lambda); });
    expect(problems, "lifted multiplicity witness certifies the cone instance", [&] {
      return check_certificate(
          cone.generators,
          lift_witness_ssm_to_pic(*lambda, ssm, cone.encoding.gadget, options.faults), q);
    });
  }
  if (cone.witness) {
    expect(problems, "cone witness certifies", [&] {
      return check_certificate(cone.generators, *cone.witness, q);
    });
    expect(problems, "cone witness projects to a multiplicity witness", [&] {
      return check_ssm_witness(
          ssm, project_witness_pic_to_ssm(*cone.witness, cone.encoding.instance, cone.encoding.gadget));
    });
  }

  if (options.reduced_cone_budget > 0) {
    try {
      const ConeDecision reduced =
          decide_cone(blocks.instance, {}, cap, options.reduced_cone_budget);
      report.pic_reduced = answer_of(reduced.witness.has_value());
      if (reduced.witness) {
        expect(problems, "cone witness of the block encoding certifies", [&] {
          return check_certificate(reduced.generators, *reduced.witness,
                                   reduced.encoding.instance.target);
        });
      }
    } catch (const GuardTrip&) {
      report.pic_reduced = Answer::skipped;
    }
  }

  report.witnesses_ok = problems.empty();
  report.consistent = report.ss == report.ssm_reduced && report.ssm == report.pic &&
                      (report.pic_reduced == Answer::skipped ||
                       report.pic_reduced == report.ssm_reduced);
  if (!report.consistent) {
    problems.push_back("answers disagree: ss=" + to_string(report.ss) +
                       " ssm_reduced=" + to_string(report.ssm_reduced) +
                       " ssm=" + to_string(report.ssm) + " pic=" + to_string(report.pic) +
                       " pic_reduced=" + to_string(report.pic_reduced));
  }
  return report;
}

AuditSummary audit_instances(std::span<const SubsetSumInstance> instances,
                             const VerifyOptions& options,
                             const std::function<void(const AuditEntry&)>& on_entry) {
  AuditSummary summary;
  for (const SubsetSumInstance& inst : instances) {
    ++summary.instances;
    Claim1Report claim1;
    ChainReport chain;
    std::string error;
    try {
      claim1 = verify_claim1(as_ssm(inst), options);
      chain = verify_equivalence_chain(inst, options);
    } catch (const std::exception& e) {
      error = e.what();
    }

    if (!error.empty()) {
      summary.failures.push_back({inst, "error", error});
    } else {
      if (!claim1.pass) {
        summary.failures.push_back({inst, "claim1",
                                    instance_text(inst) + ": enumerated " +
                                        std::to_string(claim1.enumerated) + " points, expected " +
                                        std::to_string(claim1.expected)});
      }
      if (!chain.pass()) {
        std::string detail = instance_text(inst);
        for (const std::string& p : chain.problems) detail += "; " + p;
        summary.failures.push_back({inst, "chain", detail});
      }
    }
    if (on_entry) on_entry(AuditEntry{inst, claim1, chain, error});
  }
  std::sort(summary.failures.begin(), summary.failures.end(),
            [](const AuditFailure& l, const AuditFailure& r) {
              if (l.instance == r.instance) return l.claim < r.claim;
              return l.instance < r.instance;
            });
  return summary;
}

AuditSummary run_family_audit(int max_n, int max_t, const VerifyOptions& options,
                              const std::function<void(const AuditEntry&)>& on_entry) {
  const std::vector<SubsetSumInstance> family = gen_family(max_n, max_t);
  return audit_instances(family, options, on_entry);
}

}  // namespace intcone
