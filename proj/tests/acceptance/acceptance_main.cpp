// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "intcone/cone.hpp"
#include "intcone/json_io.hpp"
#include "intcone/reductions.hpp"
#include "intcone/solvers.hpp"
#include "intcone/verify.hpp"

namespace {

using namespace intcone;

constexpr std::uint64_t kSeed = 20240611;
constexpr std::size_t kRandomInstances = 200;
constexpr int kRandomMaxN = 5;
constexpr int kRandomMaxT = 40;
constexpr std::size_t kConeTrials = 500;
constexpr std::uint64_t kConeOracleSpace = 1'000'000;
constexpr double kScalingSlack = 1.5;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::vector<SubsetSumInstance> claim_families() {
  std::vector<SubsetSumInstance> all = gen_family(3, 12);
  const auto random = gen_family_random(kRandomMaxN, kRandomMaxT, kSeed, kRandomInstances);
  all.insert(all.end(), random.begin(), random.end());
  return all;
}

std::string describe(const SubsetSumInstance& inst) {
  std::ostringstream out;
  out << serialize(inst);
  return out.str();
}

Outcome claim1_identity() {
  std::size_t checked = 0;
  for (const auto& inst : claim_families()) {
    const Claim1Report r = verify_claim1(as_ssm(inst));
    if (!r.pass) {
      return {false, "mismatch on " + describe(inst) + ": enumerated " +
                         std::to_string(r.enumerated) + ", expected " + std::to_string(r.expected)};
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " instances, lattice points == gadget points on all"};
}

Outcome claim2_equivalence() {
  std::size_t checked = 0, yes = 0;
  for (const auto& source : claim_families()) {
    const SsmInstance inst = as_ssm(source);
    const auto lambda = ssm_decide(inst);
    const ConeEncoding enc = ssm_to_pic(inst);
    const GeneratorSet generators(integer_points(enc.instance.polytope));
    const Point& q = enc.instance.target;
    const auto cone = decide_membership(generators, q);
    if (lambda.has_value() != cone.has_value()) {
      return {false, "answers differ on " + describe(source)};
    }
    if (lambda) {
      ++yes;
      const ConeWitness lifted = lift_witness_ssm_to_pic(*lambda, inst, enc.gadget);
      if (!check_certificate(generators, lifted, q)) {
        return {false, "lifted witness fails the certificate on " + describe(source)};
      }
      if (!check_certificate(generators, *cone, q)) {
        return {false, "cone witness fails the certificate on " + describe(source)};
      }
      const Witness back = project_witness_pic_to_ssm(*cone, enc.instance, enc.gadget);
      if (!check_ssm_witness(inst, back)) {
        return {false, "projected witness invalid on " + describe(source)};
      }
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " instances (" + std::to_string(yes) +
                    " yes), 0 disagreements, all witnesses certified both ways"};
}

Outcome appendix_equivalence() {
  std::size_t checked = 0, yes = 0;
  for (const auto& inst : gen_family(3, 20)) {
    const std::size_t n = inst.items.size();
    const auto subset = ss_decide(inst);
    const BlockEncoding enc = ss_to_ssm(inst);
    const auto lambda = ssm_decide(enc.instance);
    if (subset.has_value() != lambda.has_value()) {
      return {false, "answers differ on " + describe(inst)};
    }
    if (subset) {
      ++yes;
      if (!check_ssm_witness(enc.instance, lift_witness_ss_to_ssm(*subset, n))) {
        return {false, "lifted subset witness fails on " + describe(inst)};
      }
      if (!check_ss_witness(inst, project_witness_ssm_to_ss(*lambda, enc.instance, n))) {
        return {false, "projected witness invalid on " + describe(inst)};
      }
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " instances (" + std::to_string(yes) +
                    " yes), 0 disagreements, witnesses certified both ways"};
}

Outcome fixture_snapshot() {
  const SsmInstance inst{{BigInt(2), BigInt(3)}, BigInt(7)};
  const ConeEncoding enc = ssm_to_pic(inst);
  const GadgetPointSet& g = enc.gadget;

  std::vector<Point> expected_points;
  for (auto p : std::vector<oracle::Vec>{{0, 0, 0, 0}, {0, 0, 1, 2}, {0, 1, 0, 3}, {0, 1, 1, 0},
                                         {1, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}}) {
    expected_points.push_back(oracle::big(p));
  }
  if (g.d != 3) return {false, "d = " + std::to_string(g.d)};
  if (enc.instance.target != oracle::big({7, 7, 7, 7})) return {false, "q differs"};
  if (g.points != expected_points) return {false, "gadget points differ"};
  if (enc.instance.polytope.rows() != 24) return {false, "row count differs"};

  const ConeWitness w = lift_witness_ssm_to_pic(*ssm_decide(inst), inst, g);
  const ConeWitness expected_w{{g[1], 2}, {g[2], 1}, {g[5], 1}, {g[6], 2}, {g[7], 4}};
  if (w != expected_w) return {false, "lifted witness differs"};
  if (!check_certificate(GeneratorSet(g.points), w, enc.instance.target)) {
    return {false, "witness not certified"};
  }

  std::ifstream in(std::string(INTCONE_TEST_DATA_DIR) + "/gadget_n2_t7.json");
  std::string frozen;
  std::getline(in, frozen);
  if (frozen.empty()) return {false, "snapshot file missing"};
  if (serialize(enc.instance) != frozen) return {false, "document differs from the frozen snapshot"};
  return {true, "d=3, q=(7,7,7,7), 8 points, 24 rows, witness {p1:2,p2:1,p5:1,p6:2,p7:4}, bytes match"};
}

Outcome parameter_scaling() {
  std::ostringstream detail;
  double previous = 0;
  int previous_n = 0;
  for (int n : {2, 4, 8, 16, 32}) {
    const int t = 2 * n;
    SsmInstance inst{{}, BigInt(t)};
    for (int i = 1; i <= n; ++i) inst.items.emplace_back(i);
    const ConeEncoding enc = ssm_to_pic(inst);
    const auto expected_d = static_cast<std::size_t>(std::ceil(std::log2(n + 1.0))) + 1;
    if (enc.gadget.d != expected_d) {
      return {false, "n=" + std::to_string(n) + ": d=" + std::to_string(enc.gadget.d) +
                         ", expected " + std::to_string(expected_d)};
    }
    const double bits = static_cast<double>(encoding_size(enc.instance.polytope, enc.instance.target));
    const double ratio = bits / (n * std::log2(n) * std::log2(t));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%sn=%d:%.2f", previous_n ? " " : "", n, ratio);
    detail << buf;
    if (previous_n >= 8 && ratio > kScalingSlack * previous) {
      return {false, detail.str() + " (ratio grew more than 1.5x past n=8)"};
    }
    previous = ratio;
    previous_n = n;
  }
  return {true, "d exact; enc/(n log n log t): " + detail.str()};
}

Outcome mutation_sensitivity() {
  struct Mutant {
    const char* name;
    ReductionFaults faults;
  };
  std::vector<Mutant> mutants(3);
  mutants[0].name = "drop-upper-rows";
  mutants[0].faults.drop_upper_fiber_rows = true;
  mutants[1].name = "top-slack+1";
  mutants[1].faults.top_slack_offset = 1;
  mutants[2].name = "narrow-middle";
  mutants[2].faults.middle_width_delta = -1;

  const AuditSummary clean = run_family_audit(3, 12);
  if (!clean.failures.empty()) return {false, "unmutated audit fails: " + clean.failures[0].detail};
  std::string detail = "clean audit 0/" + std::to_string(clean.instances) + ";";
  for (const Mutant& m : mutants) {
    VerifyOptions options;
    options.faults = m.faults;
    const AuditSummary s = run_family_audit(3, 12, options);
    std::set<SubsetSumInstance> failing;
    for (const auto& f : s.failures) failing.insert(f.instance);
    detail += std::string(" ") + m.name + " caught on " + std::to_string(failing.size());
    if (failing.empty()) return {false, detail + " (mutant survived)"};
  }
  return {true, detail};
}

Outcome cone_oracle() {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> dim(1, 4), count(1, 5), coord(0, 4), qc(0, 12);
  std::size_t accepted = 0, yes = 0, redrawn = 0;
  while (accepted < kConeTrials) {
    const std::size_t d = static_cast<std::size_t>(dim(rng));
    std::vector<oracle::Vec> xs;
    for (int k = count(rng); k > 0; --k) {
      oracle::Vec x(d);
      for (auto& v : x) v = coord(rng);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    oracle::Vec q(d);
    for (auto& v : q) v = qc(rng);
    if (oracle::cone_search_space(xs, q) > kConeOracleSpace) {
      ++redrawn;
      continue;
    }
    std::vector<Point> points;
    for (const auto& x : xs) points.push_back(oracle::big(x));
    const GeneratorSet generators(points);
    const auto w = decide_membership(generators, oracle::big(q));
    const bool expected = oracle::in_integer_cone(xs, q, kConeOracleSpace);
    if (w.has_value() != expected) return {false, "disagreement on trial " + std::to_string(accepted)};
    if (w && !check_certificate(generators, *w, oracle::big(q))) {
      return {false, "uncertified witness on trial " + std::to_string(accepted)};
    }
    yes += expected;
    ++accepted;
  }
  return {true, std::to_string(accepted) + " instances (" + std::to_string(yes) + " yes, " +
                    std::to_string(redrawn) + " redrawn over the oracle cap), 0 disagreements"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "polytope lattice points equal gadget points", 60, claim1_identity},
      {2, "SSM <-> Point in Cone equivalence", 300, claim2_equivalence},
      {3, "SS <-> SSM block-encoding equivalence", 60, appendix_equivalence},
      {4, "hand-computed fixture snapshot", 10, fixture_snapshot},
      {5, "parameter scaling", 10, parameter_scaling},
      {6, "mutation sensitivity", 300, mutation_sensitivity},
      {7, "cone solver vs exhaustive oracle", 60, cone_oracle},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && seconds > c.budget_seconds) {
      outcome.pass = false;
      outcome.detail += " (over the time budget)";
    }
    failed += !outcome.pass;
    std::printf("[%s] %d %s: %s (%.2fs / %.0fs)\n", outcome.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), outcome.detail.c_str(), seconds, c.budget_seconds);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
