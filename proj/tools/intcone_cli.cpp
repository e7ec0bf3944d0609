// intcone: command-line front end. Every subcommand reads JSON-lines on stdin
// (where it takes input) and writes JSON-lines on stdout.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input,
// 3 desk-scale guard tripped.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "intcone/cone.hpp"
#include "intcone/errors.hpp"
#include "intcone/json_io.hpp"
#include "intcone/reductions.hpp"
#include "intcone/solvers.hpp"
#include "intcone/verify.hpp"

namespace {

using namespace intcone;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitGuard = 3;

struct Settings {
  std::uint64_t explosion_cap = kDefaultExplosionCap;
  // gen / audit / bench
  int max_n = 3;
  int max_t = 12;
  std::size_t random_count = 0;
  std::uint64_t seed = 20240611;
  // reduce
  bool emit_points = false;
  // verify
  std::uint64_t reduced_budget = 0;
  std::string inject;
};

template <typename Fn>
void for_each_line(Fn&& fn) {
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    fn(parse_instance(line));
  }
}

template <typename Instance>
const Instance& expect_kind(const AnyInstance& inst, std::string_view kind) {
  if (const auto* x = std::get_if<Instance>(&inst)) return *x;
  throw ParseError("expected an instance of kind \"" + std::string(kind) + "\"");
}

void emit(const Json& doc) { std::cout << doc.dump() << '\n'; }

int run_gen(const Settings& s) {
  auto print = [](const SubsetSumInstance& inst) { std::cout << serialize(inst) << '\n'; };
  if (s.random_count > 0) {
    for (const auto& inst : gen_family_random(s.max_n, s.max_t, s.seed, s.random_count)) print(inst);
  } else {
    visit_family(s.max_n, s.max_t, print);
  }
  return 0;
}

int run_reduce_ss_to_ssm() {
  for_each_line([](const AnyInstance& any) {
    const auto& inst = expect_kind<SubsetSumInstance>(any, kSubsetSumKind);
    std::cout << serialize(ss_to_ssm(inst).instance) << '\n';
  });
  return 0;
}

int run_reduce_ssm_to_pic(const Settings& s) {
  for_each_line([&](const AnyInstance& any) {
    const auto& inst = expect_kind<SsmInstance>(any, kSsmKind);
    const ConeEncoding enc = ssm_to_pic(inst);
    Json doc = to_json(AnyInstance{enc.instance});
    if (s.emit_points) doc["points"] = points_to_json(enc.gadget.points);
    emit(doc);
  });
  return 0;
}

Json answer_doc(bool yes, Json witness) {
  Json doc;
  doc["answer"] = yes ? "yes" : "no";
  doc["witness"] = yes ? std::move(witness) : Json(nullptr);
  return doc;
}

int run_solve(const Settings& s) {
  for_each_line([&](const AnyInstance& any) {
    if (const auto* ss = std::get_if<SubsetSumInstance>(&any)) {
      const auto w = ss_decide(*ss, s.explosion_cap);
      emit(answer_doc(w.has_value(), w ? witness_to_json(*w, ss->items.size()) : Json()));
    } else if (const auto* ssm = std::get_if<SsmInstance>(&any)) {
      const auto w = ssm_decide(*ssm, s.explosion_cap);
      emit(answer_doc(w.has_value(), w ? witness_to_json(*w, ssm->items.size()) : Json()));
    } else {
      const auto& pic = std::get<PointInConeInstance>(any);
      const GeneratorSet generators(integer_points(pic.polytope, s.explosion_cap));
      const auto w = decide_membership(generators, pic.target, s.explosion_cap);
      emit(answer_doc(w.has_value(), w ? cone_witness_to_json(*w) : Json()));
    }
  });
  return 0;
}

VerifyOptions verify_options(const Settings& s) {
  VerifyOptions options;
  options.explosion_cap = s.explosion_cap;
  options.reduced_cone_budget = s.reduced_budget;
  if (s.inject == "drop-upper-rows") {
    options.faults.drop_upper_fiber_rows = true;
  } else if (s.inject == "top-slack") {
    options.faults.top_slack_offset = 1;
  } else if (s.inject == "narrow-middle") {
    options.faults.middle_width_delta = -1;
  }
  return options;
}

int run_verify_claim1(const Settings& s) {
  bool all = true;
  for_each_line([&](const AnyInstance& any) {
    const auto& inst = expect_kind<SsmInstance>(any, kSsmKind);
    const Claim1Report report = verify_claim1(inst, verify_options(s));
    all &= report.pass;
    emit(report_to_json(inst, report));
  });
  return all ? 0 : kExitVerifyFailed;
}

int run_verify_chain(const Settings& s) {
  bool all = true;
  for_each_line([&](const AnyInstance& any) {
    const auto& inst = expect_kind<SubsetSumInstance>(any, kSubsetSumKind);
    const ChainReport report = verify_equivalence_chain(inst, verify_options(s));
    all &= report.pass();
    emit(report_to_json(inst, report));
  });
  return all ? 0 : kExitVerifyFailed;
}

int run_verify_audit(const Settings& s) {
  const AuditSummary summary = run_family_audit(
      s.max_n, s.max_t, verify_options(s), [](const AuditEntry& e) { emit(report_to_json(e)); });
  std::cerr << "audited " << summary.instances << " instances, " << summary.failures.size()
            << " failures\n";
  for (const AuditFailure& f : summary.failures) std::cerr << "  " << f.claim << ": " << f.detail << '\n';
  return summary.failures.empty() ? 0 : kExitVerifyFailed;
}

int run_enc_size() {
  for_each_line([](const AnyInstance& any) {
    const auto& inst = expect_kind<PointInConeInstance>(any, kPointInConeKind);
    std::cout << encoding_size(inst.polytope, inst.target) << '\n';
  });
  return 0;
}

int run_bench(const Settings& s) {
  std::printf("%6s %4s %6s %10s %12s\n", "n", "d", "m", "enc_bits", "solve_ms");
  for (int n = 1; n <= s.max_n; ++n) {
    SsmInstance inst{{}, BigInt(2 * n)};
    for (int i = 1; i <= n; ++i) inst.items.emplace_back(i);
    const ConeEncoding enc = ssm_to_pic(inst);
    const auto start = std::chrono::steady_clock::now();
    const GeneratorSet generators(integer_points(enc.instance.polytope, s.explosion_cap));
    decide_membership(generators, enc.instance.target, s.explosion_cap);
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    std::printf("%6d %4zu %6zu %10zu %12.3f\n", n, enc.gadget.d, enc.instance.polytope.rows(),
                encoding_size(enc.instance.polytope, enc.instance.target), elapsed.count());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer-cone membership lab: reductions, oracles and claim audits"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--explosion-cap", s.explosion_cap,
                 "Largest box / DP range / memo table before giving up")
      ->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Emit subset-sum instances of the canonical family");
  gen->add_option("--max-n", s.max_n)->required()->check(CLI::PositiveNumber);
  gen->add_option("--max-t", s.max_t)->required()->check(CLI::PositiveNumber);
  gen->add_option("--random", s.random_count, "Draw this many instances uniformly instead");
  gen->add_option("--seed", s.seed)->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "Apply a reduction to each instance on stdin");
  reduce->require_subcommand(1);
  auto* ss_to_ssm_cmd = reduce->add_subcommand("ss-to-ssm", "Subset Sum -> with multiplicities");
  auto* ssm_to_pic_cmd = reduce->add_subcommand("ssm-to-pic", "With multiplicities -> Point in Cone");
  ssm_to_pic_cmd->add_flag("--emit-points", s.emit_points, "Attach the gadget point list");

  auto* solve = app.add_subcommand("solve", "Decide each instance on stdin");

  auto* verify = app.add_subcommand("verify", "Check the reductions' claims");
  verify->require_subcommand(1);
  verify->add_option("--explosion-cap", s.explosion_cap);
  auto* claim1 = verify->add_subcommand("claim1", "Lattice points of the cone polytope == gadget");
  auto* chain = verify->add_subcommand("chain", "Answers and witnesses agree along both reductions");
  chain->add_option("--reduced-budget", s.reduced_budget,
                    "Memo budget for the cone instance of the block encoding (0 skips it)");
  auto* audit = verify->add_subcommand("audit", "claim1 + chain over a whole family");
  audit->add_option("--max-n", s.max_n)->required()->check(CLI::PositiveNumber);
  audit->add_option("--max-t", s.max_t)->required()->check(CLI::PositiveNumber);
  audit->add_option("--reduced-budget", s.reduced_budget);
  for (auto* cmd : {claim1, chain, audit}) {
    cmd->add_option("--inject", s.inject, "Run against a deliberately broken reduction")
        ->check(CLI::IsMember({"drop-upper-rows", "top-slack", "narrow-middle"}));
  }

  auto* enc_size = app.add_subcommand("enc-size", "Encoding size in bits of each cone instance");

  auto* bench = app.add_subcommand("bench", "Scaling table for the cone construction");
  bench->add_option("--max-n", s.max_n)->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*gen) return run_gen(s);
    if (*ss_to_ssm_cmd) return run_reduce_ss_to_ssm();
    if (*ssm_to_pic_cmd) return run_reduce_ssm_to_pic(s);
    if (*solve) return run_solve(s);
    if (*claim1) return run_verify_claim1(s);
    if (*chain) return run_verify_chain(s);
    if (*audit) return run_verify_audit(s);
    if (*enc_size) return run_enc_size();
    if (*bench) return run_bench(s);
  } catch (const GuardTrip& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const Error& e) {
    std::cerr << "input: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
