// Copyright 2026 The owc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "owc/compile.hpp"
#include "owc/io.hpp"

namespace {

using owc::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitMalformed = 2;

// JSON goes to --out when given, otherwise to stdout with the summary on
// stderr so that stdout stays machine-readable.
class Emitter {
 public:
  explicit Emitter(const std::string& out) : out_(out) {}

  std::ostream& summary() { return out_.empty() ? std::cerr : std::cout; }

  void json(const Json& j) {
    if (out_.empty()) {
      std::cout << owc::io::dump(j);
    } else {
      owc::io::save_file(out_, j);
    }
  }

 private:
  std::string out_;
};

std::string join(const std::vector<owc::Label>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

std::string describe(const owc::MatchResult& m) {
  std::ostringstream os;
  os << "edges:";
  for (const auto& e : m.edges) os << " " << e.a << "-" << e.b;
  os << "\nangles:";
  for (const auto& [q, a] : m.angles) os << " " << q << ":" << owc::format_angle(a);
  return os.str();
}

std::string describe(const owc::VerificationReport& r) {
  std::ostringstream os;
  os << "deterministic: " << (r.deterministic ? "true" : "false")
     << " (max branch discrepancy " << r.max_branch_discrepancy << ")\n"
     << "matches: " << (r.matches_unitary ? "true" : "false") << " (max entry error "
     << r.max_entry_error << ")";
  return os.str();
}

struct Options {
  std::string unitary, geometry, phasemap, pattern, plan, match, out;
  std::string inputs, outputs;
  std::optional<int> aux, max_aux;
  std::size_t max_perms = 10000;
  std::size_t random_perms = 0;
  std::size_t max_slot_variants = 64;
  std::size_t max_trials = 1000000;
  double tol = owc::kMatrixTolerance;
  std::uint64_t seed = 0;
  bool all_branches = false;
};

owc::CompileConfig config_from(const Options& o) {
  owc::CompileConfig cfg;
  cfg.aux = o.aux;
  cfg.max_aux = o.max_aux;
  if (!o.outputs.empty()) cfg.outputs = owc::io::parse_label_list(o.outputs);
  cfg.max_perms = o.max_perms;
  cfg.random_perms = o.random_perms;
  cfg.max_slot_variants = o.max_slot_variants;
  cfg.max_trials = o.max_trials;
  cfg.tol = o.tol;
  cfg.seed = o.seed;
  return cfg;
}

int run_compile(const Options& o) {
  const owc::UnitaryMatrix u = owc::io::read_unitary(owc::io::load_file(o.unitary));
  const owc::CompileConfig cfg = config_from(o);
  Emitter emit(o.out);
  const owc::CompileOutcome result = owc::compile(u, cfg);
  if (!result.bundle) {
    emit.json(owc::io::write_exhaustion(result.report));
    auto& s = emit.summary();
    s << "no pattern found after " << result.report.trials << " trials";
    if (result.report.cap_exhausted) s << " (search caps reached)";
    s << "\n";
    for (int i = 0; i < owc::kStageCount; ++i) {
      s << "  " << owc::to_string(static_cast<owc::Stage>(i)) << ": "
        << result.report.failures[i] << "\n";
    }
    return kExitNegative;
  }
  const owc::CompileBundle& b = *result.bundle;
  emit.json(owc::io::write_bundle(b, cfg));
  emit.summary() << "compiled after " << b.trials << " trials: aux " << b.plan.aux
                 << ", outputs " << join(b.plan.outputs) << "\n"
                 << describe(b.match) << "\n"
                 << "pattern: " << owc::to_string(b.pattern) << "\n"
                 << describe(b.report) << "\n";
  return kExitOk;
}

int run_decompose(const Options& o) {
  const owc::UnitaryMatrix u = owc::io::read_unitary(owc::io::load_file(o.unitary));
  const int k = u.num_qubits();
  std::optional<owc::QubitIndexing> indexing;
  std::vector<std::optional<double>> axes;
  std::vector<std::vector<int>> perms;
  if (!o.plan.empty()) {
    owc::io::PlanFile plan = owc::io::read_plan(owc::io::load_file(o.plan));
    indexing.emplace(plan.indexing);
    axes = std::move(plan.slot_axes);
    perms = std::move(plan.permutations);
  } else {
    const int aux = o.aux.value_or(2 * k);
    std::vector<owc::Label> v, in, out;
    for (int i = 1; i <= k + aux; ++i) v.push_back(i);
    for (int i = 1; i <= k; ++i) in.push_back(i);
    if (o.outputs.empty()) {
      for (int i = k + 1; i <= 2 * k; ++i) out.push_back(i);
    } else {
      out = owc::io::parse_label_list(o.outputs);
    }
    indexing.emplace(v, in, out);
  }
  if (static_cast<int>(indexing->inputs().size()) != k) {
    throw owc::io::ParseError("plan inputs do not match the unitary");
  }
  Emitter emit(o.out);
  std::vector<owc::SlotSolution> slots;
  const int aux = indexing->size() - k;
  try {
    slots = owc::solve_all_slots(u, aux, axes);
  } catch (const owc::NoJointSolution& e) {
    emit.summary() << "no decomposition with " << aux << " auxiliary qubits: " << e.what()
                   << "\n";
    return kExitNegative;
  }
  const owc::DecompositionPlan plan(*indexing, perms);
  const owc::PhaseMapDiagonal phi = owc::enumerate_diagonal(u, plan, slots);
  emit.json(owc::io::write_phase_map(phi, *indexing));
  emit.summary() << "phase map over " << indexing->size() << " qubits, inputs "
                 << join(indexing->inputs()) << ", outputs " << join(indexing->outputs())
                 << "\n";
  return kExitOk;
}

int run_match(const Options& o) {
  owc::io::PhaseMapFile file = owc::io::read_phase_map(owc::io::load_file(o.phasemap));
  owc::QubitIndexing indexing = file.indexing;
  if (!o.inputs.empty() || !o.outputs.empty()) {
    indexing = owc::QubitIndexing(
        indexing.vertices(),
        o.inputs.empty() ? indexing.inputs() : owc::io::parse_label_list(o.inputs),
        o.outputs.empty() ? indexing.outputs() : owc::io::parse_label_list(o.outputs));
  }
  Emitter emit(o.out);
  const owc::PhaseMapView view(file.phi);
  auto m = owc::match_graph(view, indexing, o.tol);
  if (!m) {
    emit.summary() << "no matching graph: " << m.reason() << " at vertices "
                   << join(m.witness()) << "\n";
    return kExitNegative;
  }
  if (!owc::verify_full(view, *m, indexing, o.tol)) {
    emit.summary() << "no matching graph: pairwise entries agree but the full diagonal does not\n";
    return kExitNegative;
  }
  emit.json(owc::io::write_match(*m, indexing));
  emit.summary() << describe(*m) << "\n";
  return kExitOk;
}

int run_flow(const Options& o) {
  const owc::Geometry g = owc::io::read_geometry(owc::io::load_file(o.geometry));
  Emitter emit(o.out);
  auto flow = owc::find_flow(g);
  if (!flow) {
    emit.summary() << "no flow exists: " << flow.reason() << " at vertices "
                   << join(flow.witness()) << "\n";
    return kExitNegative;
  }
  emit.json(owc::io::write_flow(g, *flow));
  auto& s = emit.summary();
  s << "flow:";
  for (const auto& [x, y] : owc::successor_map(g, flow->cover)) s << " " << x << "->" << y;
  s << "\n";
  return kExitOk;
}

int run_synth(const Options& o) {
  const Json gj = owc::io::load_file(o.geometry);
  const owc::Geometry g = owc::io::read_geometry(gj);
  owc::AngleMap angles;
  if (!o.match.empty()) {
    angles = owc::io::read_match(owc::io::load_file(o.match)).angles;
  } else if (gj.contains("angles")) {
    angles = owc::io::read_match(gj).angles;
  } else {
    throw owc::io::ParseError("no angles: pass --match or a geometry with an angles field");
  }
  Emitter emit(o.out);
  auto flow = owc::find_flow(g);
  if (!flow) {
    emit.summary() << "no flow exists: " << flow.reason() << " at vertices "
                   << join(flow.witness()) << "\n";
    return kExitNegative;
  }
  owc::Pattern p;
  try {
    p = owc::synthesize(g, *flow, angles);
  } catch (const std::invalid_argument& e) {
    throw owc::io::ParseError(e.what());
  }
  emit.json(owc::io::write_pattern(p));
  emit.summary() << "pattern: " << owc::to_string(p) << "\n";
  return kExitOk;
}

Json matrix_json(const owc::Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

owc::Pattern load_valid_pattern(const std::string& path) {
  owc::Pattern p = owc::io::read_pattern(owc::io::load_file(path));
  const owc::ValidationReport r = owc::validate(p);
  if (!r.ok) {
    throw owc::io::ParseError("invalid pattern: " + owc::to_string(r.violation) +
                              " at command " + std::to_string(r.command_index) + ": " +
                              r.message);
  }
  return p;
}

int run_simulate(const Options& o) {
  const owc::Pattern p = load_valid_pattern(o.pattern);
  Emitter emit(o.out);
  const auto maps = owc::branch_maps(p);
  double worst = 0.0;
  for (const auto& b : maps) worst = std::max(worst, b.map.max_abs_diff(maps.front().map));
  Json branches = Json::array();
  for (const auto& b : maps) {
    branches.push_back({{"outcomes", b.outcomes}, {"map", matrix_json(b.map)}});
    if (!o.all_branches) break;
  }
  emit.json(Json{{"branch_count", maps.size()},
                 {"max_branch_discrepancy", worst},
                 {"branches", std::move(branches)}});
  emit.summary() << maps.size() << " branches, "
                 << (worst <= o.tol ? "all equal" : "not all equal")
                 << " (max discrepancy " << worst << ")\n";
  return kExitOk;
}

int run_verify(const Options& o) {
  const owc::Pattern p = load_valid_pattern(o.pattern);
  const owc::UnitaryMatrix u = owc::io::read_unitary(owc::io::load_file(o.unitary));
  Emitter emit(o.out);
  owc::VerificationReport r;
  try {
    r = owc::check_deterministic_and_equal(p, u, o.tol);
  } catch (const std::invalid_argument& e) {
    throw owc::io::ParseError(e.what());
  }
  emit.json(owc::io::write_report(r));
  emit.summary() << describe(r) << "\n";
  return r.ok() ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile unitaries into deterministic one-way measurement patterns"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* s) { s->add_option("--out", o.out, "Write the JSON result here"); };
  auto add_tol = [&](CLI::App* s) {
    s->add_option("--tol", o.tol, "Equality tolerance")->check(CLI::PositiveNumber);
  };

  auto* compile = app.add_subcommand("compile", "Full search from a unitary to a pattern");
  compile->add_option("--unitary", o.unitary, "Unitary JSON")->required();
  compile->add_option("--aux", o.aux, "Auxiliary qubits (default 2k)");
  compile->add_option("--max-aux", o.max_aux, "Largest auxiliary count to try");
  compile->add_option("--outputs", o.outputs, "Fixed output labels, e.g. \"3,5\"");
  compile->add_option("--max-perms", o.max_perms, "Permutation trials per slot variant");
  compile->add_option("--random-perms", o.random_perms, "Seeded permutation samples past the cap");
  compile->add_option("--max-slot-variants", o.max_slot_variants, "Slot variants per output set");
  compile->add_option("--max-trials", o.max_trials, "Trials over the whole search");
  compile->add_option("--seed", o.seed, "Random seed");
  add_tol(compile);
  add_out(compile);

  auto* decompose = app.add_subcommand("decompose", "Phase map of a unitary under a plan");
  decompose->add_option("--unitary", o.unitary, "Unitary JSON")->required();
  decompose->add_option("--plan", o.plan, "Plan JSON (as written by compile)");
  decompose->add_option("--aux", o.aux, "Auxiliary qubits when no plan is given");
  decompose->add_option("--outputs", o.outputs, "Output labels when no plan is given");
  add_out(decompose);

  auto* match = app.add_subcommand("match", "Graph and angles from a phase map");
  match->add_option("--phasemap", o.phasemap, "Phase map JSON")->required();
  match->add_option("--inputs", o.inputs, "Override input labels");
  match->add_option("--outputs", o.outputs, "Override output labels");
  add_tol(match);
  add_out(match);

  auto* flow = app.add_subcommand("flow", "Causal flow of a geometry");
  flow->add_option("--geometry", o.geometry, "Geometry JSON")->required();
  add_out(flow);

  auto* synth = app.add_subcommand("synth", "Deterministic pattern from a geometry and angles");
  synth->add_option("--geometry", o.geometry, "Geometry JSON, optionally with angles")->required();
  synth->add_option("--match", o.match, "Match JSON supplying the angles");
  add_out(synth);

  auto* simulate = app.add_subcommand("simulate", "Branch maps of a pattern");
  simulate->add_option("--pattern", o.pattern, "Pattern JSON")->required();
  simulate->add_flag("--all-branches", o.all_branches, "Emit every branch map");
  add_tol(simulate);
  add_out(simulate);

  auto* verify = app.add_subcommand("verify", "Determinism and equality with a unitary");
  verify->add_option("--pattern", o.pattern, "Pattern JSON")->required();
  verify->add_option("--unitary", o.unitary, "Unitary JSON")->required();
  add_tol(verify);
  add_out(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    if (*compile) return run_compile(o);
    if (*decompose) return run_decompose(o);
    if (*match) return run_match(o);
    if (*flow) return run_flow(o);
    if (*synth) return run_synth(o);
    if (*simulate) return run_simulate(o);
    if (*verify) return run_verify(o);
  } catch (const owc::io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
