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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "owc/compile.hpp"

namespace owc::io {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json load_file(const std::string& path);
/// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);
void save_file(const std::string& path, const Json& j);

// {"num_qubits": k, "matrix": [[[re, im], ...], ...]}
UnitaryMatrix read_unitary(const Json& j, double tol = kUnitTolerance);
Json write_unitary(const Matrix& m);

// {"num_qubits": v, "diagonal": [[re, im], ...]} with optional "vertices",
// "inputs" and "outputs". Missing vertices default to 1..v; missing inputs
// or outputs to empty.
struct PhaseMapFile {
  PhaseMapDiagonal phi;
  QubitIndexing indexing;
};
PhaseMapFile read_phase_map(const Json& j);
Json write_phase_map(const PhaseMapDiagonal& phi, const QubitIndexing& indexing);

// {"vertices": [...], "edges": [[a, b], ...], "inputs": [...], "outputs": [...]}
Geometry read_geometry(const Json& j);
Json write_geometry(const Geometry& g);

// {"vertices", "inputs", "outputs", "edges", "angles": {"1": 0.785, ...}};
// also a valid geometry file.
MatchResult read_match(const Json& j);
Json write_match(const MatchResult& m, const QubitIndexing& indexing);

// {"f": {"x": y, ...}, "order_chains": [[v, ...], ...], "sup": {"x": [...], ...}}
// sup[x][c] is the position in chain c of the earliest vertex above x, or -1.
Json write_flow(const Geometry& g, const Flow& flow);

Pattern read_pattern(const Json& j);
Json write_pattern(const Pattern& p);

Json write_report(const VerificationReport& r);

// {"inputs", "outputs", "aux", "perm_seed", "max_trials"} plus the
// candidate's "slot_axes" (null for canonical) and "permutations".
struct PlanFile {
  QubitIndexing indexing;
  std::vector<std::optional<double>> slot_axes;
  std::vector<std::vector<int>> permutations;
};
PlanFile read_plan(const Json& j);
Json write_plan(const CandidatePlan& plan, const QubitIndexing& indexing, const CompileConfig& cfg);

Json write_bundle(const CompileBundle& b, const CompileConfig& cfg);
Json write_exhaustion(const ExhaustionReport& r);

std::vector<Label> parse_label_list(const std::string& text);

}  // namespace owc::io
