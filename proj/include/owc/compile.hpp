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

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <optional>
#include <string>
#include <vector>

#include "owc/core.hpp"
#include "owc/flow.hpp"
#include "owc/graphmatch.hpp"
#include "owc/pattern.hpp"
#include "owc/phasemap.hpp"
#include "owc/sim.hpp"

namespace owc {

/// Search policy for compile. Inputs are labelled 1..k and auxiliary qubits
/// k+1..k+n.
struct CompileConfig {
  std::optional<int> aux;                  // n; defaults to 2k
  std::optional<int> max_aux;              // defaults to n
  std::optional<std::vector<Label>> outputs;  // otherwise all k-subsets of the auxiliaries
  std::size_t max_perms = 10000;           // per output set and slot variant
  std::size_t random_perms = 0;            // seeded samples once max_perms is reached
  std::size_t max_slot_variants = 64;      // per output set
  std::size_t max_trials = 1000000;        // over the whole search
  double tol = kMatrixTolerance;
  std::uint64_t seed = 0;
  SimLimits limits;
};

enum class Stage {
  kLemmaBound,
  kNoMatchingGraph,
  kNoPathCover,
  kDependencyCycle,
  kVerificationMismatch,
};
inline constexpr int kStageCount = 5;
std::string to_string(Stage s);

/// Where a successful candidate sits in the search.
struct CandidatePlan {
  int aux = 0;
  std::vector<Label> outputs;
  std::size_t slot_variant = 0;
  std::vector<std::optional<double>> slot_axes;  // empty means canonical everywhere
  std::vector<std::vector<int>> permutations;
};

struct CompileBundle {
  QubitIndexing indexing;
  CandidatePlan plan;
  PhaseMapDiagonal phase_map;
  MatchResult match;
  Geometry geometry;
  Flow flow;
  Pattern pattern;
  VerificationReport report;
  std::size_t trials = 0;
};

struct ExhaustionReport {
  std::size_t trials = 0;
  std::size_t failures[kStageCount] = {};
  std::size_t successes = 0;
  bool cap_exhausted = false;
  int min_aux = 0;
  int max_aux = 0;

  std::size_t failed(Stage s) const { return failures[static_cast<int>(s)]; }
};

struct CompileOutcome {
  std::optional<CompileBundle> bundle;
  ExhaustionReport report;  // counts up to and including the success
};

/// Distinct phases (mod pi) of the non-zero entries of U, in [0, pi). Pair
/// axes of the anchored slot variants are drawn from this list.
std::vector<double> anchor_phases(const UnitaryMatrix& u);

/// Slot variants for one auxiliary count, in search order: the canonical
/// split, then every anchored combination (first coefficient slowest), then
/// seeded uniform re-phasings, up to `cap` in total. Only coefficients with
/// antipodal pairs vary.
std::vector<std::vector<std::optional<double>>> slot_variants(const UnitaryMatrix& u, int aux,
                                                              std::size_t cap,
                                                              std::uint64_t seed);

/// Enumerates the distinct arrangements of each coefficient's terms,
/// starting from the identity and cycling lexicographically, as an odometer
/// whose last coefficient turns fastest.
class PermutationOdometer {
 public:
  explicit PermutationOdometer(const std::vector<SlotSolution>& slots);

  const std::vector<std::vector<int>>& current() const { return perms_; }
  /// Advances; false once every combination has been produced.
  bool next();
  /// Replaces the current assignment with a uniformly shuffled one.
  void randomize(std::mt19937_64& rng);

 private:
  void rebuild(std::size_t c);

  std::vector<std::vector<int>> classes_;  // current class sequence per coefficient
  std::vector<std::vector<int>> start_;
  std::vector<std::vector<std::vector<int>>> members_;  // term indices per class
  std::vector<std::vector<int>> perms_;
};

/// Backtracking search over output sets, slot variants and permutations,
/// expanding the auxiliary count up to max_aux. Throws std::invalid_argument
/// on an inconsistent configuration.
CompileOutcome compile(const UnitaryMatrix& u, const CompileConfig& cfg = {});

}  // namespace owc
