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

#include <cstdint>
#include <span>
#include <vector>

#include "owc/core.hpp"
#include "owc/flow.hpp"
#include "owc/graphmatch.hpp"
#include "owc/pattern.hpp"

namespace owc {

struct SimLimits {
  int max_qubits = 20;
  int max_measured = 12;
};

/// The linear map H_I -> H_O along one assignment of measurement outcomes.
/// outcomes[j] is the result of the j-th measurement command.
struct BranchMap {
  std::vector<int> outcomes;
  Matrix map;
};

/// Runs the pattern on one input with forced outcomes. Measuring qubit i at
/// angle a applies <+_a| (outcome 0) or <-_a| (outcome 1), with
/// <+-_a| = (<0| +- e^{-ia} <1|)/sqrt2, and removes i. Nothing is
/// renormalized. Throws std::invalid_argument if the pattern does not
/// validate, the input is not over I, or the outcome count is wrong.
StateVector run_branch(const Pattern& p, const StateVector& input, std::span<const int> outcomes);

/// All 2^{|O^c|} branch maps, indexed by outcome string with the first
/// measurement as the most significant bit. Throws std::length_error past
/// the limits.
std::vector<BranchMap> branch_maps(const Pattern& p, const SimLimits& limits = {});

struct VerificationReport {
  bool deterministic = false;
  double max_branch_discrepancy = 0.0;
  bool matches_unitary = false;
  double max_entry_error = 0.0;

  bool ok() const { return deterministic && matches_unitary; }
};

/// Strict equality of every branch map with the positive one, and of
/// 2^{|O^c|/2} times the positive branch with U.
VerificationReport check_deterministic_and_equal(const Pattern& p, const UnitaryMatrix& u,
                                                 double tol = kMatrixTolerance,
                                                 const SimLimits& limits = {});

/// e^{-i sum_j a_j x_j} (-1)^{sum_{jk in E} x_j x_k}, built one factor at a
/// time. Angles must cover exactly the non-outputs.
PhaseMapDiagonal positive_branch_phase_map(const Geometry& g, const AngleMap& angles);

}  // namespace owc
