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

#include <map>
#include <vector>

#include "owc/core.hpp"

namespace owc {

/// Measurement angles in radians, keyed by vertex.
using AngleMap = std::map<Label, double>;

/// Entanglement graph and measurement angles read off a phase map.
/// Angles cover exactly the non-outputs; outputs implicitly carry angle 0.
struct MatchResult {
  std::vector<Edge> edges;
  AngleMap angles;
};

/// Maps an angle into [0, 2pi).
double normalize_angle(double a);

/// Reads alpha_j from the weight-one entries: e^{-i alpha_j} = d(z_j).
/// Fails if the all-zero entry or an output's weight-one entry is not 1.
Result<AngleMap> extract_angles(const DiagonalView& phi, const QubitIndexing& indexing,
                                double tol = kMatrixTolerance);

/// Reads the edges off the weight-two entries, in lexicographic pair order,
/// stopping at the first pair whose entry is not +-e^{-i(alpha_j + alpha_k)}.
Result<std::vector<Edge>> extract_edges(const DiagonalView& phi, const QubitIndexing& indexing,
                                        const AngleMap& angles, double tol = kMatrixTolerance);

/// Both extraction steps. Reads only 1 + |V| + |V|(|V|-1)/2 entries.
Result<MatchResult> match_graph(const DiagonalView& phi, const QubitIndexing& indexing,
                                double tol = kMatrixTolerance);

/// Checks d_xx = e^{-i sum alpha_j x_j} (-1)^{sum_{jk in E} x_j x_k} on every
/// basis string. The pairwise extraction alone does not imply this.
bool verify_full(const DiagonalView& phi, const MatchResult& result,
                 const QubitIndexing& indexing, double tol = kMatrixTolerance);

}  // namespace owc
