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

#include "owc/graphmatch.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace owc {

namespace {

double angle_or_zero(const AngleMap& angles, Label v) {
  auto it = angles.find(v);
  return it == angles.end() ? 0.0 : it->second;
}

}  // namespace

double normalize_angle(double a) {
  constexpr double kTwoPi = 2 * std::numbers::pi;
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r + 0.0;  // folds -0 into +0
}

Result<AngleMap> extract_angles(const DiagonalView& phi, const QubitIndexing& indexing,
                                double tol) {
  if (phi.num_qubits() != indexing.size()) {
    throw std::invalid_argument("phase map size does not match the computation space");
  }
  if (std::abs(phi.entry(0) - 1.0) > tol) {
    return Result<AngleMap>::fail("all-zero entry is not 1");
  }
  AngleMap angles;
  for (Label j : indexing.vertices()) {
    const Complex d = phi.entry(std::uint64_t{1} << indexing.bit_of(j));
    if (indexing.is_output(j)) {
      if (std::abs(d - 1.0) > tol) {
        return Result<AngleMap>::fail("weight-one entry of output " + std::to_string(j) +
                                          " is not 1",
                                      {j});
      }
      continue;
    }
    angles[j] = normalize_angle(-std::arg(d));
  }
  return angles;
}

Result<std::vector<Edge>> extract_edges(const DiagonalView& phi, const QubitIndexing& indexing,
                                        const AngleMap& angles, double tol) {
  std::vector<Edge> edges;
  const auto& vs = indexing.vertices();
  for (std::size_t x = 0; x < vs.size(); ++x) {
    for (std::size_t y = x + 1; y < vs.size(); ++y) {
      const Label j = vs[x];
      const Label k = vs[y];
      const std::uint64_t z =
          (std::uint64_t{1} << indexing.bit_of(j)) | (std::uint64_t{1} << indexing.bit_of(k));
      const Complex d = phi.entry(z);
      const Complex e = std::polar(1.0, -(angle_or_zero(angles, j) + angle_or_zero(angles, k)));
      if (std::abs(d + e) <= tol) {
        edges.emplace_back(j, k);
      } else if (std::abs(d - e) > tol) {
        return Result<std::vector<Edge>>::fail(
            "pair (" + std::to_string(j) + "," + std::to_string(k) +
                ") entry is not +-e^{-i(a_j+a_k)}",
            {j, k});
      }
    }
  }
  return edges;
}

Result<MatchResult> match_graph(const DiagonalView& phi, const QubitIndexing& indexing,
                                double tol) {
  auto angles = extract_angles(phi, indexing, tol);
  if (!angles) return angles.failure();
  auto edges = extract_edges(phi, indexing, *angles, tol);
  if (!edges) return edges.failure();
  return MatchResult{std::move(edges).value(), std::move(angles).value()};
}

bool verify_full(const DiagonalView& phi, const MatchResult& result,
                 const QubitIndexing& indexing, double tol) {
  if (phi.num_qubits() != indexing.size()) return false;
  std::vector<std::pair<int, double>> weights;
  for (const auto& [v, a] : result.angles) weights.emplace_back(indexing.bit_of(v), a);
  std::vector<std::uint64_t> edge_masks;
  for (const Edge& e : result.edges) {
    edge_masks.push_back((std::uint64_t{1} << indexing.bit_of(e.a)) |
                         (std::uint64_t{1} << indexing.bit_of(e.b)));
  }
  const std::uint64_t n = std::uint64_t{1} << indexing.size();
  for (std::uint64_t x = 0; x < n; ++x) {
    double phase = 0.0;
    for (const auto& [bit, a] : weights) {
      if ((x >> bit) & 1u) phase -= a;
    }
    int parity = 0;
    for (std::uint64_t m : edge_masks) parity ^= (x & m) == m ? 1 : 0;
    const Complex expected = std::polar(parity ? -1.0 : 1.0, phase);
    if (std::abs(phi.entry(x) - expected) > tol) return false;
  }
  return true;
}

}  // namespace owc
