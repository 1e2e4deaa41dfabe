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
#include <optional>
#include <stdexcept>
#include <vector>

#include "owc/core.hpp"

namespace owc {

/// The requested coefficient cannot be spread over the available slots.
class NoJointSolution : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Split of a unitary coefficient u_{pq} into equal-length terms.
struct SlotSolution {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  std::vector<Complex> terms;
};

/// Number of slots per coefficient, 2^(aux - num_inputs).
std::uint64_t slot_count(int aux, int num_inputs);

/// Number of antipodal (fully rotated) pairs the canonical split of u uses.
/// Only these pairs can be re-phased without changing the sum.
int antipodal_pair_count(Complex u, int aux, int num_inputs);

/// Returns 2^(aux - num_inputs) terms of modulus 2^(-aux/2) summing to u.
///
/// All terms start aligned with arg(u) (0 when u vanishes). Pairs are then
/// rotated to opposite angles: whole pairs by +-pi/2 until the remaining
/// excess is below one pair's length, then one pair by +-theta. Antipodal
/// pairs point along arg(u) +- pi/2 unless `pair_axis` is given, in which
/// case their first member points along `pair_axis`.
///
/// Throws NoJointSolution when |u| > 2^(aux/2 - num_inputs), or when a single
/// slot is available and |u| != 2^(-aux/2).
std::vector<Complex> solve_slots(Complex u, int aux, int num_inputs,
                                 std::optional<double> pair_axis = std::nullopt);

/// Position of a basis index over V inside the decomposition: output bits,
/// input bits and the remaining free bits.
struct SlotAddress {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  std::uint64_t slot = 0;
};

class DiagonalLayout {
 public:
  explicit DiagonalLayout(const QubitIndexing& indexing);

  SlotAddress locate(std::uint64_t k) const {
    return {out_.gather(k), in_.gather(k), free_.gather(k)};
  }
  std::uint64_t index_of(const SlotAddress& a) const {
    return out_.scatter(a.row) | in_.scatter(a.col) | free_.scatter(a.slot);
  }
  std::size_t free_bits() const { return free_.width(); }

 private:
  BitSelector out_;
  BitSelector in_;
  BitSelector free_;
};

/// Computation space, auxiliary count and one slot permutation per unitary
/// coefficient (row-major, p * dim + q). Inputs and outputs must be disjoint.
class DecompositionPlan {
 public:
  /// An empty permutation list means identity permutations throughout.
  DecompositionPlan(QubitIndexing indexing, std::vector<std::vector<int>> permutations = {});

  const QubitIndexing& indexing() const { return indexing_; }
  int aux() const { return aux_; }
  std::uint64_t slots() const { return slots_; }
  std::size_t coefficient_count() const { return coefficient_count_; }
  const std::vector<std::vector<int>>& permutations() const { return permutations_; }
  int permuted(std::size_t coefficient, std::uint64_t slot) const {
    return permutations_[coefficient][slot];
  }

 private:
  QubitIndexing indexing_;
  int aux_;
  std::uint64_t slots_;
  std::size_t coefficient_count_;
  std::vector<std::vector<int>> permutations_;
};

/// Solves every coefficient of U canonically, or along the given per-
/// coefficient pair axes (nullopt entries keep the canonical axis).
std::vector<SlotSolution> solve_all_slots(
    const UnitaryMatrix& u, int aux,
    const std::vector<std::optional<double>>& pair_axes = {});

/// Lazily evaluated phase map diagonal d_kk = 2^(aux/2) x^{sigma(slot(k))}_{p(k) q(k)}.
class PlannedDiagonal final : public DiagonalView {
 public:
  PlannedDiagonal(const DecompositionPlan& plan, const std::vector<SlotSolution>& slots);

  int num_qubits() const override { return plan_.indexing().size(); }
  Complex entry(std::uint64_t k) const override;

 private:
  const DecompositionPlan& plan_;
  const std::vector<SlotSolution>& slots_;
  DiagonalLayout layout_;
  std::uint64_t dim_;
  double scale_;
};

PhaseMapDiagonal enumerate_diagonal(const UnitaryMatrix& u, const DecompositionPlan& plan,
                                    const std::vector<SlotSolution>& slots);

/// True iff R Phi P equals U entrywise within `tol`.
bool verify_decomposition(const UnitaryMatrix& u, const PhaseMapDiagonal& phi,
                          const QubitIndexing& indexing, double tol = kMatrixTolerance);

}  // namespace owc
