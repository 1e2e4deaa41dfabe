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

#include "owc/phasemap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace owc {

namespace {

constexpr double kBoundSlack = 1e-12;

struct Split {
  std::uint64_t slots;
  double radius;
  double phase;
  std::uint64_t full_pairs;
  double remainder;
};

Split plan_split(Complex u, int aux, int num_inputs) {
  if (num_inputs < 0 || aux < num_inputs) {
    throw std::invalid_argument("need at least as many auxiliary qubits as inputs");
  }
  if (aux - num_inputs > 30) throw std::invalid_argument("too many slots");
  Split s{};
  s.slots = std::uint64_t{1} << (aux - num_inputs);
  s.radius = std::pow(2.0, -0.5 * aux);
  s.phase = std::arg(u);
  const double mag = std::abs(u);
  const double reach = static_cast<double>(s.slots) * s.radius;
  if (mag > reach + kBoundSlack) {
    throw NoJointSolution("|u| = " + std::to_string(mag) + " exceeds 2^(n/2-|I|) = " +
                          std::to_string(reach));
  }
  if (s.slots == 1) {
    if (std::abs(mag - s.radius) > kUnitTolerance) {
      throw NoJointSolution("single slot requires |u| = 2^(-n/2)");
    }
    return s;
  }
  const double excess = std::max(0.0, reach - mag);
  const std::uint64_t max_pairs = s.slots / 2;
  s.full_pairs = std::min<std::uint64_t>(
      max_pairs, static_cast<std::uint64_t>(std::floor(excess / (2.0 * s.radius))));
  s.remainder = s.full_pairs == max_pairs
                    ? 0.0
                    : std::clamp(excess - 2.0 * s.radius * static_cast<double>(s.full_pairs),
                                 0.0, 2.0 * s.radius);
  return s;
}

}  // namespace

std::uint64_t slot_count(int aux, int num_inputs) {
  if (aux < num_inputs) throw std::invalid_argument("aux < num_inputs");
  return std::uint64_t{1} << (aux - num_inputs);
}

int antipodal_pair_count(Complex u, int aux, int num_inputs) {
  return static_cast<int>(plan_split(u, aux, num_inputs).full_pairs);
}

std::vector<Complex> solve_slots(Complex u, int aux, int num_inputs,
                                 std::optional<double> pair_axis) {
  const Split s = plan_split(u, aux, num_inputs);
  if (s.slots == 1) return {std::polar(s.radius, s.phase)};

  std::vector<Complex> terms;
  terms.reserve(s.slots);
  const double half_pi = std::numbers::pi / 2;
  const double axis = pair_axis.value_or(s.phase + half_pi);
  for (std::uint64_t i = 0; i < s.full_pairs; ++i) {
    terms.push_back(std::polar(s.radius, axis));
    terms.push_back(std::polar(s.radius, axis + std::numbers::pi));
  }
  if (s.remainder > 0.0) {
    const double theta = std::acos(1.0 - s.remainder / (2.0 * s.radius));
    terms.push_back(std::polar(s.radius, s.phase + theta));
    terms.push_back(std::polar(s.radius, s.phase - theta));
  }
  while (terms.size() < s.slots) terms.push_back(std::polar(s.radius, s.phase));
  return terms;
}

// ---------------------------------------------------------------------------

DiagonalLayout::DiagonalLayout(const QubitIndexing& indexing) {
  if (!indexing.io_disjoint()) {
    throw std::invalid_argument("phase map enumeration requires disjoint inputs and outputs");
  }
  std::vector<Label> free;
  for (Label v : indexing.vertices()) {
    if (!indexing.is_input(v) && !indexing.is_output(v)) free.push_back(v);
  }
  out_ = indexing.selector(indexing.outputs());
  in_ = indexing.selector(indexing.inputs());
  free_ = indexing.selector(free);
}

DecompositionPlan::DecompositionPlan(QubitIndexing indexing,
                                     std::vector<std::vector<int>> permutations)
    : indexing_(std::move(indexing)), permutations_(std::move(permutations)) {
  const int k = static_cast<int>(indexing_.inputs().size());
  if (!indexing_.io_disjoint()) {
    throw std::invalid_argument("decomposition plan requires disjoint inputs and outputs");
  }
  if (indexing_.outputs().size() != indexing_.inputs().size()) {
    throw std::invalid_argument("decomposition plan requires |I| = |O|");
  }
  aux_ = indexing_.size() - k;
  if (aux_ < k) throw std::invalid_argument("decomposition plan requires n >= |I|");
  slots_ = slot_count(aux_, k);
  coefficient_count_ = std::size_t{1} << (2 * k);
  if (permutations_.empty()) {
    std::vector<int> id(slots_);
    for (std::uint64_t i = 0; i < slots_; ++i) id[i] = static_cast<int>(i);
    permutations_.assign(coefficient_count_, id);
  }
  if (permutations_.size() != coefficient_count_) {
    throw std::invalid_argument("expected one slot permutation per coefficient");
  }
  for (const auto& p : permutations_) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    bool ok = sorted.size() == slots_;
    for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == static_cast<int>(i);
    if (!ok) throw std::invalid_argument("slot permutation is not a permutation of the slots");
  }
}

std::vector<SlotSolution> solve_all_slots(const UnitaryMatrix& u, int aux,
                                          const std::vector<std::optional<double>>& pair_axes) {
  const std::size_t dim = u.dim();
  if (!pair_axes.empty() && pair_axes.size() != dim * dim) {
    throw std::invalid_argument("expected one pair axis per coefficient");
  }
  std::vector<SlotSolution> out;
  out.reserve(dim * dim);
  for (std::size_t p = 0; p < dim; ++p) {
    for (std::size_t q = 0; q < dim; ++q) {
      const auto axis = pair_axes.empty() ? std::nullopt : pair_axes[p * dim + q];
      out.push_back({p, q, solve_slots(u(p, q), aux, u.num_qubits(), axis)});
    }
  }
  return out;
}

PlannedDiagonal::PlannedDiagonal(const DecompositionPlan& plan,
                                 const std::vector<SlotSolution>& slots)
    : plan_(plan),
      slots_(slots),
      layout_(plan.indexing()),
      dim_(std::uint64_t{1} << plan.indexing().inputs().size()),
      scale_(std::pow(2.0, 0.5 * plan.aux())) {
  if (slots_.size() != plan.coefficient_count()) {
    throw std::invalid_argument("expected one slot solution per coefficient");
  }
  for (std::size_t c = 0; c < slots_.size(); ++c) {
    if (slots_[c].row != c / dim_ || slots_[c].col != c % dim_ ||
        slots_[c].terms.size() != plan.slots()) {
      throw std::invalid_argument("slot solution " + std::to_string(c) + " is malformed");
    }
  }
}

Complex PlannedDiagonal::entry(std::uint64_t k) const {
  const SlotAddress a = layout_.locate(k);
  const std::size_t c = a.row * dim_ + a.col;
  return scale_ * slots_[c].terms[plan_.permuted(c, a.slot)];
}

PhaseMapDiagonal enumerate_diagonal(const UnitaryMatrix& u, const DecompositionPlan& plan,
                                    const std::vector<SlotSolution>& slots) {
  if (static_cast<std::size_t>(u.num_qubits()) != plan.indexing().inputs().size()) {
    throw std::invalid_argument("unitary size does not match the plan's inputs");
  }
  const PlannedDiagonal view(plan, slots);
  std::vector<Complex> d(std::size_t{1} << plan.indexing().size());
  for (std::uint64_t k = 0; k < d.size(); ++k) d[k] = view.entry(k);
  return PhaseMapDiagonal(plan.indexing().size(), std::move(d));
}

bool verify_decomposition(const UnitaryMatrix& u, const PhaseMapDiagonal& phi,
                          const QubitIndexing& indexing, double tol) {
  return compose_rphip(indexing, phi).max_abs_diff(u.matrix()) < tol;
}

}  // namespace owc
