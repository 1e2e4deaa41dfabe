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

#include "owc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace owc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Live qubits with labels_[p] stored at bit p of the amplitude index.
class Machine {
 public:
  explicit Machine(const StateVector& input)
      : labels_(input.labels().rbegin(), input.labels().rend()),
        amps_(input.amplitudes().begin(), input.amplitudes().end()) {}

  void prepare(Label q) {
    const double h = 1.0 / std::sqrt(2.0);
    const std::size_t n = amps_.size();
    amps_.resize(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      amps_[k] *= h;
      amps_[n + k] = amps_[k];
    }
    labels_.push_back(q);
  }

  void entangle(Label a, Label b) {
    const std::uint64_t mask = bit(a) | bit(b);
    for (std::uint64_t k = 0; k < amps_.size(); ++k) {
      if ((k & mask) == mask) amps_[k] = -amps_[k];
    }
  }

  void pauli_x(Label q) {
    const std::uint64_t m = bit(q);
    for (std::uint64_t k = 0; k < amps_.size(); ++k) {
      if (!(k & m)) std::swap(amps_[k], amps_[k | m]);
    }
  }

  void pauli_z(Label q) {
    const std::uint64_t m = bit(q);
    for (std::uint64_t k = 0; k < amps_.size(); ++k) {
      if (k & m) amps_[k] = -amps_[k];
    }
  }

  void measure(Label q, double angle, int outcome) {
    const int p = position(q);
    const Complex w = (outcome ? -1.0 : 1.0) * std::polar(1.0, -angle);
    const double h = 1.0 / std::sqrt(2.0);
    const std::uint64_t low_mask = (std::uint64_t{1} << p) - 1;
    const std::size_t half = amps_.size() / 2;
    for (std::uint64_t j = 0; j < half; ++j) {
      const std::uint64_t k0 = ((j & ~low_mask) << 1) | (j & low_mask);
      amps_[j] = h * (amps_[k0] + w * amps_[k0 | (std::uint64_t{1} << p)]);
    }
    amps_.resize(half);
    labels_.erase(labels_.begin() + p);
  }

  StateVector finish(const std::vector<Label>& sorted_outputs) const {
    const int k = static_cast<int>(sorted_outputs.size());
    std::vector<int> target(labels_.size());
    for (std::size_t p = 0; p < labels_.size(); ++p) {
      const auto it = std::lower_bound(sorted_outputs.begin(), sorted_outputs.end(), labels_[p]);
      target[p] = k - 1 - static_cast<int>(it - sorted_outputs.begin());
    }
    std::vector<Complex> out(amps_.size());
    for (std::uint64_t idx = 0; idx < amps_.size(); ++idx) {
      std::uint64_t o = 0;
      for (std::size_t p = 0; p < target.size(); ++p) {
        if (idx >> p & 1) o |= std::uint64_t{1} << target[p];
      }
      out[o] = amps_[idx];
    }
    return StateVector(sorted_outputs, std::move(out));
  }

 private:
  int position(Label q) const {
    return static_cast<int>(std::find(labels_.begin(), labels_.end(), q) - labels_.begin());
  }
  std::uint64_t bit(Label q) const { return std::uint64_t{1} << position(q); }

  std::vector<Label> labels_;
  std::vector<Complex> amps_;
};

std::vector<Label> sorted(std::vector<Label> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::size_t count_measurements(const Pattern& p) {
  return static_cast<std::size_t>(std::count_if(p.commands.begin(), p.commands.end(),
                                                [](const Command& c) {
                                                  return std::holds_alternative<Measure>(c);
                                                }));
}

void require_valid(const Pattern& p) {
  const ValidationReport r = validate(p);
  if (!r.ok) {
    throw std::invalid_argument("invalid pattern: " + to_string(r.violation) + " at command " +
                                std::to_string(r.command_index) + ": " + r.message);
  }
}

// Assumes a validated pattern.
StateVector execute(const Pattern& p, const StateVector& input, std::span<const int> outcomes,
                    const std::vector<Label>& sorted_outputs) {
  Machine m(input);
  std::vector<std::pair<Label, int>> signals;  // measured qubit, outcome
  std::size_t next = 0;
  auto signal = [&](Label s) {
    for (const auto& [q, v] : signals) {
      if (q == s) return v;
    }
    return 0;
  };
  for (const Command& c : p.commands) {
    std::visit(Overloaded{
                   [&](const Prepare& x) { m.prepare(x.qubit); },
                   [&](const Entangle& x) { m.entangle(x.a, x.b); },
                   [&](const Measure& x) {
                     const int s = outcomes[next++];
                     m.measure(x.qubit, x.angle, s);
                     signals.emplace_back(x.qubit, s);
                   },
                   [&](const CorrectX& x) {
                     if (signal(x.signal)) m.pauli_x(x.qubit);
                   },
                   [&](const CorrectZ& x) {
                     if (signal(x.signal)) m.pauli_z(x.qubit);
                   },
               },
               c);
  }
  return m.finish(sorted_outputs);
}

}  // namespace

StateVector run_branch(const Pattern& p, const StateVector& input, std::span<const int> outcomes) {
  require_valid(p);
  const auto inputs = sorted(p.inputs);
  if (input.labels() != inputs) {
    throw std::invalid_argument("input state must be over the pattern inputs");
  }
  if (outcomes.size() != count_measurements(p)) {
    throw std::invalid_argument("expected one outcome per measurement");
  }
  for (int s : outcomes) {
    if (s != 0 && s != 1) throw std::invalid_argument("outcomes must be 0 or 1");
  }
  return execute(p, input, outcomes, sorted(p.outputs));
}

std::vector<BranchMap> branch_maps(const Pattern& p, const SimLimits& limits) {
  require_valid(p);
  const std::size_t measured = count_measurements(p);
  if (p.space.size() > static_cast<std::size_t>(limits.max_qubits) ||
      measured > static_cast<std::size_t>(limits.max_measured)) {
    throw std::length_error("pattern exceeds the simulation limits (" +
                            std::to_string(p.space.size()) + " qubits, " +
                            std::to_string(measured) + " measured)");
  }
  const auto inputs = sorted(p.inputs);
  const auto outputs = sorted(p.outputs);
  const std::size_t cols = std::size_t{1} << inputs.size();
  const std::size_t rows = std::size_t{1} << outputs.size();

  std::vector<BranchMap> maps;
  maps.reserve(std::size_t{1} << measured);
  std::vector<int> outcomes(measured);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << measured); ++s) {
    for (std::size_t j = 0; j < measured; ++j) {
      outcomes[j] = static_cast<int>(s >> (measured - 1 - j) & 1);
    }
    Matrix a(rows, cols);
    for (std::size_t x = 0; x < cols; ++x) {
      const StateVector col = execute(p, StateVector::basis(inputs, x), outcomes, outputs);
      for (std::size_t r = 0; r < rows; ++r) a(r, x) = col[r];
    }
    maps.push_back(BranchMap{outcomes, std::move(a)});
  }
  return maps;
}

VerificationReport check_deterministic_and_equal(const Pattern& p, const UnitaryMatrix& u,
                                                 double tol, const SimLimits& limits) {
  const std::vector<BranchMap> maps = branch_maps(p, limits);
  const Matrix& positive = maps.front().map;
  if (positive.rows() != u.dim() || positive.cols() != u.dim()) {
    throw std::invalid_argument("pattern and unitary dimensions differ");
  }
  VerificationReport report;
  for (const BranchMap& b : maps) {
    report.max_branch_discrepancy =
        std::max(report.max_branch_discrepancy, b.map.max_abs_diff(positive));
  }
  report.deterministic = report.max_branch_discrepancy <= tol;
  const std::size_t measured = maps.front().outcomes.size();
  const Matrix scaled = Complex(std::pow(2.0, 0.5 * static_cast<double>(measured))) * positive;
  report.max_entry_error = scaled.max_abs_diff(u.matrix());
  report.matches_unitary = report.max_entry_error <= tol;
  return report;
}

PhaseMapDiagonal positive_branch_phase_map(const Geometry& g, const AngleMap& angles) {
  const QubitIndexing indexing(g.vertices(), g.inputs(), g.outputs());
  for (const auto& [q, a] : angles) {
    if (!indexing.contains(q) || indexing.is_output(q)) {
      throw std::invalid_argument("angle given for qubit " + std::to_string(q) +
                                  ", which is not a non-output");
    }
  }
  const std::size_t dim = std::size_t{1} << g.size();
  std::vector<Complex> d(dim, Complex(1.0));
  for (const Edge& e : g.edges()) {
    const std::uint64_t mask =
        (std::uint64_t{1} << indexing.bit_of(e.a)) | (std::uint64_t{1} << indexing.bit_of(e.b));
    for (std::uint64_t k = 0; k < dim; ++k) {
      if ((k & mask) == mask) d[k] = -d[k];
    }
  }
  for (Label q : indexing.non_outputs()) {
    const auto it = angles.find(q);
    if (it == angles.end()) {
      throw std::invalid_argument("no angle for non-output " + std::to_string(q));
    }
    const Complex z = std::polar(1.0, -it->second);
    const std::uint64_t m = std::uint64_t{1} << indexing.bit_of(q);
    for (std::uint64_t k = 0; k < dim; ++k) {
      if (k & m) d[k] *= z;
    }
  }
  return PhaseMapDiagonal(g.size(), std::move(d));
}

}  // namespace owc
