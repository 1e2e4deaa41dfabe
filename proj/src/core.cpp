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

#include "owc/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace owc {

namespace {

void sort_unique_checked(std::vector<Label>& labels, const char* what) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw std::invalid_argument(std::string("duplicate label in ") + what);
  }
  if (!labels.empty() && labels.front() < 0) {
    throw std::invalid_argument(std::string("negative label in ") + what);
  }
}

bool sorted_contains(const std::vector<Label>& v, Label x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && std::has_single_bit(n); }

int log2_exact(std::size_t n) {
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("dimension " + std::to_string(n) + " is not a power of two");
  }
  return std::countr_zero(n);
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Matrix& Matrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

double Matrix::max_abs_diff(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  }
  return worst;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// UnitaryMatrix

UnitaryMatrix::UnitaryMatrix(Matrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("unitary must be square");
  num_qubits_ = log2_exact(m_.rows());
  const double err = (m_ * m_.adjoint()).max_abs_diff(Matrix::identity(m_.rows()));
  if (err > tol) {
    throw std::invalid_argument("matrix is not unitary (deviation " + std::to_string(err) +
                                ")");
  }
}

// ---------------------------------------------------------------------------
// BitSelector

std::uint64_t BitSelector::gather(std::uint64_t index) const {
  std::uint64_t v = 0;
  for (int s : shifts_) v = (v << 1) | ((index >> s) & 1u);
  return v;
}

std::uint64_t BitSelector::scatter(std::uint64_t value) const {
  std::uint64_t k = 0;
  const std::size_t w = shifts_.size();
  for (std::size_t i = 0; i < w; ++i) {
    k |= ((value >> (w - 1 - i)) & 1u) << shifts_[i];
  }
  return k;
}

// ---------------------------------------------------------------------------
// QubitIndexing

QubitIndexing::QubitIndexing(std::vector<Label> vertices, std::vector<Label> inputs,
                             std::vector<Label> outputs)
    : vertices_(std::move(vertices)), inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  sort_unique_checked(vertices_, "vertices");
  sort_unique_checked(inputs_, "inputs");
  sort_unique_checked(outputs_, "outputs");
  if (vertices_.size() > 62) throw std::invalid_argument("too many qubits for a basis index");
  for (Label i : inputs_) {
    if (!sorted_contains(vertices_, i)) {
      throw std::invalid_argument("input " + std::to_string(i) + " is not a vertex");
    }
  }
  for (Label o : outputs_) {
    if (!sorted_contains(vertices_, o)) {
      throw std::invalid_argument("output " + std::to_string(o) + " is not a vertex");
    }
  }
}

std::vector<Label> QubitIndexing::non_inputs() const {
  std::vector<Label> out;
  std::set_difference(vertices_.begin(), vertices_.end(), inputs_.begin(), inputs_.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<Label> QubitIndexing::non_outputs() const {
  std::vector<Label> out;
  std::set_difference(vertices_.begin(), vertices_.end(), outputs_.begin(), outputs_.end(),
                      std::back_inserter(out));
  return out;
}

bool QubitIndexing::contains(Label v) const { return sorted_contains(vertices_, v); }
bool QubitIndexing::is_input(Label v) const { return sorted_contains(inputs_, v); }
bool QubitIndexing::is_output(Label v) const { return sorted_contains(outputs_, v); }

bool QubitIndexing::io_disjoint() const {
  for (Label i : inputs_) {
    if (is_output(i)) return false;
  }
  return true;
}

int QubitIndexing::bit_of(Label v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw std::invalid_argument("label " + std::to_string(v) + " is not a vertex");
  }
  return size() - 1 - static_cast<int>(it - vertices_.begin());
}

BitSelector QubitIndexing::selector(std::span<const Label> subset) const {
  std::vector<int> shifts;
  shifts.reserve(subset.size());
  for (Label v : subset) shifts.push_back(bit_of(v));
  return BitSelector(std::move(shifts));
}

// ---------------------------------------------------------------------------
// PhaseMapDiagonal

PhaseMapDiagonal::PhaseMapDiagonal(int num_qubits, std::vector<Complex> diagonal, double tol)
    : num_qubits_(num_qubits), diagonal_(std::move(diagonal)) {
  if (num_qubits < 0 || num_qubits > 30) throw std::invalid_argument("bad qubit count");
  if (diagonal_.size() != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument("phase map length does not match 2^num_qubits");
  }
  for (std::size_t k = 0; k < diagonal_.size(); ++k) {
    if (std::abs(std::abs(diagonal_[k]) - 1.0) > tol) {
      throw std::invalid_argument("phase map entry " + std::to_string(k) +
                                  " is not of unit modulus");
    }
  }
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(std::vector<Label> labels, std::vector<Complex> amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw std::invalid_argument("state labels must be sorted and distinct");
  }
  if (labels_.size() > 62 || amplitudes_.size() != (std::size_t{1} << labels_.size())) {
    throw std::invalid_argument("amplitude count does not match label count");
  }
}

StateVector StateVector::basis(std::vector<Label> labels, std::uint64_t index) {
  std::vector<Complex> amps(std::size_t{1} << labels.size());
  if (index >= amps.size()) throw std::invalid_argument("basis index out of range");
  amps[index] = 1.0;
  return StateVector(std::move(labels), std::move(amps));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// Preparation and restriction

StateVector apply_preparation(const StateVector& state, const QubitIndexing& indexing) {
  if (state.labels() != indexing.inputs()) {
    throw std::invalid_argument("state labels do not match the input set");
  }
  const auto aux = indexing.non_inputs();
  const BitSelector in_sel = indexing.selector(indexing.inputs());
  const BitSelector aux_sel = indexing.selector(aux);
  const double scale = std::pow(2.0, -0.5 * static_cast<double>(aux.size()));

  std::vector<Complex> out(std::size_t{1} << indexing.size());
  const std::uint64_t n_aux = std::uint64_t{1} << aux.size();
  for (std::uint64_t x = 0; x < state.amplitudes().size(); ++x) {
    const Complex a = state[x] * scale;
    if (a == Complex{}) continue;
    const std::uint64_t base = in_sel.scatter(x);
    for (std::uint64_t y = 0; y < n_aux; ++y) out[base | aux_sel.scatter(y)] = a;
  }
  return StateVector(indexing.vertices(), std::move(out));
}

namespace {

StateVector sum_out_non_outputs(const StateVector& state, const QubitIndexing& indexing,
                                double scale) {
  if (state.labels() != indexing.vertices()) {
    throw std::invalid_argument("state labels do not match the computation space");
  }
  const BitSelector out_sel = indexing.selector(indexing.outputs());
  std::vector<Complex> out(std::size_t{1} << indexing.outputs().size());
  for (std::uint64_t k = 0; k < state.amplitudes().size(); ++k) {
    out[out_sel.gather(k)] += state[k];
  }
  if (scale != 1.0) {
    for (auto& z : out) z *= scale;
  }
  return StateVector(indexing.outputs(), std::move(out));
}

}  // namespace

StateVector apply_restriction(const StateVector& state, const QubitIndexing& indexing) {
  return sum_out_non_outputs(state, indexing, 1.0);
}

StateVector apply_plus_projection(const StateVector& state, const QubitIndexing& indexing) {
  const double n = static_cast<double>(indexing.size() - indexing.outputs().size());
  return sum_out_non_outputs(state, indexing, std::pow(2.0, -0.5 * n));
}

Matrix compose_rphip(const QubitIndexing& indexing, const PhaseMapDiagonal& phi) {
  if (indexing.inputs().size() != indexing.outputs().size()) {
    throw std::invalid_argument("R Phi P needs |I| = |O|");
  }
  if (phi.num_qubits() != indexing.size()) {
    throw std::invalid_argument("phase map size does not match the computation space");
  }
  const std::size_t dim_in = std::size_t{1} << indexing.inputs().size();
  const std::size_t dim_out = std::size_t{1} << indexing.outputs().size();
  Matrix out(dim_out, dim_in);
  for (std::size_t q = 0; q < dim_in; ++q) {
    StateVector s = apply_preparation(StateVector::basis(indexing.inputs(), q), indexing);
    auto& amps = s.mutable_amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) amps[k] *= phi[k];
    const StateVector col = apply_restriction(s, indexing);
    for (std::size_t p = 0; p < dim_out; ++p) out(p, q) = col[p];
  }
  return out;
}

}  // namespace owc
