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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "owc/result.hpp"

namespace owc {

using Complex = std::complex<double>;

/// Tolerance for unitarity and unit-modulus checks.
inline constexpr double kUnitTolerance = 1e-10;
/// Tolerance for end-to-end matrix and diagonal equality.
inline constexpr double kMatrixTolerance = 1e-9;

/// Undirected edge with a < b.
struct Edge {
  Label a = 0;
  Label b = 0;

  Edge() = default;
  Edge(Label x, Label y) : a(x < y ? x : y), b(x < y ? y : x) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Dense row-major complex matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> data() const { return data_; }

  Matrix adjoint() const;
  Matrix& operator*=(Complex s);

  /// Largest entrywise modulus of the difference; throws on shape mismatch.
  double max_abs_diff(const Matrix& other) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Complex s, Matrix m) { return m *= s; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// A square matrix of dimension 2^k with U U^dagger = 1 (checked on
/// construction).
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix m, double tol = kUnitTolerance);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

 private:
  Matrix m_;
  int num_qubits_ = 0;
};

/// Bit positions of an ordered label subset inside a basis index over V.
/// The first label of the subset becomes the most significant bit of the
/// gathered value.
class BitSelector {
 public:
  BitSelector() = default;
  explicit BitSelector(std::vector<int> shifts) : shifts_(std::move(shifts)) {}

  std::uint64_t gather(std::uint64_t index) const;
  std::uint64_t scatter(std::uint64_t value) const;
  std::size_t width() const { return shifts_.size(); }
  std::span<const int> shifts() const { return shifts_; }

 private:
  std::vector<int> shifts_;
};

/// The computation space V with its input and output subsets.
///
/// Labels are distinct non-negative integers, kept sorted. In a basis index
/// over V the smallest label is the most significant bit.
class QubitIndexing {
 public:
  QubitIndexing(std::vector<Label> vertices, std::vector<Label> inputs,
                std::vector<Label> outputs);

  const std::vector<Label>& vertices() const { return vertices_; }
  const std::vector<Label>& inputs() const { return inputs_; }
  const std::vector<Label>& outputs() const { return outputs_; }
  std::vector<Label> non_inputs() const;
  std::vector<Label> non_outputs() const;

  int size() const { return static_cast<int>(vertices_.size()); }
  bool contains(Label v) const;
  bool is_input(Label v) const;
  bool is_output(Label v) const;
  bool io_disjoint() const;

  /// Shift of label v in a basis index over V.
  int bit_of(Label v) const;
  BitSelector selector(std::span<const Label> subset) const;

 private:
  std::vector<Label> vertices_;
  std::vector<Label> inputs_;
  std::vector<Label> outputs_;
};

/// A diagonal of unit-modulus entries over 2^num_qubits basis states.
class PhaseMapDiagonal {
 public:
  PhaseMapDiagonal(int num_qubits, std::vector<Complex> diagonal,
                   double tol = kUnitTolerance);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return diagonal_.size(); }
  const Complex& operator[](std::size_t k) const { return diagonal_[k]; }
  std::span<const Complex> entries() const { return diagonal_; }

 private:
  int num_qubits_;
  std::vector<Complex> diagonal_;
};

/// On-demand access to the entries of a diagonal over 2^num_qubits states.
/// Consumers that only need a few entries never force the whole vector.
class DiagonalView {
 public:
  virtual ~DiagonalView() = default;
  virtual int num_qubits() const = 0;
  virtual Complex entry(std::uint64_t k) const = 0;
};

class PhaseMapView final : public DiagonalView {
 public:
  explicit PhaseMapView(const PhaseMapDiagonal& phi) : phi_(phi) {}
  int num_qubits() const override { return phi_.num_qubits(); }
  Complex entry(std::uint64_t k) const override { return phi_[k]; }

 private:
  const PhaseMapDiagonal& phi_;
};

/// Amplitudes over an ordered label set. Post-measurement states are not
/// renormalized, so no norm invariant is imposed.
class StateVector {
 public:
  StateVector(std::vector<Label> labels, std::vector<Complex> amplitudes);

  static StateVector basis(std::vector<Label> labels, std::uint64_t index);

  const std::vector<Label>& labels() const { return labels_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::vector<Complex>& mutable_amplitudes() { return amplitudes_; }
  int num_qubits() const { return static_cast<int>(labels_.size()); }
  const Complex& operator[](std::size_t k) const { return amplitudes_[k]; }

  double norm() const;

 private:
  std::vector<Label> labels_;
  std::vector<Complex> amplitudes_;
};

/// |x> -> |x> (x) |+...+> on the non-inputs.
StateVector apply_preparation(const StateVector& state, const QubitIndexing& indexing);

/// |x> -> sum over the non-output bits of x, i.e. 2^{|O^c|/2} <+...+|_{O^c}.
/// This is the 0/1 summation matrix that makes R Phi P reproduce U exactly.
StateVector apply_restriction(const StateVector& state, const QubitIndexing& indexing);

/// The normalized projection <+...+|_{O^c}; the exact adjoint of
/// apply_preparation with inputs and outputs swapped.
StateVector apply_plus_projection(const StateVector& state, const QubitIndexing& indexing);

/// R Phi P as a 2^|O| x 2^|I| matrix, built column by column.
Matrix compose_rphip(const QubitIndexing& indexing, const PhaseMapDiagonal& phi);

bool is_power_of_two(std::size_t n);
int log2_exact(std::size_t n);

}  // namespace owc
