// Copyright 2026 The quditc authors
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
#include <vector>

#include "quditc/ir.hpp"
#include "quditc/qudit.hpp"

// Exact dense simulator: the referee for every transformation the
// transpiler performs. Desk-scale only (dimension cap), dense matrices.

namespace quditc::sim {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultDimCap = 1024;

class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    cplx* row(std::size_t r) { return a_.data() + r * cols_; }
    const cplx* row(std::size_t r) const { return a_.data() + r * cols_; }

    Matrix dagger() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(cplx s) const;
    bool operator==(const Matrix& rhs) const = default;

    double max_abs() const;
    bool is_unitary(double tol = 1e-10) const;

    // In-place row updates backed by quditc::kernels.
    void mix_rows(std::size_t r0, std::size_t r1, cplx m00, cplx m01, cplx m10, cplx m11);
    void scale_row(std::size_t r, cplx s);

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

double max_abs_diff(const Matrix& a, const Matrix& b);

// ---- single-qudit operators in the d-level space (dense d x d) ----------

enum class Axis { X, Y, Z };

/// sigma_a^{ij}: the qubit Pauli extended with zeroes to d levels.
Matrix pauli(int d, Axis axis, int i, int j);
/// 1^{ij} = |i><i| + |j><j|
Matrix one_ij(int d, int i, int j);
/// R^{ij}(theta, phi) = exp(-i*theta*sigma_phi^{ij})     (no half angle)
Matrix r_nohalf(int d, int i, int j, double theta, double phi);
/// exp(-i*(theta/2)*sigma_phi^{ij})                      (half angle, canonical)
Matrix r_half(int d, int i, int j, double theta, double phi);
/// Ph^{i}(theta) = 1 + (e^{i*theta}-1)|i><i|
Matrix ph_matrix(int d, int i, double theta);
/// Rz^{ij}(theta) = exp(-i*theta*sigma_z^{ij})
Matrix rz_nohalf(int d, int i, int j, double theta);

// ---- two-qudit operators (dense d^2 x d^2, first qudit = low digit) ------

/// XX^{ij|kl}(theta) = exp(-i*theta*sigma_x^{ij} (x) sigma_x^{kl})
Matrix xx_matrix(int d, int i, int j, int k, int l, double theta);
/// CZ^{i|j}: |i,j> -> -|i,j>, everything else fixed.
Matrix cz_level(int d, int i, int j);
/// CX^{i|jk}: swaps |i,j> and |i,k>, everything else fixed.
Matrix cx_level(int d, int i, int j, int k);

/// Diagonal multi-controlled Z on n qubits: -1 on |1...1>.
Matrix mcz_qubit_matrix(int n);

// ---- circuit unitaries ---------------------------------------------------

/// Embeds a single qudit op into the full d^M space. Barriers are identity.
Matrix gate_matrix(const qd::Op& op, int d, int qudit_count);

/// Ordered product of a measurement-free circuit, left-to-right application.
/// Index convention: qudit 0 is the least significant base-d digit.
Matrix circuit_unitary(const qd::Circuit& c, std::size_t dim_cap = kDefaultDimCap);

/// Qubit-side unitary over the native sets (rz, r, xx, cz, mcz family, U, cx).
/// Qubit 0 is the least significant bit.
Matrix circuit_unitary(const ir::Circuit& c, std::size_t dim_cap = kDefaultDimCap);

/// d^M x 2^N isometry of a mapping: qubit basis states onto qudit levels,
/// slot k of a qudit = bit k of its level.
Matrix embedding_isometry(const qd::Mapping& m, const qd::QuditParams& params);

enum class EquivMode { GlobalPhase, DiagonalPhase };

struct EquivReport {
    bool ok = false;
    double max_deviation = 0.0;
};

/// GlobalPhase: exists |c|=1 with W*E = c*E*V. DiagonalPhase: rowwise scalars.
EquivReport check_equivalence(const Matrix& w, const Matrix& v, const Matrix& e, EquivMode mode,
                              double tol = 1e-9);

/// Exact Born probabilities of a basis-state input run through the circuit.
std::vector<double> simulate_probabilities(const qd::Circuit& c, std::size_t input,
                                           std::size_t dim_cap = kDefaultDimCap);
std::vector<double> simulate_probabilities(const ir::Circuit& c, std::size_t input,
                                           std::size_t dim_cap = kDefaultDimCap);

}  // namespace quditc::sim
