// Copyright 2026 The qace authors
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
#include <initializer_list>
#include <span>
#include <vector>

#include "qace/errors.hpp"

namespace qace {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. The toolkit only ever needs dimensions
/// 2, 4 and 8, so everything here favors clarity over asymptotics.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  ComplexMatrix(int rows, int cols, std::initializer_list<Complex> entries);

  static ComplexMatrix identity(int n);
  static ComplexMatrix zero(int rows, int cols);
  /// Column vector from amplitudes.
  static ComplexMatrix column(std::span<const Complex> amplitudes);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Complex& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  /// max_ij |A_ij|
  double max_abs() const;
  /// max_ij |A_ij - A_ij^dagger|, for square matrices.
  double hermiticity_defect() const;
  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

/// Kronecker product, dims (rA*rB) x (cA*cB).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced matrix of a square operator on a tensor-product space.
/// `dims` are the subsystem dimensions (product must equal the matrix
/// dimension); `keep` lists the 0-based subsystems retained, in order.
/// Everything else is traced out; the trace is preserved.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep);

/// Eigenvalues of a Hermitian matrix, descending.
struct HermitianSpectrum {
  std::vector<double> eigenvalues;
};

/// Full eigensystem of a Hermitian matrix: eigenvalues descending, the k-th
/// column of `vectors` is the eigenvector for eigenvalues[k].
struct HermitianEigensystem {
  std::vector<double> eigenvalues;
  ComplexMatrix vectors;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Requires hermiticity_defect() <= 1e-10. Sweeps until the off-diagonal
/// Frobenius norm drops below 1e-12; throws ConvergenceError after 100
/// sweeps. This is the only eigensolver in the codebase: every spectrum the
/// toolkit needs comes from a Hermitian matrix of dimension at most 8.
HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m);
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m);

/// Hermitian PSD square root: S with S*S = M (entrywise within 1e-8).
/// Eigenvalues in [-1e-10, 0) are clamped to zero; anything below -1e-8
/// is rejected as not positive semidefinite.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m);

/// Hermitian, unit-trace, PSD matrix with validated invariants:
///   hermiticity defect <= 1e-10, |tr - 1| <= 1e-10, eigenvalues >= -1e-10.
class DensityOp {
 public:
  explicit DensityOp(ComplexMatrix m);

  int dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Trace distance (1/2) sum_i |lambda_i| over the eigenvalues of rho - sigma.
/// Result clamped to [0, 1].
double trace_distance(const DensityOp& rho, const DensityOp& sigma);

/// Same, for raw Hermitian unit-trace matrices the caller already trusts.
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

}  // namespace qace
