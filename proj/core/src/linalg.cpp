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

#include "qace/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qace {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-10;
constexpr double kJacobiOffTol = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::initializer_list<Complex> entries)
    : ComplexMatrix(rows, cols) {
  require(entries.size() == data_.size(), "entry count does not match dimensions");
  std::copy(entries.begin(), entries.end(), data_.begin());
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::column(std::span<const Complex> amplitudes) {
  ComplexMatrix m(static_cast<int>(amplitudes.size()), 1);
  std::copy(amplitudes.begin(), amplitudes.end(), m.data_.begin());
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex ComplexMatrix::trace() const {
  require(is_square(), "trace requires a square matrix");
  Complex t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  require(is_square(), "hermiticity defect requires a square matrix");
  double d = 0.0;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return d;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "dimension mismatch in +");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "dimension mismatch in -");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("dimension mismatch in *");
  ComplexMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      const Complex av = a(ia, ja);
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = av * b(ib, jb);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep) {
  require(m.is_square(), "partial trace requires a square matrix");
  int total = 1;
  for (int d : dims) {
    require(d > 0, "subsystem dimensions must be positive");
    total *= d;
  }
  require(total == m.rows(), "subsystem dimensions do not match matrix dimension");

  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(n, false);
  int kept_dim = 1;
  for (int k : keep) {
    require(k >= 0 && k < n, "keep index out of range");
    require(!kept[k], "duplicate keep index");
    kept[k] = true;
  }
  std::vector<int> keep_order(keep.begin(), keep.end());
  std::vector<int> traced;
  for (int i = 0; i < n; ++i)
    if (!kept[i]) traced.push_back(i);
  for (int k : keep_order) kept_dim *= dims[k];
  int traced_dim = total / kept_dim;

  // Row-major strides of each subsystem in the full index.
  std::vector<int> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  auto offset = [&](const std::vector<int>& subsystems, int flat) {
    int off = 0;
    for (int i = static_cast<int>(subsystems.size()) - 1; i >= 0; --i) {
      const int s = subsystems[i];
      off += (flat % dims[s]) * stride[s];
      flat /= dims[s];
    }
    return off;
  };

  ComplexMatrix out(kept_dim, kept_dim);
  for (int r = 0; r < kept_dim; ++r)
    for (int c = 0; c < kept_dim; ++c) {
      const int ro = offset(keep_order, r);
      const int co = offset(keep_order, c);
      Complex sum = 0.0;
      for (int t = 0; t < traced_dim; ++t) {
        const int to = offset(traced, t);
        sum += m(ro + to, co + to);
      }
      out(r, c) = sum;
    }
  return out;
}

namespace {

// One cyclic Jacobi pass infrastructure shared by the eigenvalue-only and
// full-eigensystem entry points. Works in place on a Hermitian copy.
struct JacobiState {
  ComplexMatrix a;
  ComplexMatrix v;
  bool want_vectors;
};

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

void rotate(JacobiState& st, int p, int q) {
  ComplexMatrix& a = st.a;
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex u = apq / r;
  const Complex su = s * u;
  const Complex suc = s * std::conj(u);

  const int n = a.rows();
  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - suc * akq;
    a(k, q) = su * akp + c * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }
  a(p, p) = c * c * app - 2.0 * s * c * r + s * s * aqq;
  a(q, q) = s * s * app + 2.0 * s * c * r + c * c * aqq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  if (st.want_vectors) {
    ComplexMatrix& v = st.v;
    for (int k = 0; k < n; ++k) {
      const Complex vkp = v(k, p);
      const Complex vkq = v(k, q);
      v(k, p) = c * vkp - suc * vkq;
      v(k, q) = su * vkp + c * vkq;
    }
  }
}

JacobiState jacobi_diagonalize(const ComplexMatrix& m, bool want_vectors) {
  require(m.is_square(), "eigensolver requires a square matrix");
  require(m.all_finite(), "eigensolver requires finite entries");
  if (m.hermiticity_defect() > kHermTol)
    throw ValidationError("matrix is not Hermitian within 1e-10");

  JacobiState st{m, want_vectors ? ComplexMatrix::identity(m.rows()) : ComplexMatrix(),
                 want_vectors};
  // Symmetrize so roundoff in the input cannot leak into the iteration.
  for (int r = 0; r < m.rows(); ++r)
    for (int c = r; c < m.cols(); ++c) {
      const Complex z = 0.5 * (st.a(r, c) + std::conj(st.a(c, r)));
      st.a(r, c) = z;
      st.a(c, r) = std::conj(z);
    }

  const int n = m.rows();
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(st.a) <= kJacobiOffTol) return st;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) rotate(st, p, q);
  }
  if (off_diagonal_norm(st.a) <= kJacobiOffTol) return st;
  throw ConvergenceError("Jacobi eigensolver did not converge in 100 sweeps");
}

}  // namespace

HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m) {
  JacobiState st = jacobi_diagonalize(m, false);
  std::vector<double> ev(m.rows());
  for (int i = 0; i < m.rows(); ++i) ev[i] = st.a(i, i).real();
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return HermitianSpectrum{std::move(ev)};
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  JacobiState st = jacobi_diagonalize(m, true);
  const int n = m.rows();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return st.a(i, i).real() > st.a(j, j).real(); });

  HermitianEigensystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = st.a(order[k], order[k]).real();
    for (int r = 0; r < n; ++r) out.vectors(r, k) = st.v(r, order[k]);
  }
  return out;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
  HermitianEigensystem es = hermitian_eigensystem(m);
  for (double& ev : es.eigenvalues) {
    if (ev < -1e-8) throw ValidationError("matrix is not PSD: eigenvalue below -1e-8");
    if (ev < 0.0) ev = 0.0;
  }
  const int n = m.rows();
  ComplexMatrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Complex sum = 0.0;
      for (int k = 0; k < n; ++k)
        sum += es.vectors(r, k) * std::sqrt(es.eigenvalues[k]) * std::conj(es.vectors(c, k));
      out(r, c) = sum;
    }
  return out;
}

DensityOp::DensityOp(ComplexMatrix m) : matrix_(std::move(m)) {
  require(matrix_.is_square(), "density operator must be square");
  require(matrix_.all_finite(), "density operator must have finite entries");
  if (matrix_.hermiticity_defect() > kHermTol)
    throw ValidationError("density operator is not Hermitian within 1e-10");
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0)) > kTraceTol)
    throw ValidationError("density operator trace differs from 1 by more than 1e-10");
  HermitianSpectrum sp = hermitian_eigenvalues(matrix_);
  if (sp.eigenvalues.back() < -kPsdTol)
    throw ValidationError("density operator has an eigenvalue below -1e-10");
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw ValidationError("trace distance requires equal dimensions");
  ComplexMatrix diff = rho;
  diff -= sigma;
  HermitianSpectrum sp = hermitian_eigenvalues(diff);
  double sum = 0.0;
  for (double ev : sp.eigenvalues) sum += std::abs(ev);
  return std::clamp(0.5 * sum, 0.0, 1.0);
}

double trace_distance(const DensityOp& rho, const DensityOp& sigma) {
  return trace_distance(rho.matrix(), sigma.matrix());
}

}  // namespace qace
