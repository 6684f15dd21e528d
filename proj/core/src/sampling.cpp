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

#include "qace/sampling.hpp"

#include <cmath>
#include <numbers>

namespace qace {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t SeededRng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double SeededRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::gaussian() {
  if (has_cached_gaussian_) {
    has_cached_gaussian_ = false;
    return cached_gaussian_;
  }
  // Box-Muller; u clamped away from 0 so log stays finite.
  double u = uniform();
  if (u < 0x1.0p-60) u = 0x1.0p-60;
  const double v = uniform();
  const double r = std::sqrt(-2.0 * std::log(u));
  const double angle = 2.0 * std::numbers::pi * v;
  cached_gaussian_ = r * std::sin(angle);
  has_cached_gaussian_ = true;
  return r * std::cos(angle);
}

SeededRng SeededRng::split(std::uint64_t index) const {
  return SeededRng(mix64(state_ ^ (kGolden * (index + 1))));
}

namespace {

ComplexMatrix gaussian_column(SeededRng& rng, int dim) {
  ComplexMatrix m(dim, 1);
  for (int i = 0; i < dim; ++i) m(i, 0) = Complex(rng.gaussian(), rng.gaussian());
  return m;
}

Ket normalized_ket(ComplexMatrix column) {
  const double norm = column.frobenius_norm();
  column *= Complex(1.0 / norm);
  return Ket(std::move(column));
}

}  // namespace

Ket haar_pure_two_qubit(SeededRng& rng) { return normalized_ket(gaussian_column(rng, 4)); }

Ket haar_pure_qubit(SeededRng& rng) { return normalized_ket(gaussian_column(rng, 2)); }

DensityOp ginibre_mixed_two_qubit(SeededRng& rng) {
  ComplexMatrix g(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = Complex(rng.gaussian(), rng.gaussian());
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  // Symmetrize the roundoff so the invariant check cannot trip.
  ComplexMatrix herm = rho;
  herm += rho.adjoint();
  herm *= Complex(0.5);
  return DensityOp(std::move(herm));
}

DensityOp random_product_state(SeededRng& rng) {
  const Ket psi = haar_pure_qubit(rng);
  const Ket phi = haar_pure_qubit(rng);
  return DensityOp(tensor_product(psi.projector(), phi.projector()));
}

ComplexMatrix random_single_qubit_unitary(SeededRng& rng) {
  const Ket first = haar_pure_qubit(rng);
  // Gram-Schmidt a second Gaussian ket against the first column.
  ComplexMatrix w = gaussian_column(rng, 2);
  const Complex overlap =
      std::conj(first.amp(0)) * w(0, 0) + std::conj(first.amp(1)) * w(1, 0);
  w(0, 0) -= overlap * first.amp(0);
  w(1, 0) -= overlap * first.amp(1);
  const Ket second = normalized_ket(std::move(w));
  return ComplexMatrix(2, 2,
                       {first.amp(0), second.amp(0),  //
                        first.amp(1), second.amp(1)});
}

GateSpec random_local_gate(SeededRng& rng) {
  const ComplexMatrix q = random_single_qubit_unitary(rng);
  const ComplexMatrix p = random_single_qubit_unitary(rng);
  return local_gate(q, p);
}

}  // namespace qace
