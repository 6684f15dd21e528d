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

#include <cstdint>

#include "qace/linalg.hpp"
#include "qace/states.hpp"

namespace qace {

/// SplitMix64 pseudorandom generator (Steele, Lea & Flood's constants):
/// state advances by 0x9E3779B97F4A7C15 and the output is finalized with
/// the 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB xor-shift-multiply mix.
/// Fully portable: identical seeds yield identical streams everywhere.
/// A generator is a single stream; concurrent use requires independent
/// streams obtained from split().
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller (two uniforms per pair, cached).
  double gaussian();

  /// Independent stream derived from (seed, index); deterministic and
  /// stable across platforms. Used to give parallel workers their own
  /// streams without sharing state.
  SeededRng split(std::uint64_t index) const;

 private:
  std::uint64_t state_;
  double cached_gaussian_ = 0.0;
  bool has_cached_gaussian_ = false;
};

/// Haar-random two-qubit pure state: four complex standard normals,
/// normalized.
Ket haar_pure_two_qubit(SeededRng& rng);

/// Haar-random single-qubit pure state.
Ket haar_pure_qubit(SeededRng& rng);

/// Hilbert-Schmidt-random mixed state rho = G G+ / tr(G G+) with G a 4x4
/// matrix of complex standard normals (Ginibre ensemble).
DensityOp ginibre_mixed_two_qubit(SeededRng& rng);

/// |psi><psi| (x) |phi><phi| with independent Haar single-qubit factors.
DensityOp random_product_state(SeededRng& rng);

/// Haar-random 2x2 unitary: a normalized Gaussian ket extended to an
/// orthonormal frame by Gram-Schmidt on a second Gaussian ket.
ComplexMatrix random_single_qubit_unitary(SeededRng& rng);

/// Q (x) P with independent Haar single-qubit factors Q, P.
GateSpec random_local_gate(SeededRng& rng);

}  // namespace qace
