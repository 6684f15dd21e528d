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

#include <optional>
#include <string>
#include <utility>

#include "qace/linalg.hpp"

namespace qace {

/// Bloch-sphere parameterization: theta in [0, pi], phi in [0, 2*pi).
struct BlochAngles {
  double theta;
  double phi;
  void validate() const;
};

/// Unit-norm state vector (norm within 1e-10 of 1).
class Ket {
 public:
  explicit Ket(ComplexMatrix column);

  int dim() const { return column_.rows(); }
  Complex amp(int i) const { return column_(i, 0); }
  const ComplexMatrix& column() const { return column_; }

  /// Rank-one projector |k><k|.
  ComplexMatrix projector() const;

 private:
  ComplexMatrix column_;
};

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
Ket bloch_ket(const BlochAngles& angles);

/// sin(theta/2)|0> - e^{i phi} cos(theta/2)|1>, orthogonal to bloch_ket.
Ket orthogonal_ket(const BlochAngles& angles);

/// Equatorial pair ((|0> + e^{i phi}|1>)/sqrt2, (|0> - e^{i phi}|1>)/sqrt2).
std::pair<Ket, Ket> equator_pair(double phi);

/// Named 4x4 unitary. Construction validates ||U+U - I||_inf <= tol.
struct GateSpec {
  std::string name;
  ComplexMatrix matrix;

  GateSpec(std::string name, ComplexMatrix matrix, double unitarity_tol = 1e-10);
};

enum class StandardGate { kCnot, kCz, kB, kSqrtSwap, kSwap };

GateSpec standard_gate(StandardGate g);
/// Parses "CNOT", "CZ", "B", "SQRT_SWAP", "SWAP" (case-insensitive).
GateSpec standard_gate(const std::string& name);
/// Q (x) P for single-qubit unitaries Q, P; named "LOCAL".
GateSpec local_gate(const ComplexMatrix& q, const ComplexMatrix& p);

// Single-qubit constants.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();

/// Two-qubit graph state (|0+> + |1->)/sqrt2 = (1,1,1,-1)/2.
Ket graph_state_g2();

/// Mixing weights of a classically correlated two-qubit state;
/// nonnegative, summing to 1 within 1e-12.
struct ClassicalCorrelatedParams {
  double p00, p01, p10, p11;
  void validate() const;
};

/// The resource-state families swept by the experiments.
///
///   kG    sqrt(eps)|0+> + sqrt(1-eps)|1->
///   kF    sqrt(eps)|00> + sqrt(1-eps)|11>   (Schmidt form; equals
///         (I (x) H) applied to the kG ket)
///   kH    (H (x) H) applied to the kG ket
///   kIso  eps |G2><G2| + (1-eps) I/4
///   kC    sum_ij p_ij (H|i><i|H) (x) |j><j|
///   kCPrime / kCDoublePrime: kC conjugated by H (x) I resp. H (x) H.
enum class StateFamily { kF, kG, kH, kIso, kC, kCPrime, kCDoublePrime };

/// Parses "F", "G", "H", "ISO", "C", "CPRIME", "CDPRIME" (case-insensitive).
StateFamily parse_family(const std::string& name);
std::string family_name(StateFamily f);

/// Default parameter path used when sweeping the classical families in eps:
/// p00 = p11 = eps/2, p01 = p10 = (1-eps)/2.
ClassicalCorrelatedParams classical_sweep_params(double eps);

/// Constructs the named family member. eps must lie in [0, 1]. The classical
/// families take their mixing weights from `params`; when absent,
/// classical_sweep_params(eps) is used.
DensityOp family_state(StateFamily f, double eps,
                       const std::optional<ClassicalCorrelatedParams>& params = std::nullopt);

/// Wootters concurrence of a two-qubit state: max(0, l1 - l2 - l3 - l4) with
/// l_i the descending square roots of the eigenvalues of
/// sqrt(rho) * (Y(x)Y rho* Y(x)Y) * sqrt(rho). Result in [0, 1].
double concurrence(const DensityOp& rho);

/// Gate-definition file format:
///   {"name": string, "matrix": 4x4 array of [re, im] pairs, row-major}
/// Unitarity is validated on load with tolerance 1e-8.
GateSpec load_gate_spec(const std::string& json_text);
std::string gate_spec_to_json(const GateSpec& gate);

}  // namespace qace
