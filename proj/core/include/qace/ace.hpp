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
#include <optional>
#include <utility>
#include <variant>

#include "qace/linalg.hpp"
#include "qace/states.hpp"

namespace qace {

enum class AveragingMethod { kQuadrature, kMonteCarlo };

/// How the intervention pair is chosen: a Haar-random state together with
/// its antipode, or two independent Haar-random states.
enum class PairMode { kAntipodal, kIndependent };

struct AveragingConfig {
  AveragingMethod method = AveragingMethod::kQuadrature;
  int phi_nodes = 64;
  int theta_nodes = 32;
  long mc_samples = 100000;
  std::uint64_t seed = 1;
  PairMode pair_mode = PairMode::kAntipodal;

  /// phi_nodes >= 4, theta_nodes even and >= 4, mc_samples >= 100.
  void validate() const;
};

struct AceEstimate {
  double value = 0.0;
  AveragingMethod method = AveragingMethod::kQuadrature;
  /// Quadrature: |value - value at halved node counts|.
  /// Monte Carlo: sample standard deviation / sqrt(samples).
  double error_estimate = 0.0;
};

struct GateScenario {
  GateSpec gate;
};
struct MbqcScenario {
  DensityOp resource;
};
struct TeleportScenario {
  DensityOp resource;
};
using Scenario = std::variant<GateScenario, MbqcScenario, TeleportScenario>;

/// tr_A(U (|a><a| (x) |b><b|) U+): the second qubit's state after the gate,
/// when the first qubit was replaced by |a>.
DensityOp gate_output_state(const GateSpec& gate, const Ket& a, const Ket& b);

/// Average causal effect from the first input qubit onto the second output
/// qubit of a two-qubit gate: the mean over interventions (and over a
/// Haar-random second input) of the trace distance between the two
/// conditional outputs. 0 for local gates, 1 for SWAP.
AceEstimate ace_gate(const GateSpec& gate, const AveragingConfig& cfg);

/// One-way-model building block on resource state rho_in, first qubit
/// measured in the equatorial basis at angle phi_a, with the X by-product
/// correction folded in:
///   rho_B(do(a)) = tr_A(Pi_a rho) + X tr_A(Pi_aperp rho) X.
/// Returns (rho_B(do(a)), rho_B(do(aperp))). The two branch weights add to
/// one, so each output is normalized by construction.
std::pair<DensityOp, DensityOp> mbqc_output_state(const DensityOp& rho_in, double phi_a);

/// Equatorial average of the trace distance between the mbqc_output_state
/// pair. For quadrature only phi_nodes matters (the average is over one
/// angle).
AceEstimate ace_mbqc(const DensityOp& rho_in, const AveragingConfig& cfg);

/// Output of the standard teleportation circuit (CNOT 1->2, H on 1,
/// computational measurement of qubits 1,2, correction Z^s1 X^s2 on 3)
/// run on |a> with shared resource rho_in on qubits 2,3:
///   sum_s Z^s1 X^s2 tr_12(Pi_s U (|a><a| (x) rho_in) U+) X^s2 Z^s1.
DensityOp teleport_output_state(const DensityOp& rho_in, const Ket& a);

/// Full-Bloch-sphere average of the trace distance between teleportation
/// outputs for a and its antipode.
AceEstimate ace_teleport(const DensityOp& rho_in, const AveragingConfig& cfg);

/// Dispatch on the scenario tag.
AceEstimate ace(const Scenario& scenario, const AveragingConfig& cfg);

/// Complete elliptic integral of the second kind,
/// E(k) = Int_0^{pi/2} sqrt(1 - k^2 sin^2 x) dx, |k| <= 1,
/// by 64-node Gauss-Legendre (absolute error below 1e-10).
double elliptic_e(double k);

/// Reference values for the equatorial-measurement scenario:
///   F: (4/pi) sqrt(eps(1-eps))     G: 2 sqrt(eps(1-eps))
///   H: (2/pi) E(1-2eps)            ISO: eps
///   C: (2/pi)|p00+p11-p01-p10|     C', C'': 0
/// The classical families read their weights from `params`, defaulting to
/// classical_sweep_params(eps).
double closed_form_mbqc(StateFamily f, double eps,
                        const std::optional<ClassicalCorrelatedParams>& params = std::nullopt);

/// Closed form for a product resource state parameterized by Bloch angles:
/// (2/pi) sin(theta1) sqrt(cos^2(theta2) + sin^2(theta2) sin^2(phi2)).
/// Maximized at 2/pi; no product state exceeds it.
double separable_product_ace_mbqc(double theta1, double theta2, double phi2);

}  // namespace qace
