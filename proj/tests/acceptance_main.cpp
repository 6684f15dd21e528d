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

// Acceptance suite: the quantitative contract of the toolkit. Each criterion
// prints one PASS/FAIL line; the binary exits nonzero if anything failed.
//
//  1. gate table reproduction at default quadrature settings
//  2. one-way-model closed forms across all state families
//  3. separable ceilings (one-way 2/pi, teleportation 1/2) on sampled
//     product states, plus the product closed form
//  4. teleportation anchors and the F-family upper envelope
//  5. concurrence envelope for one-way values of Haar pure states
//  6. entanglement advantage of the G and H families over separable states
//  7. property suites (metric axioms, basis invariance, direction symmetry,
//     convexity, MC/quadrature agreement, self-convergence, coarse-graining
//     oracle)
//  8. byte-identical scatter reruns

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qace/ace.hpp"
#include "qace/causal.hpp"
#include "qace/quadrature.hpp"
#include "qace/sampling.hpp"
#include "qace/states.hpp"

using qace::AveragingConfig;
using qace::AveragingMethod;
using qace::BlochAngles;
using qace::Complex;
using qace::ComplexMatrix;
using qace::DensityOp;
using qace::Ket;
using qace::StateFamily;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

AveragingConfig quad(int phi, int theta) {
  AveragingConfig cfg;
  cfg.phi_nodes = phi;
  cfg.theta_nodes = theta;
  return cfg;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- criterion 1 -------------------------------------------------------------

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const AveragingConfig defaults;  // quadrature, 64 x 32

  struct Target {
    const char* name;
    double expected;
    double tolerance;
  };
  const std::vector<Target> targets = {
      {"SWAP", 1.0, 1e-6},          {"CNOT", kPi / 8.0, 1e-4}, {"CZ", kPi / 8.0, 1e-4},
      {"B", 0.5878, 1e-3},          {"SQRT_SWAP", 0.6427, 1e-3},
  };
  for (const Target& t : targets) {
    const double v = qace::ace_gate(qace::standard_gate(t.name), defaults).value;
    report(1, std::string("gate ") + t.name, std::abs(v - t.expected) <= t.tolerance,
           "value " + fmt(v) + " expected " + fmt(t.expected) + " +- " + fmt(t.tolerance));
  }

  qace::SeededRng rng(424242);
  double worst_local = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double v = qace::ace_gate(qace::random_local_gate(rng), defaults).value;
    worst_local = std::max(worst_local, v);
  }
  report(1, "20 random local gates", worst_local <= 1e-6,
         "largest value " + fmt(worst_local));
  report(1, "runtime", true, fmt(seconds_since(t0)) + " s for the full table");
}

// --- criterion 2 -------------------------------------------------------------

void criterion2() {
  // The closed-form grid: a fine equatorial rule resolves the |cos|-type
  // integrands of the F and C families well below 1e-5.
  const AveragingConfig fine = quad(8192, 4);

  const std::vector<StateFamily> families = {
      StateFamily::kF, StateFamily::kG,      StateFamily::kH,
      StateFamily::kIso, StateFamily::kC,    StateFamily::kCPrime,
      StateFamily::kCDoublePrime};
  double worst = 0.0;
  std::string worst_at = "-";
  for (StateFamily f : families) {
    for (int i = 0; i <= 20; ++i) {
      const double eps = i / 20.0;
      const double numeric = qace::ace_mbqc(qace::family_state(f, eps), fine).value;
      const double closed = qace::closed_form_mbqc(f, eps);
      const double diff = std::abs(numeric - closed);
      if (diff > worst) {
        worst = diff;
        worst_at = qace::family_name(f) + " eps=" + fmt(eps);
      }
    }
  }
  report(2, "closed forms over 7 families x 21 points", worst <= 1e-5,
         "worst |numeric - closed| " + fmt(worst) + " at " + worst_at);

  const double g2 = qace::ace_mbqc(DensityOp(qace::graph_state_g2().projector()), fine).value;
  report(2, "graph-state anchor", std::abs(g2 - 1.0) <= 1e-9, "value " + fmt(g2));

  const double r = 1.0 / std::sqrt(2.0);
  const DensityOp plus_zero(Ket(ComplexMatrix(4, 1, {r, 0, r, 0})).projector());
  const double po = qace::ace_mbqc(plus_zero, fine).value;
  report(2, "|+0> anchor at 2/pi", std::abs(po - 2.0 / kPi) <= 1e-6,
         "value " + fmt(po) + " vs " + fmt(2.0 / kPi));

  const qace::ClassicalCorrelatedParams p{0.37, 0.22, 0.21, 0.20};
  const double cp =
      qace::ace_mbqc(qace::family_state(StateFamily::kCPrime, 0.0, p), fine).value;
  const double cpp =
      qace::ace_mbqc(qace::family_state(StateFamily::kCDoublePrime, 0.0, p), fine).value;
  report(2, "rotated classical anchors at zero", cp <= 1e-9 && cpp <= 1e-9,
         "values " + fmt(cp) + ", " + fmt(cpp));
}

// --- criterion 3 -------------------------------------------------------------

void criterion3() {
  const int n = 10000;
  const double mbqc_bound = 2.0 / kPi;

  {
    qace::SeededRng rng(31337);
    const AveragingConfig fine = quad(8192, 4);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const double v = qace::ace_mbqc(qace::random_product_state(rng), fine).value;
      worst = std::max(worst, v);
    }
    report(3, "one-way separable ceiling (10000 product states)",
           worst <= mbqc_bound + 1e-6,
           "max " + fmt(worst) + " vs bound " + fmt(mbqc_bound));
  }

  {
    qace::SeededRng rng(271828);
    // Screen at a moderate grid; re-evaluate anything near the ceiling at a
    // fine grid before judging it.
    const AveragingConfig screen = quad(128, 64);
    const AveragingConfig fine = quad(2048, 64);
    std::vector<DensityOp> hot;
    double worst_screen = 0.0;
    for (int i = 0; i < n; ++i) {
      const DensityOp rho = qace::random_product_state(rng);
      const double v = qace::ace_teleport(rho, screen).value;
      if (v > 0.5 - 5e-3)
        hot.push_back(rho);
      else
        worst_screen = std::max(worst_screen, v);
    }
    double worst_fine = 0.0;
    for (const DensityOp& rho : hot)
      worst_fine = std::max(worst_fine, qace::ace_teleport(rho, fine).value);
    const bool ok = worst_screen <= 0.5 && worst_fine <= 0.5 + 1e-6;
    report(3, "teleport separable ceiling (10000 product states)", ok,
           "max " + fmt(std::max(worst_screen, worst_fine)) + " (" +
               std::to_string(hot.size()) + " refined) vs bound 0.5");
  }

  {
    qace::SeededRng rng(161803);
    const AveragingConfig fine = quad(8192, 4);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double t1 = kPi * rng.uniform();
      const double t2 = kPi * rng.uniform();
      const double p2 = 2.0 * kPi * rng.uniform();
      const Ket psi = qace::bloch_ket({t1, 2.0 * kPi * rng.uniform()});
      const Ket phi = qace::bloch_ket({t2, p2});
      const DensityOp rho(tensor_product(psi.projector(), phi.projector()));
      const double numeric = qace::ace_mbqc(rho, fine).value;
      const double closed = qace::separable_product_ace_mbqc(t1, t2, p2);
      worst = std::max(worst, std::abs(numeric - closed));
    }
    report(3, "product closed form vs engine (1000 angle triples)", worst <= 1e-5,
           "worst difference " + fmt(worst));
  }
}

// --- criterion 4 -------------------------------------------------------------

void criterion4() {
  const AveragingConfig defaults;

  const double r = 1.0 / std::sqrt(2.0);
  const DensityOp bell(Ket(ComplexMatrix(4, 1, {r, 0, 0, r})).projector());
  const double bell_value = qace::ace_teleport(bell, defaults).value;
  report(4, "Bell anchor", std::abs(bell_value - 1.0) <= 1e-4, "value " + fmt(bell_value));

  ComplexMatrix mixed = ComplexMatrix::identity(4);
  mixed *= Complex(0.25);
  const double mixed_value = qace::ace_teleport(DensityOp(mixed), defaults).value;
  report(4, "maximally mixed anchor", mixed_value <= 1e-6, "value " + fmt(mixed_value));

  // F-family curve: sample eps in [0, 1/2] so the concurrence 2 sqrt(e(1-e))
  // is strictly increasing; the curve must increase with it.
  std::vector<double> curve;
  bool monotone = true;
  for (int i = 0; i <= 25; ++i) {
    const double eps = 0.5 * i / 25.0;
    curve.push_back(
        qace::ace_teleport(qace::family_state(StateFamily::kF, eps), defaults).value);
    if (i > 0 && curve[i] < curve[i - 1] - 1e-9) monotone = false;
  }
  report(4, "F-family curve monotone in concurrence", monotone,
         "endpoints " + fmt(curve.front()) + " -> " + fmt(curve.back()));

  // The F family dominates Haar pure states of equal concurrence.
  qace::SeededRng rng(577215);
  const AveragingConfig sample_cfg = quad(128, 64);
  double worst_excess = -1.0;
  for (int i = 0; i < 10000; ++i) {
    const Ket psi = qace::haar_pure_two_qubit(rng);
    const DensityOp rho(psi.projector());
    const double value = qace::ace_teleport(rho, sample_cfg).value;
    const double c = qace::concurrence(rho);
    // Invert c = 2 sqrt(e(1-e)) on the increasing branch.
    const double eps = 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - c * c)));
    const double envelope =
        qace::ace_teleport(qace::family_state(StateFamily::kF, eps), defaults).value;
    worst_excess = std::max(worst_excess, value - envelope);
  }
  report(4, "F-family envelope over 10000 pure states", worst_excess <= 2e-3,
         "worst excess " + fmt(worst_excess));
}

// --- criterion 5 -------------------------------------------------------------

void criterion5() {
  qace::SeededRng rng(141421);
  const AveragingConfig cfg = quad(512, 4);
  double worst_upper = -1.0, worst_lower = -1.0, worst_sharp = -1.0;
  int above_g = 0;
  for (int i = 0; i < 10000; ++i) {
    const Ket psi = qace::haar_pure_two_qubit(rng);
    const DensityOp rho(psi.projector());
    const double value = qace::ace_mbqc(rho, cfg).value;
    const double c = qace::concurrence(rho);
    worst_upper = std::max(worst_upper, value - c);
    worst_lower = std::max(worst_lower, (2.0 / kPi) * c - value);
    if (value - c > 2e-3) ++above_g;
    // Elliptic curve through the same concurrence: the H family
    // reparameterized by c = 2 sqrt(eps(1-eps)).
    const double h_curve =
        2.0 / kPi * qace::elliptic_e(std::sqrt(std::max(0.0, 1.0 - c * c)));
    worst_sharp = std::max(worst_sharp, value - h_curve);
  }

  report(5, "F-curve lower envelope over 10000 pure states", worst_lower <= 2e-3,
         "below (2/pi)C by at most " + fmt(worst_lower));
  // The stated upper envelope (the concurrence itself, i.e. the G curve)
  // cannot hold: |+0> scores 2/pi at zero concurrence (criterion 2), and the
  // product closed form of criterion 3 is positive for almost every product
  // state, so near-product samples must exceed C. Kept as stated, reported
  // honestly.
  report(5, "G-curve upper envelope over 10000 pure states (as stated)",
         worst_upper <= 2e-3,
         "above C by up to " + fmt(worst_upper) + " for " + std::to_string(above_g) +
             " of 10000 samples; mutually inconsistent with the 2/pi anchors");
  // The sharp upper envelope through the same axis is the elliptic curve of
  // the doubly rotated family; it also pins the |+0> endpoint at (0, 2/pi).
  report(5, "elliptic upper envelope (sharp form, diagnostic)", worst_sharp <= 2e-3,
         "above (2/pi)E(sqrt(1-C^2)) by at most " + fmt(worst_sharp));
}

// --- criterion 6 -------------------------------------------------------------

void criterion6() {
  const AveragingConfig fine = quad(8192, 4);
  const double bound = 2.0 / kPi;
  bool ok = true;
  std::string detail;

  for (int i = 1; i < 20; ++i) {  // interior grid points
    const double eps = i / 20.0;
    const double g_closed = qace::closed_form_mbqc(StateFamily::kG, eps);
    const double g_numeric = qace::ace_mbqc(qace::family_state(StateFamily::kG, eps), fine).value;
    const double c = 2.0 * std::sqrt(eps * (1.0 - eps));
    if (c > bound && !(g_closed > bound && g_numeric > bound)) {
      ok = false;
      detail = "G family fails at eps=" + fmt(eps);
    }
    const double h_closed = qace::closed_form_mbqc(StateFamily::kH, eps);
    const double h_numeric = qace::ace_mbqc(qace::family_state(StateFamily::kH, eps), fine).value;
    if (!(h_closed > bound && h_numeric > bound)) {
      ok = false;
      detail = "H family fails at eps=" + fmt(eps);
    }
  }
  if (ok) detail = "G curve beats 2/pi whenever C does; H curve beats it on (0,1)";
  report(6, "entanglement advantage witness", ok, detail);
}

// --- criterion 7 -------------------------------------------------------------

void criterion7() {
  // Metric axioms.
  {
    qace::SeededRng rng(101010);
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      const DensityOp a = qace::ginibre_mixed_two_qubit(rng);
      const DensityOp b = qace::ginibre_mixed_two_qubit(rng);
      const DensityOp c = qace::ginibre_mixed_two_qubit(rng);
      const double ab = trace_distance(a, b);
      if (std::abs(ab - trace_distance(b, a)) > 1e-10) ok = false;
      if (ab > trace_distance(a, c) + trace_distance(c, b) + 1e-10) ok = false;
      if (trace_distance(a, a) > 1e-9) ok = false;
    }
    report(7, "trace-distance metric axioms", ok, "200 sampled triples");
  }

  // Local-basis invariance of the gate value.
  {
    qace::SeededRng rng(202020);
    const AveragingConfig defaults;
    double worst = 0.0;
    for (const char* name : {"CNOT", "B"}) {
      const qace::GateSpec base = qace::standard_gate(name);
      const double reference = qace::ace_gate(base, defaults).value;
      for (int i = 0; i < 3; ++i) {
        const ComplexMatrix pre = tensor_product(qace::random_single_qubit_unitary(rng),
                                                 qace::random_single_qubit_unitary(rng));
        const ComplexMatrix post = tensor_product(qace::random_single_qubit_unitary(rng),
                                                  qace::random_single_qubit_unitary(rng));
        const qace::GateSpec rotated("rotated", post * base.matrix * pre);
        worst = std::max(worst,
                         std::abs(qace::ace_gate(rotated, defaults).value - reference));
      }
    }
    report(7, "local-basis invariance", worst <= 2e-3, "worst shift " + fmt(worst));
  }

  // CNOT direction symmetry.
  {
    const AveragingConfig defaults;
    const ComplexMatrix reversed(4, 4, {1, 0, 0, 0,  //
                                        0, 0, 0, 1,  //
                                        0, 0, 1, 0,  //
                                        0, 1, 0, 0});
    const double forward = qace::ace_gate(qace::standard_gate("CNOT"), defaults).value;
    const double backward = qace::ace_gate(qace::GateSpec("CNOT_rev", reversed), defaults).value;
    report(7, "CNOT direction symmetry", std::abs(forward - backward) <= 2e-3,
           fmt(forward) + " vs " + fmt(backward));
  }

  // Convexity of the one-way value in the resource state.
  {
    qace::SeededRng rng(303030);
    const AveragingConfig cfg = quad(512, 4);
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
      const DensityOp r1 = qace::ginibre_mixed_two_qubit(rng);
      const DensityOp r2 = qace::ginibre_mixed_two_qubit(rng);
      const double p = rng.uniform();
      ComplexMatrix mix = r1.matrix();
      mix *= Complex(p);
      ComplexMatrix second = r2.matrix();
      second *= Complex(1.0 - p);
      mix += second;
      const double lhs = qace::ace_mbqc(DensityOp(mix), cfg).value;
      const double rhs = p * qace::ace_mbqc(r1, cfg).value +
                         (1.0 - p) * qace::ace_mbqc(r2, cfg).value;
      if (lhs > rhs + 2e-3) ok = false;
    }
    report(7, "one-way convexity", ok, "50 sampled mixtures");
  }

  // Monte Carlo consistency on the named gates.
  {
    const AveragingConfig defaults;
    AveragingConfig mc;
    mc.method = AveragingMethod::kMonteCarlo;
    mc.mc_samples = 100000;
    mc.seed = 8675309;
    bool ok = true;
    std::string detail;
    qace::SeededRng rng(404040);
    std::vector<qace::GateSpec> gates = {qace::random_local_gate(rng)};
    for (const char* name : {"CNOT", "CZ", "B", "SQRT_SWAP", "SWAP"})
      gates.push_back(qace::standard_gate(name));
    for (const auto& gate : gates) {
      const double qv = qace::ace_gate(gate, defaults).value;
      const qace::AceEstimate est = qace::ace_gate(gate, mc);
      const double margin = 4.0 * est.error_estimate + 1e-12;
      if (std::abs(est.value - qv) > margin) {
        ok = false;
        detail = gate.name + ": |" + fmt(est.value) + " - " + fmt(qv) + "| > " + fmt(margin);
      }
    }
    if (ok) detail = "all gates within 4 standard errors";
    report(7, "Monte Carlo vs quadrature", ok, detail);
  }

  // Quadrature self-convergence under node doubling.
  {
    const AveragingConfig defaults;
    const AveragingConfig doubled = quad(128, 64);
    qace::SeededRng rng(505050);
    std::vector<qace::GateSpec> gates = {qace::random_local_gate(rng)};
    for (const char* name : {"CNOT", "CZ", "B", "SQRT_SWAP", "SWAP"})
      gates.push_back(qace::standard_gate(name));
    double worst = 0.0;
    std::string worst_name = "-";
    for (const auto& gate : gates) {
      const double shift = std::abs(qace::ace_gate(gate, defaults).value -
                                    qace::ace_gate(gate, doubled).value);
      if (shift > worst) {
        worst = shift;
        worst_name = gate.name;
      }
    }
    report(7, "quadrature self-convergence", worst <= 1e-5,
           "worst shift " + fmt(worst) + " (" + worst_name + ")");
  }

  // Classical coarse-graining oracle.
  {
    qace::SeededRng rng(606060);
    bool ok = true;
    for (int n = 2; n <= 12 && ok; ++n) {
      std::vector<double> p1(n), p0(n);
      double s1 = 0.0, s0 = 0.0;
      for (int i = 0; i < n; ++i) {
        p1[i] = rng.uniform() + 1e-3;
        p0[i] = rng.uniform() + 1e-3;
        s1 += p1[i];
        s0 += p0[i];
      }
      for (int i = 0; i < n; ++i) {
        p1[i] /= s1;
        p0[i] /= s0;
      }
      double q1 = 0.0, q0 = 0.0;
      for (int i = 0; i < n; ++i) {
        q1 += p1[i];
        q0 += p0[i];
      }
      p1[0] += 1.0 - q1;
      p0[0] += 1.0 - q0;
      const qace::FiniteDistribution d1(p1), d0(p0);
      if (std::abs(qace::ace_tvd(d1, d0) - oracles::max_over_bipartitions(d1, d0)) > 1e-12)
        ok = false;
    }
    report(7, "coarse-graining oracle (|B| up to 12)", ok, "exhaustive bipartitions");
  }
}

// --- criterion 8 -------------------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void criterion8() {
#ifdef QACE_CLI_PATH
  const std::string args =
      " scatter --scenario teleport --n 60 --seed 99 --phi-nodes 64 --theta-nodes 16 --out ";
  const std::string f1 = "acceptance_scatter_1.csv";
  const std::string f2 = "acceptance_scatter_2.csv";
  const int r1 = std::system((std::string(QACE_CLI_PATH) + args + f1).c_str());
  const int r2 = std::system((std::string(QACE_CLI_PATH) + args + f2).c_str());
  const std::string b1 = slurp(f1), b2 = slurp(f2);
  const bool ok = r1 == 0 && r2 == 0 && !b1.empty() && b1 == b2;
  report(8, "scatter reruns byte-identical", ok,
         std::to_string(b1.size()) + " bytes compared");
#else
  report(8, "scatter reruns byte-identical", false, "CLI path not configured");
#endif
}

}  // namespace

int main(int argc, char** argv) {
  const auto t0 = std::chrono::steady_clock::now();
  void (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                          criterion5, criterion6, criterion7, criterion8};
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) {
      const int k = std::atoi(argv[i]);
      if (k < 1 || k > 8) {
        std::fprintf(stderr, "usage: %s [criterion 1..8]...\n", argv[0]);
        return 2;
      }
      criteria[k - 1]();
    }
  } else {
    for (auto* c : criteria) c();
  }
  std::printf("%s: %d failure(s), %.1f s total\n", g_failures == 0 ? "ACCEPTED" : "REJECTED",
              g_failures, seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}
