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

#include "qace/ace.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <thread>
#include <vector>

#include "qace/quadrature.hpp"
#include "qace/sampling.hpp"

namespace qace {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

void check(bool ok, const char* msg) {
  if (!ok) throw ValidationError(msg);
}

// ---------------------------------------------------------------------------
// Deterministic parallelism.
//
// Work items are indexed; each item is evaluated by exactly one worker and
// written to its own slot, and the final reduction walks the slots in index
// order. The result is therefore bitwise identical for any thread count.
// ---------------------------------------------------------------------------

int effective_threads() {
  if (const char* env = std::getenv("QACE_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_fill(int n, const std::function<void(int)>& item) {
  const int workers = std::min(effective_threads(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) item(i);
    return;
  }
  std::atomic<int> next{0};
  auto run = [&] {
    for (;;) {
      const int i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) return;
      item(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 0; t < workers - 1; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

double ordered_sum(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s;
}

// ---------------------------------------------------------------------------
// Small fixed-size kernels for the averaging loops. These mirror the public
// *_output_state operations entry for entry (the unit tests pin them against
// each other); they exist so the multi-million-point averages stay cheap.
// ---------------------------------------------------------------------------

struct QubitOp {  // Hermitian 2x2: [[r00, r01], [conj(r01), r11]]
  double r00 = 0.0, r11 = 0.0;
  Complex r01{0.0, 0.0};
};

inline double td_qubit(const QubitOp& a, const QubitOp& b) {
  const double d00 = a.r00 - b.r00;
  const double d11 = a.r11 - b.r11;
  const Complex d01 = a.r01 - b.r01;
  const double t = d00 + d11;
  const double det = d00 * d11 - std::norm(d01);
  const double disc = std::max(0.0, t * t - 4.0 * det);
  const double root = std::sqrt(disc);
  return 0.5 * (std::abs(0.5 * (t + root)) + std::abs(0.5 * (t - root)));
}

struct SphereKet {  // single-qubit ket with its quadrature weight
  Complex a0, a1;
  double weight;
};

// All (theta, phi) nodes of the rule, flattened; weights sum to 1. When
// `partners` is given it receives the orthogonal state of every node.
std::vector<SphereKet> sphere_kets(const SphereRule& rule, std::vector<SphereKet>* partners) {
  std::vector<SphereKet> kets;
  kets.reserve(rule.theta.size() * rule.phi.size());
  if (partners) partners->reserve(kets.capacity());
  for (size_t i = 0; i < rule.theta.size(); ++i) {
    const double c = std::cos(rule.theta[i] / 2.0);
    const double s = std::sin(rule.theta[i] / 2.0);
    for (size_t j = 0; j < rule.phi.size(); ++j) {
      const Complex phase = std::exp(kI * rule.phi[j]);
      const double w = rule.theta_weight[i] * rule.phi_weight;
      kets.push_back({c, phase * s, w});
      if (partners) partners->push_back({s, -phase * c, w});
    }
  }
  return kets;
}

// --- gate scenario ---------------------------------------------------------

// W = U (|a> (x) I2), stored as w[2*i + beta] = sum_alpha U(i, 2 alpha + beta) a_alpha.
// Then U(|a> (x) |b>) = W b costs 8 multiplies per b.
using HalfApplied = std::array<Complex, 8>;

HalfApplied half_apply(const ComplexMatrix& u, Complex a0, Complex a1) {
  HalfApplied w;
  for (int i = 0; i < 4; ++i)
    for (int beta = 0; beta < 2; ++beta)
      w[2 * i + beta] = u(i, beta) * a0 + u(i, 2 + beta) * a1;
  return w;
}

inline QubitOp gate_reduced(const HalfApplied& w, Complex b0, Complex b1) {
  const Complex p0 = w[0] * b0 + w[1] * b1;
  const Complex p1 = w[2] * b0 + w[3] * b1;
  const Complex p2 = w[4] * b0 + w[5] * b1;
  const Complex p3 = w[6] * b0 + w[7] * b1;
  QubitOp q;
  q.r00 = std::norm(p0) + std::norm(p2);
  q.r11 = std::norm(p1) + std::norm(p3);
  q.r01 = p0 * std::conj(p1) + p2 * std::conj(p3);
  return q;
}

inline double gate_td(const HalfApplied& w0, const HalfApplied& w1, Complex b0, Complex b1) {
  return td_qubit(gate_reduced(w0, b0, b1), gate_reduced(w1, b0, b1));
}

double gate_quadrature(const ComplexMatrix& u, const AveragingConfig& cfg, int phi_nodes,
                       int theta_nodes) {
  const SphereRule rule = sphere_rule(phi_nodes, theta_nodes);
  std::vector<SphereKet> partners;
  const std::vector<SphereKet> interventions = sphere_kets(rule, &partners);
  const std::vector<SphereKet> b_kets = sphere_kets(rule, nullptr);

  const int n = static_cast<int>(interventions.size());
  std::vector<double> partial(n);

  if (cfg.pair_mode == PairMode::kAntipodal) {
    parallel_fill(n, [&](int i) {
      const HalfApplied wa = half_apply(u, interventions[i].a0, interventions[i].a1);
      const HalfApplied wo = half_apply(u, partners[i].a0, partners[i].a1);
      double acc = 0.0;
      for (const SphereKet& b : b_kets) acc += b.weight * gate_td(wa, wo, b.a0, b.a1);
      partial[i] = interventions[i].weight * acc;
    });
  } else {
    // Independent pair: nested average over a second intervention grid.
    // Costs (phi*theta)^2 times the b-grid, so this path is for small node
    // counts; Monte Carlo is the practical method at scale.
    const double evals = static_cast<double>(n) * n * b_kets.size();
    if (evals > 2e9)
      throw ValidationError(
          "independent-pair gate quadrature needs (phi*theta)^3 evaluations; "
          "reduce the node counts or use --method mc");
    std::vector<HalfApplied> applied(n);
    for (int i = 0; i < n; ++i)
      applied[i] = half_apply(u, interventions[i].a0, interventions[i].a1);
    parallel_fill(n, [&](int i) {
      double acc_i = 0.0;
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (const SphereKet& b : b_kets)
          acc += b.weight * gate_td(applied[i], applied[j], b.a0, b.a1);
        acc_i += interventions[j].weight * acc;
      }
      partial[i] = interventions[i].weight * acc_i;
    });
  }
  return ordered_sum(partial);
}

double gate_monte_carlo(const ComplexMatrix& u, const AveragingConfig& cfg, double* std_error) {
  const long n = cfg.mc_samples;
  std::vector<double> values(static_cast<size_t>(n));
  const SeededRng base(cfg.seed);
  const bool independent = cfg.pair_mode == PairMode::kIndependent;

  const long chunk = 1024;
  const int n_chunks = static_cast<int>((n + chunk - 1) / chunk);
  parallel_fill(n_chunks, [&](int c) {
    const long lo = static_cast<long>(c) * chunk;
    const long hi = std::min(n, lo + chunk);
    for (long i = lo; i < hi; ++i) {
      SeededRng rng = base.split(static_cast<std::uint64_t>(i));
      auto draw = [&rng]() -> std::array<Complex, 2> {
        const double ct = 2.0 * rng.uniform() - 1.0;
        const double phi = 2.0 * kPi * rng.uniform();
        const double c2 = std::sqrt((1.0 + ct) / 2.0);
        const double s2 = std::sqrt((1.0 - ct) / 2.0);
        return {c2, std::exp(kI * phi) * s2};
      };
      const auto a = draw();
      const HalfApplied w0 = half_apply(u, a[0], a[1]);
      HalfApplied w1;
      if (independent) {
        const auto a1 = draw();
        w1 = half_apply(u, a1[0], a1[1]);
      } else {
        w1 = half_apply(u, std::conj(a[1]), -std::conj(a[0]));
      }
      const auto b = draw();
      values[static_cast<size_t>(i)] = gate_td(w0, w1, b[0], b[1]);
    }
  });

  const double mean = ordered_sum(values) / static_cast<double>(n);
  double var_acc = 0.0;
  for (double v : values) var_acc += (v - mean) * (v - mean);
  const double sd = n > 1 ? std::sqrt(var_acc / static_cast<double>(n - 1)) : 0.0;
  *std_error = sd / std::sqrt(static_cast<double>(n));
  return mean;
}

// --- one-way model ---------------------------------------------------------

// The phi-dependence of the output pair is carried by two fixed Hermitian
// 2x2 blocks: with G(phi) = cos(phi) GX + sin(phi) GY,
//   rho_B(do(a_phi)) - rho_B(do(a_phi_perp)) = G(phi) - X G(phi) X.
struct MbqcBlocks {
  QubitOp gx, gy;
};

MbqcBlocks mbqc_blocks(const ComplexMatrix& rho) {
  auto pick = [&rho](int r, int c) { return rho(r, c); };
  MbqcBlocks bl;
  // GX[b][b'] = rho[2+b][b'] + rho[b][2+b']
  const Complex gx00 = pick(2, 0) + pick(0, 2);
  const Complex gx11 = pick(3, 1) + pick(1, 3);
  const Complex gx01 = pick(2, 1) + pick(0, 3);
  // GY[b][b'] = -i rho[2+b][b'] + i rho[b][2+b']
  const Complex gy00 = -kI * pick(2, 0) + kI * pick(0, 2);
  const Complex gy11 = -kI * pick(3, 1) + kI * pick(1, 3);
  const Complex gy01 = -kI * pick(2, 1) + kI * pick(0, 3);
  bl.gx = {gx00.real(), gx11.real(), gx01};
  bl.gy = {gy00.real(), gy11.real(), gy01};
  return bl;
}

// Trace distance between the outputs for the antipodal pair at angle phi.
// For two independent basis choices the output difference is half of
// (DeltaG - X DeltaG X) with DeltaG = G(phi0) - G(phi1).
inline double mbqc_td_antipodal(const MbqcBlocks& bl, double cphi, double sphi) {
  const double c00 = cphi * bl.gx.r00 + sphi * bl.gy.r00;
  const double c11 = cphi * bl.gx.r11 + sphi * bl.gy.r11;
  const Complex c01 = cphi * bl.gx.r01 + sphi * bl.gy.r01;
  // D = C - XCX is traceless Hermitian with D00 = c00 - c11, D01 = c01 - conj(c01).
  const double d00 = c00 - c11;
  const Complex d01 = c01 - std::conj(c01);
  return std::sqrt(d00 * d00 + std::norm(d01));
}

inline double mbqc_td_independent(const MbqcBlocks& bl, double phi0, double phi1) {
  const double dc = std::cos(phi0) - std::cos(phi1);
  const double ds = std::sin(phi0) - std::sin(phi1);
  return 0.5 * mbqc_td_antipodal(bl, dc, ds);
}

double mbqc_quadrature(const ComplexMatrix& rho, const AveragingConfig& cfg, int phi_nodes) {
  const MbqcBlocks bl = mbqc_blocks(rho);
  const std::vector<double> phis = equator_rule(phi_nodes);
  const int n = static_cast<int>(phis.size());
  std::vector<double> partial(n);
  if (cfg.pair_mode == PairMode::kAntipodal) {
    // Single 1D pass; far too cheap to be worth spawning workers.
    for (int i = 0; i < n; ++i)
      partial[i] = mbqc_td_antipodal(bl, std::cos(phis[i]), std::sin(phis[i])) / n;
  } else {
    parallel_fill(n, [&](int i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += mbqc_td_independent(bl, phis[i], phis[j]);
      partial[i] = acc / (static_cast<double>(n) * n);
    });
  }
  return ordered_sum(partial);
}

double mbqc_monte_carlo(const ComplexMatrix& rho, const AveragingConfig& cfg,
                        double* std_error) {
  const MbqcBlocks bl = mbqc_blocks(rho);
  const long n = cfg.mc_samples;
  std::vector<double> values(static_cast<size_t>(n));
  const SeededRng base(cfg.seed);
  const bool independent = cfg.pair_mode == PairMode::kIndependent;

  const long chunk = 4096;
  const int n_chunks = static_cast<int>((n + chunk - 1) / chunk);
  parallel_fill(n_chunks, [&](int c) {
    const long lo = static_cast<long>(c) * chunk;
    const long hi = std::min(n, lo + chunk);
    for (long i = lo; i < hi; ++i) {
      SeededRng rng = base.split(static_cast<std::uint64_t>(i));
      const double phi0 = 2.0 * kPi * rng.uniform();
      if (independent) {
        const double phi1 = 2.0 * kPi * rng.uniform();
        values[static_cast<size_t>(i)] = mbqc_td_independent(bl, phi0, phi1);
      } else {
        values[static_cast<size_t>(i)] = mbqc_td_antipodal(bl, std::cos(phi0), std::sin(phi0));
      }
    }
  });

  const double mean = ordered_sum(values) / static_cast<double>(n);
  double var_acc = 0.0;
  for (double v : values) var_acc += (v - mean) * (v - mean);
  const double sd = n > 1 ? std::sqrt(var_acc / static_cast<double>(n - 1)) : 0.0;
  *std_error = sd / std::sqrt(static_cast<double>(n));
  return mean;
}

// --- teleportation ---------------------------------------------------------

// The resource state enters the hot loop through its spectral decomposition;
// each pure component is pushed through the circuit as an 8-amplitude vector.
struct TeleportResource {
  struct Component {
    double weight;
    std::array<Complex, 4> ket;
  };
  std::vector<Component> components;
};

TeleportResource teleport_resource(const ComplexMatrix& rho) {
  const HermitianEigensystem es = hermitian_eigensystem(rho);
  TeleportResource res;
  for (int k = 0; k < 4; ++k) {
    const double w = std::max(0.0, es.eigenvalues[k]);
    if (w == 0.0) continue;
    TeleportResource::Component comp;
    comp.weight = w;
    for (int r = 0; r < 4; ++r) comp.ket[r] = es.vectors(r, k);
    res.components.push_back(comp);
  }
  return res;
}

QubitOp teleport_bob(const TeleportResource& res, Complex a0, Complex a1) {
  QubitOp out;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (const auto& comp : res.components) {
    Complex psi[8];
    for (int k = 0; k < 4; ++k) {
      psi[k] = a0 * comp.ket[k];
      psi[4 + k] = a1 * comp.ket[k];
    }
    // CNOT with qubit 1 as control, qubit 2 as target (index 4 q1 + 2 q2 + q3).
    std::swap(psi[4], psi[6]);
    std::swap(psi[5], psi[7]);
    // Hadamard on qubit 1.
    for (int k = 0; k < 4; ++k) {
      const Complex x = psi[k], y = psi[4 + k];
      psi[k] = inv_sqrt2 * (x + y);
      psi[4 + k] = inv_sqrt2 * (x - y);
    }
    // Measure qubits 1,2; correct qubit 3 with Z^s1 X^s2.
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2) {
        Complex c0 = psi[4 * s1 + 2 * s2];
        Complex c1 = psi[4 * s1 + 2 * s2 + 1];
        if (s2) std::swap(c0, c1);
        if (s1) c1 = -c1;
        out.r00 += comp.weight * std::norm(c0);
        out.r11 += comp.weight * std::norm(c1);
        out.r01 += comp.weight * c0 * std::conj(c1);
      }
  }
  return out;
}

double teleport_quadrature(const TeleportResource& res, const AveragingConfig& cfg,
                           int phi_nodes, int theta_nodes) {
  const SphereRule rule = sphere_rule(phi_nodes, theta_nodes);
  std::vector<SphereKet> partners;
  const std::vector<SphereKet> interventions = sphere_kets(rule, &partners);
  const int n = static_cast<int>(interventions.size());
  std::vector<double> partial(n);

  if (cfg.pair_mode == PairMode::kAntipodal) {
    parallel_fill(n, [&](int i) {
      const QubitOp lhs = teleport_bob(res, interventions[i].a0, interventions[i].a1);
      const QubitOp rhs = teleport_bob(res, partners[i].a0, partners[i].a1);
      partial[i] = interventions[i].weight * td_qubit(lhs, rhs);
    });
  } else {
    std::vector<QubitOp> outputs(n);
    for (int i = 0; i < n; ++i)
      outputs[i] = teleport_bob(res, interventions[i].a0, interventions[i].a1);
    parallel_fill(n, [&](int i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j)
        acc += interventions[j].weight * td_qubit(outputs[i], outputs[j]);
      partial[i] = interventions[i].weight * acc;
    });
  }
  return ordered_sum(partial);
}

double teleport_monte_carlo(const TeleportResource& res, const AveragingConfig& cfg,
                            double* std_error) {
  const long n = cfg.mc_samples;
  std::vector<double> values(static_cast<size_t>(n));
  const SeededRng base(cfg.seed);
  const bool independent = cfg.pair_mode == PairMode::kIndependent;

  const long chunk = 1024;
  const int n_chunks = static_cast<int>((n + chunk - 1) / chunk);
  parallel_fill(n_chunks, [&](int c) {
    const long lo = static_cast<long>(c) * chunk;
    const long hi = std::min(n, lo + chunk);
    for (long i = lo; i < hi; ++i) {
      SeededRng rng = base.split(static_cast<std::uint64_t>(i));
      auto draw = [&rng]() -> std::array<Complex, 2> {
        const double ct = 2.0 * rng.uniform() - 1.0;
        const double phi = 2.0 * kPi * rng.uniform();
        return {std::sqrt((1.0 + ct) / 2.0),
                std::exp(kI * phi) * std::sqrt((1.0 - ct) / 2.0)};
      };
      const auto a = draw();
      const QubitOp lhs = teleport_bob(res, a[0], a[1]);
      QubitOp rhs;
      if (independent) {
        const auto a1 = draw();
        rhs = teleport_bob(res, a1[0], a1[1]);
      } else {
        rhs = teleport_bob(res, std::conj(a[1]), -std::conj(a[0]));
      }
      values[static_cast<size_t>(i)] = td_qubit(lhs, rhs);
    }
  });

  const double mean = ordered_sum(values) / static_cast<double>(n);
  double var_acc = 0.0;
  for (double v : values) var_acc += (v - mean) * (v - mean);
  const double sd = n > 1 ? std::sqrt(var_acc / static_cast<double>(n - 1)) : 0.0;
  *std_error = sd / std::sqrt(static_cast<double>(n));
  return mean;
}

// --- shared wrap-up ---------------------------------------------------------

int halve_even(int n) {
  int h = n / 2;
  if (h % 2 != 0) ++h;
  return std::max(4, h);
}

AceEstimate finish_quadrature(const std::function<double(int, int)>& eval,
                              const AveragingConfig& cfg) {
  const double value = eval(cfg.phi_nodes, cfg.theta_nodes);
  const double coarse = eval(std::max(4, cfg.phi_nodes / 2), halve_even(cfg.theta_nodes));
  AceEstimate est;
  est.value = std::max(0.0, value);
  est.method = AveragingMethod::kQuadrature;
  est.error_estimate = std::abs(value - coarse);
  return est;
}

AceEstimate finish_monte_carlo(const std::function<double(double*)>& eval) {
  double se = 0.0;
  const double value = eval(&se);
  AceEstimate est;
  est.value = std::max(0.0, value);
  est.method = AveragingMethod::kMonteCarlo;
  est.error_estimate = se;
  return est;
}

}  // namespace

void AveragingConfig::validate() const {
  check(phi_nodes >= 4, "phi_nodes must be at least 4");
  check(theta_nodes >= 4, "theta_nodes must be at least 4");
  check(theta_nodes % 2 == 0, "theta_nodes must be even");
  check(mc_samples >= 100, "mc_samples must be at least 100");
}

DensityOp gate_output_state(const GateSpec& gate, const Ket& a, const Ket& b) {
  if (a.dim() != 2 || b.dim() != 2)
    throw ValidationError("gate_output_state expects single-qubit kets");
  const ComplexMatrix input = tensor_product(a.column(), b.column());
  const ComplexMatrix psi = gate.matrix * input;
  ComplexMatrix rho(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) rho(r, c) = psi(r, 0) * std::conj(psi(c, 0));
  const std::array<int, 2> dims{2, 2};
  const std::array<int, 1> keep{1};
  return DensityOp(partial_trace(rho, dims, keep));
}

AceEstimate ace_gate(const GateSpec& gate, const AveragingConfig& cfg) {
  cfg.validate();
  if (gate.matrix.rows() != 4) throw ValidationError("ace_gate expects a two-qubit gate");
  if (cfg.method == AveragingMethod::kQuadrature) {
    return finish_quadrature(
        [&](int np, int nt) { return gate_quadrature(gate.matrix, cfg, np, nt); }, cfg);
  }
  return finish_monte_carlo(
      [&](double* se) { return gate_monte_carlo(gate.matrix, cfg, se); });
}

std::pair<DensityOp, DensityOp> mbqc_output_state(const DensityOp& rho_in, double phi_a) {
  if (rho_in.dim() != 4) throw ValidationError("mbqc_output_state expects a two-qubit state");
  if (!(phi_a >= 0.0 && phi_a < 2.0 * kPi)) throw ValidationError("phi_a outside [0, 2*pi)");
  const auto [a, aperp] = equator_pair(phi_a);
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  const ComplexMatrix pa = tensor_product(a.projector(), id2);
  const ComplexMatrix pp = tensor_product(aperp.projector(), id2);
  const std::array<int, 2> dims{2, 2};
  const std::array<int, 1> keep{1};
  const ComplexMatrix branch_a = partial_trace(pa * rho_in.matrix(), dims, keep);
  const ComplexMatrix branch_p = partial_trace(pp * rho_in.matrix(), dims, keep);
  const ComplexMatrix x = pauli_x();
  return {DensityOp(branch_a + x * branch_p * x), DensityOp(branch_p + x * branch_a * x)};
}

AceEstimate ace_mbqc(const DensityOp& rho_in, const AveragingConfig& cfg) {
  cfg.validate();
  if (rho_in.dim() != 4) throw ValidationError("ace_mbqc expects a two-qubit state");
  if (cfg.method == AveragingMethod::kQuadrature) {
    return finish_quadrature(
        [&](int np, int) { return mbqc_quadrature(rho_in.matrix(), cfg, np); }, cfg);
  }
  return finish_monte_carlo(
      [&](double* se) { return mbqc_monte_carlo(rho_in.matrix(), cfg, se); });
}

DensityOp teleport_output_state(const DensityOp& rho_in, const Ket& a) {
  if (rho_in.dim() != 4) throw ValidationError("teleport_output_state expects a 4x4 resource");
  if (a.dim() != 2) throw ValidationError("teleport_output_state expects a single-qubit ket");

  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  const ComplexMatrix cnot12 = tensor_product(standard_gate(StandardGate::kCnot).matrix, id2);
  const ComplexMatrix h1 = tensor_product(tensor_product(hadamard(), id2), id2);
  const ComplexMatrix u = h1 * cnot12;

  const ComplexMatrix joint = tensor_product(a.projector(), rho_in.matrix());
  const ComplexMatrix evolved = u * joint * u.adjoint();

  const ComplexMatrix x = pauli_x();
  const ComplexMatrix z = pauli_z();
  const std::array<int, 3> dims{2, 2, 2};
  const std::array<int, 1> keep{2};

  ComplexMatrix out(2, 2);
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2) {
      ComplexMatrix p1(2, 2);
      p1(s1, s1) = 1.0;
      ComplexMatrix p2(2, 2);
      p2(s2, s2) = 1.0;
      const ComplexMatrix proj = tensor_product(tensor_product(p1, p2), id2);
      ComplexMatrix reduced = partial_trace(proj * evolved, dims, keep);
      if (s2 == 1) reduced = x * reduced * x;
      if (s1 == 1) reduced = z * reduced * z;
      out += reduced;
    }
  return DensityOp(std::move(out));
}

AceEstimate ace_teleport(const DensityOp& rho_in, const AveragingConfig& cfg) {
  cfg.validate();
  if (rho_in.dim() != 4) throw ValidationError("ace_teleport expects a two-qubit state");
  const TeleportResource res = teleport_resource(rho_in.matrix());
  if (cfg.method == AveragingMethod::kQuadrature) {
    return finish_quadrature(
        [&](int np, int nt) { return teleport_quadrature(res, cfg, np, nt); }, cfg);
  }
  return finish_monte_carlo([&](double* se) { return teleport_monte_carlo(res, cfg, se); });
}

AceEstimate ace(const Scenario& scenario, const AveragingConfig& cfg) {
  return std::visit(
      [&cfg](const auto& s) -> AceEstimate {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GateScenario>)
          return ace_gate(s.gate, cfg);
        else if constexpr (std::is_same_v<T, MbqcScenario>)
          return ace_mbqc(s.resource, cfg);
        else
          return ace_teleport(s.resource, cfg);
      },
      scenario);
}

double elliptic_e(double k) {
  if (!(std::abs(k) <= 1.0)) throw ValidationError("elliptic_e requires |k| <= 1");
  static const Quad1D rule = gauss_legendre(64, 0.0, kPi / 2.0);
  double acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double s = std::sin(rule.nodes[i]);
    acc += rule.weights[i] * std::sqrt(std::max(0.0, 1.0 - k * k * s * s));
  }
  return acc;
}

double closed_form_mbqc(StateFamily f, double eps,
                        const std::optional<ClassicalCorrelatedParams>& params) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw ValidationError("eps outside [0, 1]");
  switch (f) {
    case StateFamily::kF:
      return 4.0 / kPi * std::sqrt(eps * (1.0 - eps));
    case StateFamily::kG:
      return 2.0 * std::sqrt(eps * (1.0 - eps));
    case StateFamily::kH:
      return 2.0 / kPi * elliptic_e(1.0 - 2.0 * eps);
    case StateFamily::kIso:
      return eps;
    case StateFamily::kC: {
      ClassicalCorrelatedParams p = params.value_or(classical_sweep_params(eps));
      p.validate();
      return 2.0 / kPi * std::abs(p.p00 + p.p11 - p.p01 - p.p10);
    }
    case StateFamily::kCPrime:
    case StateFamily::kCDoublePrime:
      return 0.0;
  }
  throw ValidationError("unknown state family");
}

double separable_product_ace_mbqc(double theta1, double theta2, double phi2) {
  BlochAngles{theta1, 0.0}.validate();
  BlochAngles{theta2, phi2}.validate();
  const double c2 = std::cos(theta2), s2 = std::sin(theta2), sp = std::sin(phi2);
  return 2.0 / kPi * std::sin(theta1) * std::sqrt(c2 * c2 + s2 * s2 * sp * sp);
}

}  // namespace qace
