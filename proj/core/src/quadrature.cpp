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

#include "qace/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "qace/errors.hpp"

namespace qace {

namespace {
constexpr double kPi = std::numbers::pi;
}

Quad1D gauss_legendre(int n, double a, double b) {
  if (n < 1) throw ValidationError("Gauss-Legendre rule needs at least one node");
  Quad1D q;
  q.nodes.assign(n, 0.0);
  q.weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    // Newton iteration from the Chebyshev estimate of the i-th root.
    double z = std::cos(kPi * (i - 0.25) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15) break;
    }
    const double xm = 0.5 * (b + a);
    const double xl = 0.5 * (b - a);
    q.nodes[i - 1] = xm - xl * z;
    q.nodes[n - i] = xm + xl * z;
    q.weights[i - 1] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    q.weights[n - i] = q.weights[i - 1];
  }
  return q;
}

SphereRule sphere_rule(int phi_nodes, int theta_nodes) {
  if (phi_nodes < 4 || theta_nodes < 4)
    throw ValidationError("sphere rule needs at least 4 nodes per angle");
  if (theta_nodes % 2 != 0)
    throw ValidationError("theta_nodes must be even (half per hemisphere)");

  SphereRule r;
  const int half = theta_nodes / 2;
  for (int panel = 0; panel < 2; ++panel) {
    const double lo = panel == 0 ? 0.0 : kPi / 2.0;
    const Quad1D q = gauss_legendre(half, lo, lo + kPi / 2.0);
    for (int i = 0; i < half; ++i) {
      r.theta.push_back(q.nodes[i]);
      r.theta_weight.push_back(q.weights[i] * std::sin(q.nodes[i]) * 0.5);
    }
  }
  // The sin(theta) factor is itself quadratured, so at coarse node counts
  // the weights sum slightly off one. Normalizing keeps averages of
  // constants exact at every resolution.
  double sum = 0.0;
  for (double w : r.theta_weight) sum += w;
  for (double& w : r.theta_weight) w /= sum;
  for (int j = 0; j < phi_nodes; ++j) r.phi.push_back(2.0 * kPi * j / phi_nodes);
  r.phi_weight = 1.0 / phi_nodes;
  return r;
}

std::vector<double> equator_rule(int phi_nodes) {
  if (phi_nodes < 4) throw ValidationError("equator rule needs at least 4 nodes");
  std::vector<double> phi(phi_nodes);
  for (int j = 0; j < phi_nodes; ++j) phi[j] = 2.0 * kPi * j / phi_nodes;
  return phi;
}

}  // namespace qace
