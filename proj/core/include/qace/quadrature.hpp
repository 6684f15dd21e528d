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

#include <vector>

namespace qace {

/// Nodes and weights of an n-point Gauss-Legendre rule on [a, b].
struct Quad1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

Quad1D gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Product rule for the normalized average over the Bloch sphere,
/// (1/4pi) Int f sin(theta) dtheta dphi.
///
/// phi: periodic trapezoid, phi_j = 2 pi j / phi_nodes, weight 1/phi_nodes.
/// theta: composite Gauss-Legendre in theta itself, theta_nodes/2 points on
/// each of [0, pi/2] and [pi/2, pi], weight including sin(theta)/2.
/// Splitting at the equator keeps |cos(theta)|-type integrands exactly
/// polynomial on each panel, and working in theta (rather than u = cos theta)
/// keeps sin(theta)-type integrands analytic, so both converge spectrally.
struct SphereRule {
  std::vector<double> theta;         // polar nodes
  std::vector<double> theta_weight;  // includes the sin(theta)/2 factor
  std::vector<double> phi;           // azimuthal nodes
  double phi_weight = 0.0;           // 1/phi_nodes
};

/// Requires phi_nodes >= 4 and even theta_nodes >= 4.
SphereRule sphere_rule(int phi_nodes, int theta_nodes);

/// Equally spaced nodes for the normalized average over [0, 2pi);
/// each node has weight 1/phi_nodes.
std::vector<double> equator_rule(int phi_nodes);

}  // namespace qace
