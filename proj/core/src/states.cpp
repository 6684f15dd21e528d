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

#include "qace/states.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "json.hpp"

namespace qace {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

ComplexMatrix ket2(Complex a0, Complex a1) { return ComplexMatrix(2, 1, {a0, a1}); }

DensityOp pure_density(const Ket& k) { return DensityOp(k.projector()); }

}  // namespace

void BlochAngles::validate() const {
  if (!(theta >= 0.0 && theta <= kPi)) throw ValidationError("theta outside [0, pi]");
  if (!(phi >= 0.0 && phi < 2.0 * kPi)) throw ValidationError("phi outside [0, 2*pi)");
}

Ket::Ket(ComplexMatrix column) : column_(std::move(column)) {
  if (column_.cols() != 1) throw ValidationError("ket must be a column vector");
  if (!column_.all_finite()) throw ValidationError("ket has non-finite amplitudes");
  if (std::abs(column_.frobenius_norm() - 1.0) > 1e-10)
    throw ValidationError("ket norm differs from 1 by more than 1e-10");
}

ComplexMatrix Ket::projector() const {
  const int n = dim();
  ComplexMatrix p(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) p(r, c) = amp(r) * std::conj(amp(c));
  return p;
}

Ket bloch_ket(const BlochAngles& angles) {
  angles.validate();
  const Complex phase = std::exp(kI * angles.phi);
  return Ket(ket2(std::cos(angles.theta / 2.0), phase * std::sin(angles.theta / 2.0)));
}

Ket orthogonal_ket(const BlochAngles& angles) {
  angles.validate();
  const Complex phase = std::exp(kI * angles.phi);
  return Ket(ket2(std::sin(angles.theta / 2.0), -phase * std::cos(angles.theta / 2.0)));
}

std::pair<Ket, Ket> equator_pair(double phi) {
  if (!(phi >= 0.0 && phi < 2.0 * kPi)) throw ValidationError("phi outside [0, 2*pi)");
  const double r = 1.0 / std::sqrt(2.0);
  const Complex phase = std::exp(kI * phi);
  return {Ket(ket2(r, r * phase)), Ket(ket2(r, -r * phase))};
}

GateSpec::GateSpec(std::string name_in, ComplexMatrix matrix_in, double unitarity_tol)
    : name(std::move(name_in)), matrix(std::move(matrix_in)) {
  if (!matrix.is_square()) throw ValidationError("gate matrix must be square");
  if (!matrix.all_finite()) throw ValidationError("gate matrix has non-finite entries");
  ComplexMatrix defect = matrix.adjoint() * matrix;
  defect -= ComplexMatrix::identity(matrix.rows());
  const double norm = defect.max_abs();
  if (norm > unitarity_tol)
    throw ValidationError("gate '" + name + "' is not unitary: ||U+U - I||_inf = " +
                          std::to_string(norm));
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, 2, {0, 1, 1, 0}); }
ComplexMatrix pauli_y() { return ComplexMatrix(2, 2, {0, -kI, kI, 0}); }
ComplexMatrix pauli_z() { return ComplexMatrix(2, 2, {1, 0, 0, -1}); }
ComplexMatrix hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  return ComplexMatrix(2, 2, {r, r, r, -r});
}

GateSpec standard_gate(StandardGate g) {
  switch (g) {
    case StandardGate::kCnot:
      return GateSpec("CNOT", ComplexMatrix(4, 4,
                                            {1, 0, 0, 0,  //
                                             0, 1, 0, 0,  //
                                             0, 0, 0, 1,  //
                                             0, 0, 1, 0}));
    case StandardGate::kCz:
      return GateSpec("CZ", ComplexMatrix(4, 4,
                                          {1, 0, 0, 0,  //
                                           0, 1, 0, 0,  //
                                           0, 0, 1, 0,  //
                                           0, 0, 0, -1}));
    case StandardGate::kB: {
      const double c = std::cos(kPi / 8.0), s = std::sin(kPi / 8.0);
      return GateSpec("B", ComplexMatrix(4, 4,
                                         {c, 0, 0, kI * s,      //
                                          0, s, kI * c, 0,      //
                                          0, kI * c, s, 0,      //
                                          kI * s, 0, 0, c}));
    }
    case StandardGate::kSqrtSwap: {
      const Complex ep = std::exp(kI * (kPi / 8.0));
      const Complex em = std::exp(-kI * (kPi / 8.0));
      const double r = 1.0 / std::sqrt(2.0);
      return GateSpec("SQRT_SWAP", ComplexMatrix(4, 4,
                                                 {ep, 0, 0, 0,              //
                                                  0, r * em, kI * r * em, 0,  //
                                                  0, kI * r * em, r * em, 0,  //
                                                  0, 0, 0, ep}));
    }
    case StandardGate::kSwap:
      return GateSpec("SWAP", ComplexMatrix(4, 4,
                                            {1, 0, 0, 0,  //
                                             0, 0, 1, 0,  //
                                             0, 1, 0, 0,  //
                                             0, 0, 0, 1}));
  }
  throw ValidationError("unknown standard gate");
}

GateSpec standard_gate(const std::string& name) {
  const std::string u = upper(name);
  if (u == "CNOT") return standard_gate(StandardGate::kCnot);
  if (u == "CZ") return standard_gate(StandardGate::kCz);
  if (u == "B") return standard_gate(StandardGate::kB);
  if (u == "SQRT_SWAP" || u == "SQRTSWAP") return standard_gate(StandardGate::kSqrtSwap);
  if (u == "SWAP") return standard_gate(StandardGate::kSwap);
  throw ValidationError("unknown gate name: " + name);
}

GateSpec local_gate(const ComplexMatrix& q, const ComplexMatrix& p) {
  if (q.rows() != 2 || q.cols() != 2 || p.rows() != 2 || p.cols() != 2)
    throw ValidationError("local gate factors must be 2x2");
  return GateSpec("LOCAL", tensor_product(q, p));
}

Ket graph_state_g2() {
  return Ket(ComplexMatrix(4, 1, {0.5, 0.5, 0.5, -0.5}));
}

void ClassicalCorrelatedParams::validate() const {
  for (double p : {p00, p01, p10, p11})
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("mixing weight outside [0, 1]");
  if (std::abs(p00 + p01 + p10 + p11 - 1.0) > 1e-12)
    throw ValidationError("mixing weights do not sum to 1");
}

StateFamily parse_family(const std::string& name) {
  const std::string u = upper(name);
  if (u == "F") return StateFamily::kF;
  if (u == "G") return StateFamily::kG;
  if (u == "H") return StateFamily::kH;
  if (u == "ISO") return StateFamily::kIso;
  if (u == "C") return StateFamily::kC;
  if (u == "CPRIME" || u == "C'") return StateFamily::kCPrime;
  if (u == "CDPRIME" || u == "C''") return StateFamily::kCDoublePrime;
  throw ValidationError("unknown state family: " + name);
}

std::string family_name(StateFamily f) {
  switch (f) {
    case StateFamily::kF: return "F";
    case StateFamily::kG: return "G";
    case StateFamily::kH: return "H";
    case StateFamily::kIso: return "ISO";
    case StateFamily::kC: return "C";
    case StateFamily::kCPrime: return "CPRIME";
    case StateFamily::kCDoublePrime: return "CDPRIME";
  }
  return "?";
}

ClassicalCorrelatedParams classical_sweep_params(double eps) {
  return ClassicalCorrelatedParams{eps / 2.0, (1.0 - eps) / 2.0, (1.0 - eps) / 2.0, eps / 2.0};
}

namespace {

Ket g_family_ket(double eps) {
  const double a = std::sqrt(eps / 2.0);
  const double b = std::sqrt((1.0 - eps) / 2.0);
  // sqrt(eps)|0+> + sqrt(1-eps)|1->
  return Ket(ComplexMatrix(4, 1, {a, a, b, -b}));
}

DensityOp classical_state(const ClassicalCorrelatedParams& p, const ComplexMatrix& rot) {
  const ComplexMatrix h = hadamard();
  ComplexMatrix acc(4, 4);
  const double weights[2][2] = {{p.p00, p.p01}, {p.p10, p.p11}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      ComplexMatrix a(2, 2);
      a(i, i) = 1.0;
      ComplexMatrix b(2, 2);
      b(j, j) = 1.0;
      ComplexMatrix term = tensor_product(h * a * h, b);
      term *= Complex(weights[i][j]);
      acc += term;
    }
  ComplexMatrix rotated = rot * acc * rot.adjoint();
  return DensityOp(std::move(rotated));
}

}  // namespace

DensityOp family_state(StateFamily f, double eps,
                       const std::optional<ClassicalCorrelatedParams>& params) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw ValidationError("eps outside [0, 1]");
  switch (f) {
    case StateFamily::kG:
      return pure_density(g_family_ket(eps));
    case StateFamily::kF: {
      // Schmidt form sqrt(eps)|00> + sqrt(1-eps)|11>.
      const double a = std::sqrt(eps), b = std::sqrt(1.0 - eps);
      return pure_density(Ket(ComplexMatrix(4, 1, {a, 0, 0, b})));
    }
    case StateFamily::kH: {
      const ComplexMatrix hh = tensor_product(hadamard(), hadamard());
      const Ket g = g_family_ket(eps);
      ComplexMatrix rotated = hh * g.projector() * hh.adjoint();
      return DensityOp(std::move(rotated));
    }
    case StateFamily::kIso: {
      ComplexMatrix m = graph_state_g2().projector();
      m *= Complex(eps);
      ComplexMatrix id = ComplexMatrix::identity(4);
      id *= Complex((1.0 - eps) / 4.0);
      m += id;
      return DensityOp(std::move(m));
    }
    case StateFamily::kC:
    case StateFamily::kCPrime:
    case StateFamily::kCDoublePrime: {
      ClassicalCorrelatedParams p = params.value_or(classical_sweep_params(eps));
      p.validate();
      if (f == StateFamily::kC) return classical_state(p, ComplexMatrix::identity(4));
      if (f == StateFamily::kCPrime)
        return classical_state(p, tensor_product(hadamard(), ComplexMatrix::identity(2)));
      return classical_state(p, tensor_product(hadamard(), hadamard()));
    }
  }
  throw ValidationError("unknown state family");
}

double concurrence(const DensityOp& rho) {
  if (rho.dim() != 4) throw ValidationError("concurrence requires a two-qubit state");
  const ComplexMatrix yy = tensor_product(pauli_y(), pauli_y());
  const ComplexMatrix rho_tilde = yy * rho.matrix().conj() * yy;
  const ComplexMatrix root = hermitian_sqrt(rho.matrix());
  ComplexMatrix m = root * rho_tilde * root;
  // Symmetrize away the roundoff before asking for a spectrum.
  ComplexMatrix herm = m;
  herm += m.adjoint();
  herm *= Complex(0.5);
  HermitianSpectrum sp = hermitian_eigenvalues(herm);
  double lambdas[4];
  for (int i = 0; i < 4; ++i) {
    // Eigenvalues below the product's roundoff floor are noise; the square
    // root would otherwise inflate them to ~1e-8.
    const double ev = sp.eigenvalues[i] < 1e-13 ? 0.0 : sp.eigenvalues[i];
    lambdas[i] = std::sqrt(ev);
  }
  const double c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
  return std::clamp(c, 0.0, 1.0);
}

GateSpec load_gate_spec(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("gate file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("name") || !doc.contains("matrix"))
    throw ValidationError("gate file must be an object with 'name' and 'matrix'");
  if (!doc["name"].is_string()) throw ValidationError("gate 'name' must be a string");
  const auto& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != 4)
    throw ValidationError("gate 'matrix' must be a 4x4 array");
  ComplexMatrix m(4, 4);
  for (int r = 0; r < 4; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 4)
      throw ValidationError("gate 'matrix' must be a 4x4 array");
    for (int c = 0; c < 4; ++c) {
      const auto& cell = rows[r][c];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
        throw ValidationError("gate matrix entries must be [re, im] pairs");
      m(r, c) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return GateSpec(doc["name"].get<std::string>(), std::move(m), 1e-8);
}

std::string gate_spec_to_json(const GateSpec& gate) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 4; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 4; ++c) {
      const Complex z = gate.matrix(r, c);
      row.push_back({z.real(), z.imag()});
    }
    rows.push_back(row);
  }
  nlohmann::json doc{{"name", gate.name}, {"matrix", rows}};
  return doc.dump(2);
}

}  // namespace qace
