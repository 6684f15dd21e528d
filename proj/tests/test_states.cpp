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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "qace/sampling.hpp"
#include "qace/states.hpp"

using qace::BlochAngles;
using qace::Complex;
using qace::ComplexMatrix;
using qace::DensityOp;
using qace::Ket;
using qace::StateFamily;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

double ket_distance(const Ket& a, const Ket& b) {
  double d = 0.0;
  for (int i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a.amp(i) - b.amp(i)));
  return d;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix d = a;
  d -= b;
  return d.max_abs();
}

BlochAngles random_angles(qace::SeededRng& rng) {
  return BlochAngles{kPi * rng.uniform(), 2.0 * kPi * rng.uniform()};
}

}  // namespace

TEST_CASE("bloch_ket poles and equator") {
  CHECK(ket_distance(qace::bloch_ket({0.0, 1.2}), Ket(ComplexMatrix(2, 1, {1, 0}))) < 1e-15);
  CHECK(ket_distance(qace::bloch_ket({kPi, 0.0}), Ket(ComplexMatrix(2, 1, {0, 1}))) < 1e-15);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(ket_distance(qace::bloch_ket({kPi / 2.0, 0.0}), Ket(ComplexMatrix(2, 1, {r, r}))) <
        1e-15);
}

TEST_CASE("orthogonal_ket sign convention and orthogonality") {
  const Ket at_pole = qace::orthogonal_ket({0.0, 0.0});
  CHECK(std::abs(at_pole.amp(0)) < 1e-15);
  CHECK(std::abs(at_pole.amp(1) - Complex(-1.0)) < 1e-15);

  const double r = 1.0 / std::sqrt(2.0);
  CHECK(ket_distance(qace::orthogonal_ket({kPi / 2.0, 0.0}),
                     Ket(ComplexMatrix(2, 1, {r, -r}))) < 1e-15);

  qace::SeededRng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const BlochAngles ang = random_angles(rng);
    const Ket a = qace::bloch_ket(ang);
    const Ket o = qace::orthogonal_ket(ang);
    const Complex overlap = std::conj(a.amp(0)) * o.amp(0) + std::conj(a.amp(1)) * o.amp(1);
    CHECK(std::abs(overlap) < 1e-12);
  }
}

TEST_CASE("equator pair at phi = 0 and phi = pi") {
  const double r = 1.0 / std::sqrt(2.0);
  auto [plus, minus] = qace::equator_pair(0.0);
  CHECK(ket_distance(plus, Ket(ComplexMatrix(2, 1, {r, r}))) < 1e-15);
  CHECK(ket_distance(minus, Ket(ComplexMatrix(2, 1, {r, -r}))) < 1e-15);
  auto [m2, p2] = qace::equator_pair(kPi);
  CHECK(ket_distance(m2, Ket(ComplexMatrix(2, 1, {r, -r}))) < 1e-12);
  CHECK(ket_distance(p2, Ket(ComplexMatrix(2, 1, {r, r}))) < 1e-12);
}

TEST_CASE("equator pair is orthonormal for arbitrary phi") {
  qace::SeededRng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto [a, o] = qace::equator_pair(2.0 * kPi * rng.uniform());
    const Complex overlap = std::conj(a.amp(0)) * o.amp(0) + std::conj(a.amp(1)) * o.amp(1);
    CHECK(std::abs(overlap) < 1e-14);
  }
}

TEST_CASE("CNOT is the permutation with the last two rows swapped") {
  const ComplexMatrix want(4, 4, {1, 0, 0, 0,  //
                                  0, 1, 0, 0,  //
                                  0, 0, 0, 1,  //
                                  0, 0, 1, 0});
  CHECK(max_abs_diff(qace::standard_gate("CNOT").matrix, want) == 0.0);
}

TEST_CASE("B gate matches its exponential definition") {
  // B = exp[i (pi/4 XX + pi/8 YY)]
  ComplexMatrix gen = tensor_product(qace::pauli_x(), qace::pauli_x());
  gen *= Complex(kPi / 4.0);
  ComplexMatrix yy = tensor_product(qace::pauli_y(), qace::pauli_y());
  yy *= Complex(kPi / 8.0);
  gen += yy;
  gen *= kI;
  const ComplexMatrix want = oracles::matrix_exp(gen);
  CHECK(max_abs_diff(qace::standard_gate("B").matrix, want) < 1e-12);

  const ComplexMatrix& b = qace::standard_gate("B").matrix;
  CHECK(std::abs(b(0, 0) - Complex(std::cos(kPi / 8.0))) < 1e-15);
  CHECK(std::abs(b(0, 3) - kI * std::sin(kPi / 8.0)) < 1e-15);
}

TEST_CASE("sqrt-SWAP matches its exponential definition and squares to SWAP") {
  ComplexMatrix gen = tensor_product(qace::pauli_x(), qace::pauli_x());
  gen += tensor_product(qace::pauli_y(), qace::pauli_y());
  gen += tensor_product(qace::pauli_z(), qace::pauli_z());
  gen *= kI * (kPi / 8.0);
  const ComplexMatrix want = oracles::matrix_exp(gen);
  const ComplexMatrix rswap = qace::standard_gate("SQRT_SWAP").matrix;
  CHECK(max_abs_diff(rswap, want) < 1e-12);

  // The square equals SWAP up to the global phase fixed by the exponential.
  const ComplexMatrix swap = qace::standard_gate("SWAP").matrix;
  const ComplexMatrix squared = rswap * rswap;
  const Complex phase = squared(0, 0);
  CHECK(std::abs(std::abs(phase) - 1.0) < 1e-12);
  ComplexMatrix rephased = swap;
  rephased *= phase;
  CHECK(max_abs_diff(squared, rephased) < 1e-12);
}

TEST_CASE("SWAP is an involution") {
  const ComplexMatrix swap = qace::standard_gate("SWAP").matrix;
  CHECK(max_abs_diff(swap * swap, ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("every named gate is unitary") {
  for (const char* name : {"CNOT", "CZ", "B", "SQRT_SWAP", "SWAP"}) {
    const qace::GateSpec g = qace::standard_gate(name);
    ComplexMatrix defect = g.matrix.adjoint() * g.matrix;
    defect -= ComplexMatrix::identity(4);
    CHECK(defect.max_abs() <= 1e-10);
  }
}

TEST_CASE("unknown gate names are rejected") {
  CHECK_THROWS_AS(qace::standard_gate("TOFFOLI"), qace::ValidationError);
}

TEST_CASE("gate construction rejects non-unitary matrices") {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(0, 0) = 1.5;
  CHECK_THROWS_AS(qace::GateSpec("bad", m), qace::ValidationError);
}

TEST_CASE("graph state amplitudes, norm, and concurrence") {
  const Ket g2 = qace::graph_state_g2();
  CHECK(std::abs(g2.amp(0) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(g2.amp(1) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(g2.amp(2) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(g2.amp(3) - Complex(-0.5)) < 1e-15);
  CHECK(std::abs(g2.column().frobenius_norm() - 1.0) < 1e-15);
  CHECK(oracles::pure_concurrence(g2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(qace::concurrence(DensityOp(g2.projector())) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("family states: anchors") {
  SUBCASE("G at eps = 1/2 is the graph state") {
    const DensityOp got = qace::family_state(StateFamily::kG, 0.5);
    CHECK(max_abs_diff(got.matrix(), qace::graph_state_g2().projector()) < 1e-14);
  }
  SUBCASE("iso at eps = 0 is maximally mixed") {
    const DensityOp got = qace::family_state(StateFamily::kIso, 0.0);
    ComplexMatrix want = ComplexMatrix::identity(4);
    want *= Complex(0.25);
    CHECK(max_abs_diff(got.matrix(), want) < 1e-14);
  }
  SUBCASE("G at eps = 0 is the product state |1->") {
    const DensityOp got = qace::family_state(StateFamily::kG, 0.0);
    const double r = 1.0 / std::sqrt(2.0);
    const Ket one_minus(ComplexMatrix(4, 1, {0, 0, r, -r}));
    CHECK(max_abs_diff(got.matrix(), one_minus.projector()) < 1e-14);
    CHECK(qace::concurrence(got) < 1e-10);
  }
  SUBCASE("eps outside [0,1] is rejected") {
    CHECK_THROWS_AS(qace::family_state(StateFamily::kG, 1.5), qace::ValidationError);
    CHECK_THROWS_AS(qace::family_state(StateFamily::kIso, -0.1), qace::ValidationError);
  }
}

TEST_CASE("family states: H is the doubly rotated G and F the singly rotated one") {
  const ComplexMatrix h = qace::hadamard();
  const ComplexMatrix hh = tensor_product(h, h);
  const ComplexMatrix ih = tensor_product(ComplexMatrix::identity(2), h);
  for (double eps : {0.0, 0.2, 0.5, 0.9}) {
    const ComplexMatrix g = qace::family_state(StateFamily::kG, eps).matrix();
    CHECK(max_abs_diff(qace::family_state(StateFamily::kH, eps).matrix(),
                       hh * g * hh.adjoint()) < 1e-12);
    // The Schmidt form used for F equals (I (x) H) applied to the G ket.
    CHECK(max_abs_diff(qace::family_state(StateFamily::kF, eps).matrix(),
                       ih * g * ih.adjoint()) < 1e-12);
  }
}

TEST_CASE("classical family members have no entanglement and the expected diagonals") {
  const qace::ClassicalCorrelatedParams p{0.4, 0.1, 0.2, 0.3};
  const DensityOp c = qace::family_state(StateFamily::kC, 0.0, p);
  const DensityOp cp = qace::family_state(StateFamily::kCPrime, 0.0, p);
  const DensityOp cpp = qace::family_state(StateFamily::kCDoublePrime, 0.0, p);
  CHECK(qace::concurrence(c) < 1e-10);
  CHECK(qace::concurrence(cp) < 1e-10);
  CHECK(qace::concurrence(cpp) < 1e-10);
  // The singly rotated member is diagonal in the computational basis.
  ComplexMatrix want(4, 4);
  want(0, 0) = p.p00;
  want(1, 1) = p.p01;
  want(2, 2) = p.p10;
  want(3, 3) = p.p11;
  CHECK(max_abs_diff(cp.matrix(), want) < 1e-14);
}

TEST_CASE("classical params must sum to one") {
  qace::ClassicalCorrelatedParams bad{0.5, 0.5, 0.5, 0.5};
  CHECK_THROWS_AS(bad.validate(), qace::ValidationError);
}

TEST_CASE("concurrence: separable and maximally entangled anchors") {
  qace::SeededRng rng(13);
  CHECK(qace::concurrence(qace::random_product_state(rng)) < 1e-10);
  const double r = 1.0 / std::sqrt(2.0);
  const Ket bell(ComplexMatrix(4, 1, {r, 0, 0, r}));
  CHECK(qace::concurrence(DensityOp(bell.projector())) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("concurrence of the G family is 2 sqrt(eps(1-eps))") {
  for (double eps : {0.1, 0.3, 0.5, 0.8}) {
    const double want = 2.0 * std::sqrt(eps * (1.0 - eps));
    CHECK(std::abs(qace::concurrence(qace::family_state(StateFamily::kG, eps)) - want) <
          1e-8);
  }
}

TEST_CASE("concurrence matches the pure-state formula on 1000 Haar states") {
  qace::SeededRng rng(17);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Ket psi = qace::haar_pure_two_qubit(rng);
    const double got = qace::concurrence(DensityOp(psi.projector()));
    worst = std::max(worst, std::abs(got - oracles::pure_concurrence(psi)));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("concurrence is invariant under local unitaries") {
  qace::SeededRng rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityOp rho = qace::ginibre_mixed_two_qubit(rng);
    const ComplexMatrix u = tensor_product(qace::random_single_qubit_unitary(rng),
                                           qace::random_single_qubit_unitary(rng));
    const DensityOp rotated(u * rho.matrix() * u.adjoint());
    CHECK(std::abs(qace::concurrence(rotated) - qace::concurrence(rho)) < 1e-8);
  }
}

TEST_CASE("gate JSON round trip") {
  const qace::GateSpec swap = qace::standard_gate("SWAP");
  const qace::GateSpec loaded = qace::load_gate_spec(qace::gate_spec_to_json(swap));
  CHECK(loaded.name == "SWAP");
  CHECK(max_abs_diff(loaded.matrix, swap.matrix) == 0.0);
}

TEST_CASE("gate files with defects are rejected") {
  CHECK_THROWS_AS(qace::load_gate_spec("not json"), qace::ValidationError);
  CHECK_THROWS_AS(qace::load_gate_spec(R"({"name":"x"})"), qace::ValidationError);
  // Valid shape, non-unitary content.
  std::string bad = R"({"name":"bad","matrix":[)";
  for (int r = 0; r < 4; ++r) {
    bad += "[";
    for (int c = 0; c < 4; ++c) {
      bad += (r == c) ? "[2,0]" : "[0,0]";
      if (c < 3) bad += ",";
    }
    bad += "]";
    if (r < 3) bad += ",";
  }
  bad += "]}";
  CHECK_THROWS_AS(qace::load_gate_spec(bad), qace::ValidationError);
}
