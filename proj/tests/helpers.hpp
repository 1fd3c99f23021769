// Copyright 2026 The qlandscape Authors
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

// Test-only oracles kept independent of the library implementation paths
// they validate: dense matrix algebra for circuits, naive full-lattice trig
// sums, finite differences.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qlandscape/circuit.hpp"
#include "qlandscape/clifford.hpp"
#include "qlandscape/rng.hpp"
#include "qlandscape/trigpoly.hpp"

namespace qlandscape::testing {

using Mat = std::vector<std::vector<Complex>>;

inline Mat identity_matrix(std::size_t dim) {
  Mat m(dim, std::vector<Complex>(dim, {0.0, 0.0}));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = {1.0, 0.0};
  return m;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  const std::size_t dim = a.size();
  Mat out(dim, std::vector<Complex>(dim, {0.0, 0.0}));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      if (a[i][k] == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < dim; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

inline Mat dagger(const Mat& a) {
  const std::size_t dim = a.size();
  Mat out(dim, std::vector<Complex>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) out[i][j] = std::conj(a[j][i]);
  }
  return out;
}

inline Mat pauli_matrix(const PauliString& p) {
  const std::size_t dim = std::size_t{1} << p.num_qubits();
  Mat m(dim, std::vector<Complex>(dim, {0.0, 0.0}));
  Complex phase{1.0, 0.0};
  switch (((p.phase_power() % 4) + 4) % 4) {
    case 1: phase = {0.0, 1.0}; break;
    case 2: phase = {-1.0, 0.0}; break;
    case 3: phase = {0.0, -1.0}; break;
    default: break;
  }
  for (std::size_t b = 0; b < dim; ++b) {
    const double sign = std::popcount(b & p.z_mask()) % 2 == 0 ? 1.0 : -1.0;
    m[b ^ p.x_mask()][b] = phase * sign;
  }
  return m;
}

inline Mat single_qubit_matrix(const Mat& u, int q, int n) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t bit = std::size_t{1} << q;
  Mat m(dim, std::vector<Complex>(dim, {0.0, 0.0}));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if ((i & ~bit) != (j & ~bit)) continue;
      m[i][j] = u[(i & bit) ? 1 : 0][(j & bit) ? 1 : 0];
    }
  }
  return m;
}

inline Mat clifford_gate_matrix(CliffordGate g, const std::vector<int>& qubits, int n) {
  const std::size_t dim = std::size_t{1} << n;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (g) {
    case CliffordGate::H:
      return single_qubit_matrix({{{inv_sqrt2, 0}, {inv_sqrt2, 0}}, {{inv_sqrt2, 0}, {-inv_sqrt2, 0}}},
                                 qubits[0], n);
    case CliffordGate::S:
      return single_qubit_matrix({{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}, qubits[0], n);
    case CliffordGate::X:
      return single_qubit_matrix({{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}}, qubits[0], n);
    case CliffordGate::Y:
      return single_qubit_matrix({{{0, 0}, {0, -1}}, {{0, 1}, {0, 0}}}, qubits[0], n);
    case CliffordGate::Z:
      return single_qubit_matrix({{{1, 0}, {0, 0}}, {{0, 0}, {-1, 0}}}, qubits[0], n);
    case CliffordGate::CX: {
      Mat m(dim, std::vector<Complex>(dim, {0.0, 0.0}));
      const std::size_t c = std::size_t{1} << qubits[0];
      const std::size_t t = std::size_t{1} << qubits[1];
      for (std::size_t b = 0; b < dim; ++b) m[(b & c) ? (b ^ t) : b][b] = {1.0, 0.0};
      return m;
    }
    case CliffordGate::CZ: {
      Mat m = identity_matrix(dim);
      const std::size_t a = std::size_t{1} << qubits[0];
      const std::size_t b2 = std::size_t{1} << qubits[1];
      for (std::size_t b = 0; b < dim; ++b) {
        if ((b & a) && (b & b2)) m[b][b] = {-1.0, 0.0};
      }
      return m;
    }
  }
  throw std::logic_error("unknown gate");
}

inline Mat rotation_matrix(const PauliString& p, double theta) {
  const std::size_t dim = std::size_t{1} << p.num_qubits();
  const Mat pm = pauli_matrix(p);
  Mat m = identity_matrix(dim);
  const double c = std::cos(theta / 2.0);
  const Complex ms(0.0, -std::sin(theta / 2.0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m[i][j] = c * m[i][j] + ms * pm[i][j];
  }
  return m;
}

inline Mat circuit_unitary(const GenericCircuit& circuit, std::span<const double> theta) {
  Mat u = identity_matrix(std::size_t{1} << circuit.num_qubits);
  for (const Gate& g : circuit.gates) {
    const Mat gm = g.kind == Gate::Kind::Clifford
                       ? clifford_gate_matrix(g.clifford, g.qubits, circuit.num_qubits)
                       : rotation_matrix(g.generator, theta[static_cast<std::size_t>(g.param)]);
    u = matmul(gm, u);
  }
  return u;
}

inline double dense_expectation(const GenericCircuit& circuit, std::span<const double> theta,
                                std::uint64_t input, const Observable& obs) {
  const std::size_t dim = std::size_t{1} << circuit.num_qubits;
  const Mat u = circuit_unitary(circuit, theta);
  std::vector<Complex> psi(dim);
  for (std::size_t i = 0; i < dim; ++i) psi[i] = u[i][input];
  Complex acc{0.0, 0.0};
  for (const auto& [coeff, pauli] : obs) {
    const Mat pm = pauli_matrix(pauli);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        acc += std::conj(psi[i]) * coeff * pm[i][j] * psi[j];
      }
    }
  }
  return acc.real();
}

/// Naive full-lattice evaluation: sum over every lattice point of
/// c_k exp(i k.theta) with mirror coefficients reconstructed by conjugation.
inline double naive_eval(const TrigPoly& poly, std::span<const double> theta) {
  const FrequencyLattice& lattice = poly.lattice();
  Complex acc{0.0, 0.0};
  for (std::size_t flat = 0; flat < lattice.size(); ++flat) {
    const FrequencyVector k = lattice.frequency_at(flat);
    const Complex c = poly.coeff(k);
    if (c == Complex(0.0, 0.0)) continue;
    double phase = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) phase += k[i] * theta[i];
    acc += c * Complex(std::cos(phase), std::sin(phase));
  }
  return acc.real();
}

inline TrigPoly random_poly(const FrequencyLattice& lattice, std::size_t terms,
                            std::mt19937_64& rng) {
  TrigPoly poly(lattice);
  poly.set(FrequencyVector(lattice.dims(), 0), Complex(uniform_real(rng, -1.0, 1.0), 0.0));
  for (std::size_t t = 0; t < terms; ++t) {
    const std::size_t flat = uniform_index(rng, lattice.size());
    FrequencyVector k = lattice.frequency_at(flat);
    if (!is_canonical(k)) k = negated(k);
    const bool zero = std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
    poly.set(k, Complex(uniform_real(rng, -1.0, 1.0),
                        zero ? 0.0 : uniform_real(rng, -1.0, 1.0)));
  }
  return poly;
}

inline std::vector<double> random_theta(int dims, std::mt19937_64& rng) {
  std::vector<double> theta(static_cast<std::size_t>(dims));
  for (double& t : theta) t = uniform_real(rng, 0.0, 2.0 * std::numbers::pi);
  return theta;
}

/// Random Clifford+rotation circuit; rotation generators have weight 1..3 and
/// phase +1, parameter indices cover 0..num_params-1 (repeats allowed).
inline GenericCircuit random_circuit(int num_qubits, int num_rotations, int num_cliffords,
                                     std::mt19937_64& rng, int num_params = -1) {
  if (num_params <= 0 || num_params > num_rotations) num_params = num_rotations;
  GenericCircuit circuit;
  circuit.num_qubits = num_qubits;
  std::vector<int> params;
  for (int j = 0; j < num_params; ++j) params.push_back(j);
  for (int j = num_params; j < num_rotations; ++j) {
    params.push_back(static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(num_params))));
  }
  for (std::size_t i = params.size(); i > 1; --i) {
    std::swap(params[i - 1], params[uniform_index(rng, i)]);
  }

  int placed_rotations = 0;
  const int total = num_rotations + num_cliffords;
  for (int slot = 0; slot < total; ++slot) {
    const int remaining_rot = num_rotations - placed_rotations;
    const int remaining_slots = total - slot;
    const bool rotation = uniform_index(rng, static_cast<std::uint64_t>(remaining_slots)) <
                          static_cast<std::uint64_t>(remaining_rot);
    if (rotation) {
      std::uint64_t x = 0, z = 0;
      const int weight = 1 + static_cast<int>(uniform_index(rng, 3));
      std::vector<int> qs;
      while (static_cast<int>(qs.size()) < std::min(weight, num_qubits)) {
        const int q = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(num_qubits)));
        if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
      }
      int extra_i = 0;
      for (int q : qs) {
        switch (uniform_index(rng, 3)) {
          case 0: x |= 1ULL << q; break;
          case 1: z |= 1ULL << q; break;
          default:
            x |= 1ULL << q;
            z |= 1ULL << q;
            ++extra_i;
            break;
        }
      }
      circuit.gates.push_back(Gate::make_rotation(
          PauliString(num_qubits, x, z, extra_i), params[static_cast<std::size_t>(placed_rotations)]));
      ++placed_rotations;
    } else {
      const int which = static_cast<int>(uniform_index(rng, 7));
      const CliffordGate g = static_cast<CliffordGate>(which);
      std::vector<int> qs;
      qs.push_back(static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(num_qubits))));
      if (clifford_gate_arity(g) == 2) {
        int q2 = qs[0];
        while (q2 == qs[0]) {
          q2 = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(num_qubits)));
        }
        qs.push_back(q2);
      }
      circuit.gates.push_back(Gate::make_clifford(g, std::move(qs)));
    }
  }
  return circuit;
}

inline PauliString random_pauli(int num_qubits, std::mt19937_64& rng, bool allow_identity = true) {
  while (true) {
    std::uint64_t x = 0, z = 0;
    int extra_i = 0;
    for (int q = 0; q < num_qubits; ++q) {
      switch (uniform_index(rng, 4)) {
        case 1: x |= 1ULL << q; break;
        case 2: z |= 1ULL << q; break;
        case 3:
          x |= 1ULL << q;
          z |= 1ULL << q;
          ++extra_i;
          break;
        default: break;
      }
    }
    if (!allow_identity && x == 0 && z == 0) continue;
    return PauliString(num_qubits, x, z, extra_i);
  }
}

}  // namespace qlandscape::testing
