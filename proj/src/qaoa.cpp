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

#include "qlandscape/qaoa.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <memory>
#include <set>
#include <stdexcept>

#include "qlandscape/rng.hpp"

namespace qlandscape {

void QaoaInstance::validate() const {
  graph.validate();
  if (layers < 1) throw std::invalid_argument("layer count must be positive");
}

std::vector<double> maxcut_cost_values(const Graph& graph, int qubit_limit) {
  graph.validate();
  if (graph.num_vertices > qubit_limit) {
    throw std::invalid_argument("vertex count exceeds the qubit limit");
  }
  const std::size_t dim = std::size_t{1} << graph.num_vertices;
  std::vector<double> values(dim, 0.0);
  for (const auto& [u, v] : graph.edges) {
    const std::uint64_t mu = 1ULL << u;
    const std::uint64_t mv = 1ULL << v;
    for (std::size_t z = 0; z < dim; ++z) {
      values[z] += ((z & mu) != 0) != ((z & mv) != 0) ? 1.0 : 0.0;
    }
  }
  return values;
}

QaoaSimulator::QaoaSimulator(QaoaInstance instance, int qubit_limit)
    : instance_(std::move(instance)), qubit_limit_(qubit_limit) {
  instance_.validate();
  cost_values_ = maxcut_cost_values(instance_.graph, qubit_limit);
}

Statevector QaoaSimulator::evolve(std::span<const double> theta) const {
  if (static_cast<int>(theta.size()) != instance_.dims()) {
    throw std::invalid_argument("theta dimension mismatch");
  }
  Statevector sv = Statevector::plus_state(instance_.graph.num_vertices, qubit_limit_);
  for (int l = 0; l < instance_.layers; ++l) {
    sv.apply_diagonal_phase(cost_values_, theta[2 * l]);
    sv.apply_rx_all(theta[2 * l + 1]);
  }
  return sv;
}

double QaoaSimulator::expectation(std::span<const double> theta) const {
  return evolve(theta).expectation_diagonal(cost_values_);
}

double QaoaSimulator::shot_estimate(std::span<const double> theta, int n_shots,
                                    std::uint64_t seed) const {
  if (n_shots < 1) throw std::invalid_argument("n_shots must be positive");
  std::mt19937_64 rng = make_engine(seed, 0x73686f74ULL);
  const Statevector sv = evolve(theta);
  double acc = 0.0;
  for (std::uint64_t z : sv.sample(n_shots, rng)) acc += cost_values_[z];
  return acc / n_shots;
}

double qaoa_expectation(const QaoaInstance& instance, std::span<const double> theta,
                        int qubit_limit) {
  return QaoaSimulator(instance, qubit_limit).expectation(theta);
}

double shot_sample(const QaoaInstance& instance, std::span<const double> theta, int n_shots,
                   std::uint64_t seed, int qubit_limit) {
  return QaoaSimulator(instance, qubit_limit).shot_estimate(theta, n_shots, seed);
}

FrequencyLattice qaoa_lattice(const QaoaInstance& instance) {
  instance.validate();
  std::vector<int> f(static_cast<std::size_t>(instance.dims()));
  for (int l = 0; l < instance.layers; ++l) {
    f[2 * l] = 2 * instance.graph.num_edges();
    f[2 * l + 1] = 2 * instance.graph.num_vertices;
  }
  return FrequencyLattice(std::move(f));
}

FrequencyLattice qaoa_lightcone_lattice(const QaoaInstance& instance) {
  instance.validate();
  const Graph& g = instance.graph;
  std::vector<std::vector<int>> adj(g.num_vertices);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  const FrequencyLattice loose = qaoa_lattice(instance);
  std::vector<int> f(static_cast<std::size_t>(instance.dims()), 0);

  // Conjugating one cut term Z_u Z_v backwards through the layers: the mixer
  // of layer l contributes frequency at most 2 |support|, the cost layer at
  // most one unit per edge incident to the support, after which the support
  // grows by one neighbourhood.
  for (const auto& edge : g.edges) {
    std::set<int> support{edge.first, edge.second};
    for (int l = instance.layers; l >= 1; --l) {
      f[2 * l - 1] = std::max(f[2 * l - 1], 2 * static_cast<int>(support.size()));
      int incident = 0;
      for (const auto& [u, v] : g.edges) {
        if (support.count(u) || support.count(v)) ++incident;
      }
      f[2 * l - 2] = std::max(f[2 * l - 2], incident);
      std::set<int> grown = support;
      for (int u : support) {
        for (int v : adj[u]) grown.insert(v);
      }
      support = std::move(grown);
    }
  }
  for (int i = 0; i < instance.dims(); ++i) f[i] = std::min(f[i], loose.max_freq()[i]);
  return FrequencyLattice(std::move(f));
}

CostOracle exact_oracle(const QaoaInstance& instance, int qubit_limit) {
  auto sim = std::make_shared<QaoaSimulator>(instance, qubit_limit);
  return [sim](std::span<const double> theta) { return sim->expectation(theta); };
}

CostOracle shot_oracle(const QaoaInstance& instance, int n_shots, std::uint64_t master_seed,
                       int qubit_limit) {
  if (n_shots < 1) throw std::invalid_argument("n_shots must be positive");
  auto sim = std::make_shared<QaoaSimulator>(instance, qubit_limit);
  return [sim, n_shots, master_seed](std::span<const double> theta) {
    // Point seed from the parameter bits keeps results independent of
    // evaluation order and thread count.
    std::uint64_t h = master_seed;
    for (double t : theta) {
      std::uint64_t bits = 0;
      std::memcpy(&bits, &t, sizeof(bits));
      h = splitmix64(h ^ bits);
    }
    return sim->shot_estimate(theta, n_shots, h);
  };
}

double generic_expectation(const GenericCircuit& circuit, std::span<const double> theta,
                           std::uint64_t input_bits, const Observable& observable,
                           int qubit_limit) {
  circuit.validate();
  if (static_cast<int>(theta.size()) != circuit.num_parameters()) {
    throw std::invalid_argument("theta dimension mismatch");
  }
  for (const auto& [coeff, pauli] : observable) {
    if (pauli.num_qubits() != circuit.num_qubits) {
      throw std::invalid_argument("observable qubit count mismatch");
    }
    if (!pauli.is_hermitian() || pauli.hermitian_sign() != 1) {
      throw std::invalid_argument("observable Paulis must carry phase +1");
    }
  }
  Statevector sv = Statevector::basis_state(circuit.num_qubits, input_bits, qubit_limit);
  for (const Gate& gate : circuit.gates) {
    if (gate.kind == Gate::Kind::Clifford) {
      sv.apply_clifford(gate.clifford, gate.qubits);
    } else {
      sv.apply_pauli_rotation(gate.generator, theta[static_cast<std::size_t>(gate.param)]);
    }
  }
  double acc = 0.0;
  for (const auto& [coeff, pauli] : observable) acc += coeff * sv.expectation_pauli(pauli);
  return acc;
}

Observable maxcut_observable(const Graph& graph) {
  graph.validate();
  Observable obs;
  const int n = graph.num_vertices;
  obs.emplace_back(0.5 * graph.num_edges(), PauliString(n));
  for (const auto& [u, v] : graph.edges) {
    obs.emplace_back(-0.5, PauliString(n, 0, (1ULL << u) | (1ULL << v), 0));
  }
  return obs;
}

GenericCircuit qaoa_generic_circuit(const QaoaInstance& instance) {
  instance.validate();
  const int n = instance.graph.num_vertices;
  GenericCircuit circuit;
  circuit.num_qubits = n;
  for (int q = 0; q < n; ++q) {
    circuit.gates.push_back(Gate::make_clifford(CliffordGate::H, {q}));
  }
  for (int l = 0; l < instance.layers; ++l) {
    for (const auto& [u, v] : instance.graph.edges) {
      circuit.gates.push_back(Gate::make_rotation(
          PauliString(n, 0, (1ULL << u) | (1ULL << v), 0), 2 * l));
    }
    for (int q = 0; q < n; ++q) {
      circuit.gates.push_back(Gate::make_rotation(PauliString(n, 1ULL << q, 0, 0), 2 * l + 1));
    }
  }
  return circuit;
}

std::vector<double> qaoa_circuit_parameters(std::span<const double> theta) {
  if (theta.size() % 2 != 0) throw std::invalid_argument("theta must have even length");
  std::vector<double> phi(theta.size());
  for (std::size_t l = 0; 2 * l < theta.size(); ++l) {
    phi[2 * l] = -theta[2 * l];
    phi[2 * l + 1] = 2.0 * theta[2 * l + 1];
  }
  return phi;
}

}  // namespace qlandscape
