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

#pragma once

#include <cstdint>
#include <optional>

#include "qlandscape/circuit.hpp"
#include "qlandscape/graph.hpp"
#include "qlandscape/spectral.hpp"
#include "qlandscape/statevector.hpp"

namespace qlandscape {

/// QAOA/MaxCut problem instance. The parameter vector is ordered
/// (gamma_1, beta_1, ..., gamma_p, beta_p), so d = 2p. Layer unitaries are
/// exp(-i gamma H_C) and exp(-i beta sum_i X_i) with H_C the cut-count
/// diagonal, acting on |+>^N.
struct QaoaInstance {
  Graph graph;
  int layers = 1;

  int dims() const { return 2 * layers; }
  void validate() const;
};

/// Cut size of every bitstring: entry z = sum over edges of (z_u xor z_v).
std::vector<double> maxcut_cost_values(const Graph& graph,
                                       int qubit_limit = kDefaultQubitLimit);

/// Exact <psi(theta)| C |psi(theta)> by dense statevector simulation.
double qaoa_expectation(const QaoaInstance& instance, std::span<const double> theta,
                        int qubit_limit = kDefaultQubitLimit);

/// Safe superset frequency lattice under the canonical exp(-i P theta / 2)
/// convention: every gamma dimension gets f = 2|E| (each cost layer
/// correlates |E| two-qubit rotations through an angle equivalent to
/// 2 gamma), every beta dimension f = 2N.
FrequencyLattice qaoa_lattice(const QaoaInstance& instance);

/// Tighter superset obtained from the observable light cones: frequencies per
/// layer are bounded by the edges and vertices a cut term can reach, which
/// for shallow circuits does not grow with N. Still a superset of the true
/// support, so DFT/BPDN on its Nyquist grid stays exact; it is the practical
/// lattice for p >= 2 recovery.
FrequencyLattice qaoa_lightcone_lattice(const QaoaInstance& instance);

/// Mean cut value of n_shots bitstrings drawn from |psi(theta)|^2.
/// Unbiased estimator of qaoa_expectation, deterministic per seed.
double shot_sample(const QaoaInstance& instance, std::span<const double> theta, int n_shots,
                   std::uint64_t seed, int qubit_limit = kDefaultQubitLimit);

/// Reusable exact evaluator; thread safe (the cost table is shared read-only).
class QaoaSimulator {
 public:
  explicit QaoaSimulator(QaoaInstance instance, int qubit_limit = kDefaultQubitLimit);

  const QaoaInstance& instance() const { return instance_; }
  double expectation(std::span<const double> theta) const;
  double shot_estimate(std::span<const double> theta, int n_shots, std::uint64_t seed) const;

 private:
  Statevector evolve(std::span<const double> theta) const;

  QaoaInstance instance_;
  int qubit_limit_;
  std::vector<double> cost_values_;
};

/// Exact oracle closure over a shared simulator.
CostOracle exact_oracle(const QaoaInstance& instance, int qubit_limit = kDefaultQubitLimit);

/// Finite-shot oracle. The per-point RNG stream is derived from the master
/// seed and the bits of theta, so values do not depend on evaluation order.
CostOracle shot_oracle(const QaoaInstance& instance, int n_shots, std::uint64_t master_seed,
                       int qubit_limit = kDefaultQubitLimit);

/// Exact expectation of an observable after a Clifford+rotation circuit on a
/// computational basis input. Observable Paulis must carry phase +1.
double generic_expectation(const GenericCircuit& circuit, std::span<const double> theta,
                           std::uint64_t input_bits, const Observable& observable,
                           int qubit_limit = kDefaultQubitLimit);

/// Cut-count observable sum_edges (1 - Z_u Z_v) / 2.
Observable maxcut_observable(const Graph& graph);

/// QAOA instance expressed as a canonical Clifford+rotation circuit.
/// Circuit parameters relate to QAOA parameters via
/// qaoa_circuit_parameters: phi_{2l-2} = -gamma_l (ZZ rotations),
/// phi_{2l-1} = 2 beta_l (X rotations); expectations then agree exactly.
GenericCircuit qaoa_generic_circuit(const QaoaInstance& instance);
std::vector<double> qaoa_circuit_parameters(std::span<const double> theta);

}  // namespace qlandscape
