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

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qlandscape/circuit.hpp"

namespace qlandscape {

constexpr int kDefaultQubitLimit = 20;

/// Dense statevector over N <= qubit-limit qubits, basis index bit q = qubit q.
class Statevector {
 public:
  Statevector(int num_qubits, int qubit_limit = kDefaultQubitLimit);

  static Statevector plus_state(int num_qubits, int qubit_limit = kDefaultQubitLimit);
  static Statevector basis_state(int num_qubits, std::uint64_t bits,
                                 int qubit_limit = kDefaultQubitLimit);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return amp_.size(); }
  const std::vector<std::complex<double>>& amplitudes() const { return amp_; }

  void apply_clifford(CliffordGate g, const std::vector<int>& qubits);
  /// exp(-i P theta / 2) for a phase +1 Hermitian Pauli generator.
  void apply_pauli_rotation(const PauliString& p, double theta);
  /// Diagonal phase exp(-i gamma * values[z]) per basis state.
  void apply_diagonal_phase(const std::vector<double>& values, double gamma);
  /// exp(-i beta X) on every qubit.
  void apply_rx_all(double beta);

  double norm() const;
  double expectation_diagonal(const std::vector<double>& values) const;
  double expectation_pauli(const PauliString& p) const;

  /// Draws n_shots basis states from |amp|^2 and returns their indices.
  std::vector<std::uint64_t> sample(int n_shots, std::mt19937_64& rng) const;

 private:
  int n_;
  std::vector<std::complex<double>> amp_;
};

}  // namespace qlandscape
