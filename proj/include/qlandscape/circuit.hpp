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

#include <string>
#include <vector>

#include "qlandscape/pauli.hpp"

namespace qlandscape {

enum class CliffordGate { H, S, X, Y, Z, CX, CZ };

std::string clifford_gate_name(CliffordGate g);
CliffordGate clifford_gate_from_name(const std::string& name);
int clifford_gate_arity(CliffordGate g);

/// One circuit element: either a Clifford gate on explicit qubits or a
/// canonically parameterised Pauli rotation exp(-i P theta_j / 2).
struct Gate {
  enum class Kind { Clifford, Rotation };

  Kind kind = Kind::Clifford;
  CliffordGate clifford = CliffordGate::H;
  std::vector<int> qubits;

  PauliString generator = PauliString(1);
  int param = -1;

  static Gate make_clifford(CliffordGate g, std::vector<int> qubits);
  static Gate make_rotation(PauliString generator, int param);
};

/// Alternating Clifford/rotation circuit. Parameter indices must cover a
/// contiguous range 0..d-1; repeated indices mean correlated gates.
struct GenericCircuit {
  int num_qubits = 0;
  std::vector<Gate> gates;

  int num_parameters() const;
  int num_rotations() const;
  /// Number of rotation gates sharing each parameter (size num_parameters()).
  std::vector<int> rotation_counts() const;

  void validate() const;
};

/// Hermitian observable as a real combination of phase +1 Pauli strings.
using Observable = std::vector<std::pair<double, PauliString>>;

}  // namespace qlandscape
