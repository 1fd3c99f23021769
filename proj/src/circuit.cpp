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

#include "qlandscape/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlandscape {

std::string clifford_gate_name(CliffordGate g) {
  switch (g) {
    case CliffordGate::H: return "h";
    case CliffordGate::S: return "s";
    case CliffordGate::X: return "x";
    case CliffordGate::Y: return "y";
    case CliffordGate::Z: return "z";
    case CliffordGate::CX: return "cx";
    case CliffordGate::CZ: return "cz";
  }
  throw std::logic_error("unknown gate");
}

CliffordGate clifford_gate_from_name(const std::string& name) {
  if (name == "h") return CliffordGate::H;
  if (name == "s") return CliffordGate::S;
  if (name == "x") return CliffordGate::X;
  if (name == "y") return CliffordGate::Y;
  if (name == "z") return CliffordGate::Z;
  if (name == "cx") return CliffordGate::CX;
  if (name == "cz") return CliffordGate::CZ;
  throw std::invalid_argument("unknown Clifford gate: " + name);
}

int clifford_gate_arity(CliffordGate g) {
  return (g == CliffordGate::CX || g == CliffordGate::CZ) ? 2 : 1;
}

Gate Gate::make_clifford(CliffordGate g, std::vector<int> qubits) {
  Gate gate;
  gate.kind = Kind::Clifford;
  gate.clifford = g;
  gate.qubits = std::move(qubits);
  if (static_cast<int>(gate.qubits.size()) != clifford_gate_arity(g)) {
    throw std::invalid_argument("wrong qubit count for gate");
  }
  return gate;
}

Gate Gate::make_rotation(PauliString generator, int param) {
  if (param < 0) throw std::invalid_argument("parameter index must be nonnegative");
  if (!generator.is_hermitian() || generator.hermitian_sign() != 1) {
    throw std::invalid_argument("rotation generator must carry phase +1");
  }
  Gate gate;
  gate.kind = Kind::Rotation;
  gate.generator = std::move(generator);
  gate.param = param;
  return gate;
}

int GenericCircuit::num_parameters() const {
  int max_param = -1;
  for (const Gate& g : gates) {
    if (g.kind == Gate::Kind::Rotation) max_param = std::max(max_param, g.param);
  }
  return max_param + 1;
}

int GenericCircuit::num_rotations() const {
  int m = 0;
  for (const Gate& g : gates) m += (g.kind == Gate::Kind::Rotation) ? 1 : 0;
  return m;
}

std::vector<int> GenericCircuit::rotation_counts() const {
  std::vector<int> counts(num_parameters(), 0);
  for (const Gate& g : gates) {
    if (g.kind == Gate::Kind::Rotation) ++counts[g.param];
  }
  return counts;
}

void GenericCircuit::validate() const {
  if (num_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
  std::vector<bool> used(static_cast<std::size_t>(num_parameters()), false);
  for (const Gate& g : gates) {
    if (g.kind == Gate::Kind::Clifford) {
      for (int q : g.qubits) {
        if (q < 0 || q >= num_qubits) throw std::invalid_argument("gate qubit out of range");
      }
      if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits");
      }
    } else {
      if (g.generator.num_qubits() != num_qubits) {
        throw std::invalid_argument("rotation generator qubit count mismatch");
      }
      if (g.param < 0) throw std::invalid_argument("negative parameter index");
      used[static_cast<std::size_t>(g.param)] = true;
    }
  }
  for (bool u : used) {
    if (!u) throw std::invalid_argument("parameter indices must form a contiguous range");
  }
}

}  // namespace qlandscape
