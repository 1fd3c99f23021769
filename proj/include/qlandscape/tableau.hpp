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

#include <span>
#include <utility>
#include <vector>

#include "qlandscape/circuit.hpp"
#include "qlandscape/pauli.hpp"

namespace qlandscape {

/// Conjugation g^dag P g by a single Clifford gate, with exact phase.
PauliString conjugate_by_gate_dagger(CliffordGate g, std::span<const int> qubits,
                                     const PauliString& p);

/// Stabilizer tableau of a Clifford circuit C, stored as the generator images
/// C^dag X_q C and C^dag Z_q C. Gates are appended in circuit order (first
/// appended acts first on the state).
class CliffordTableau {
 public:
  explicit CliffordTableau(int num_qubits);

  int num_qubits() const { return n_; }

  void append(CliffordGate g, std::vector<int> qubits);
  void append(const CliffordTableau& other);  // other's circuit runs after this one

  /// C^dag p C.
  PauliString conjugate(const PauliString& p) const;

  CliffordTableau inverse() const;

  const PauliString& x_image(int q) const { return x_images_[static_cast<std::size_t>(q)]; }
  const PauliString& z_image(int q) const { return z_images_[static_cast<std::size_t>(q)]; }

 private:
  int n_;
  std::vector<PauliString> x_images_;
  std::vector<PauliString> z_images_;
  std::vector<std::pair<CliffordGate, std::vector<int>>> ops_;
};

/// C^dag p C through a composed tableau.
PauliString conjugate_pauli(const CliffordTableau& tableau, const PauliString& p);

}  // namespace qlandscape
