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
#include <utility>
#include <vector>

#include "qlandscape/circuit.hpp"
#include "qlandscape/tableau.hpp"
#include "qlandscape/trigpoly.hpp"

namespace qlandscape {

/// Hard cap on parameterised gates for Heisenberg propagation; the branch
/// count is bounded by 2^M.
constexpr int kDefaultMaxRotations = 14;

enum class TrigFactor : std::uint8_t { Cos, Sin };

/// One term of U^dag(theta) P U(theta): a signed Pauli times a product of
/// cos/sin factors of circuit parameters. The Pauli is kept canonical
/// (phase +1) with the sign folded into coeff.
struct PauliTerm {
  PauliString pauli;
  double coeff = 1.0;
  std::vector<std::pair<int, TrigFactor>> factors;  // sorted (param, kind) multiset

  explicit PauliTerm(PauliString p) : pauli(std::move(p)) {}

  /// Numeric value of the trig factor product at theta.
  double factor_value(std::span<const double> theta) const;
};

/// Conjugation of a term through exp(+i P theta_j / 2) . exp(-i P theta_j / 2):
/// unchanged for commuting Paulis, otherwise the cos branch keeps the Pauli
/// and the sin branch carries i P Q. The generator must have phase +1.
std::vector<PauliTerm> rotate_pauli(const PauliString& generator, int param,
                                    const PauliTerm& term);

/// Full Heisenberg propagation of an observable Pauli through the circuit.
/// Identical (pauli, factors) terms are merged; the result satisfies
/// sum_t coeff_t factors_t(theta) pauli_t = U^dag(theta) P U(theta).
std::vector<PauliTerm> heisenberg_propagate(const GenericCircuit& circuit,
                                            const PauliString& observable,
                                            int max_rotations = kDefaultMaxRotations);

/// Closed-form cost function <x| U^dag O U |x> as a trigonometric polynomial
/// over the lattice implied by the circuit's parameter sharing. Only Z-type
/// propagated Paulis survive a computational basis input. A circuit with no
/// parameterised gates yields a constant polynomial on a single dummy
/// dimension with f = 0.
TrigPoly closed_form_cost(const GenericCircuit& circuit, const Observable& observable,
                          std::uint64_t input_bits, int max_rotations = kDefaultMaxRotations);

}  // namespace qlandscape
