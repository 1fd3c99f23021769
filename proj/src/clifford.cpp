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

#include "qlandscape/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace qlandscape {

double PauliTerm::factor_value(std::span<const double> theta) const {
  double v = 1.0;
  for (const auto& [param, kind] : factors) {
    const double t = theta[static_cast<std::size_t>(param)];
    v *= (kind == TrigFactor::Cos) ? std::cos(t) : std::sin(t);
  }
  return v;
}

namespace {

void insert_factor(std::vector<std::pair<int, TrigFactor>>& factors, int param, TrigFactor kind) {
  const std::pair<int, TrigFactor> entry{param, kind};
  factors.insert(std::upper_bound(factors.begin(), factors.end(), entry), entry);
}

PauliTerm normalized(PauliString raw, double coeff,
                     std::vector<std::pair<int, TrigFactor>> factors) {
  PauliTerm term(raw.canonical());
  term.coeff = coeff * raw.hermitian_sign();
  term.factors = std::move(factors);
  return term;
}

using TermKey = std::tuple<std::uint64_t, std::uint64_t, std::vector<std::pair<int, TrigFactor>>>;

std::vector<PauliTerm> merge_terms(std::vector<PauliTerm> terms) {
  std::map<TermKey, double> acc;
  for (PauliTerm& t : terms) {
    acc[TermKey{t.pauli.x_mask(), t.pauli.z_mask(), std::move(t.factors)}] += t.coeff;
  }
  std::vector<PauliTerm> out;
  out.reserve(acc.size());
  const int n = terms.empty() ? 1 : terms.front().pauli.num_qubits();
  for (auto& [key, coeff] : acc) {
    if (coeff == 0.0) continue;
    const auto& [x, z, factors] = key;
    PauliTerm t(PauliString(n, x, z, std::popcount(x & z) % 4));
    t.coeff = coeff;
    t.factors = factors;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<PauliTerm> rotate_pauli(const PauliString& generator, int param,
                                    const PauliTerm& term) {
  if (!generator.is_hermitian() || generator.hermitian_sign() != 1) {
    throw std::invalid_argument("rotation generator must carry phase +1");
  }
  if (generator.commutes_with(term.pauli)) return {term};

  PauliTerm cos_term = term;
  insert_factor(cos_term.factors, param, TrigFactor::Cos);

  auto sin_factors = term.factors;
  insert_factor(sin_factors, param, TrigFactor::Sin);
  PauliTerm sin_term =
      normalized((generator * term.pauli).with_extra_i(1), term.coeff, std::move(sin_factors));
  return {std::move(cos_term), std::move(sin_term)};
}

std::vector<PauliTerm> heisenberg_propagate(const GenericCircuit& circuit,
                                            const PauliString& observable, int max_rotations) {
  circuit.validate();
  if (observable.num_qubits() != circuit.num_qubits) {
    throw std::invalid_argument("observable qubit count mismatch");
  }
  if (!observable.is_hermitian()) throw std::invalid_argument("observable must be Hermitian");
  if (circuit.num_rotations() > max_rotations) {
    throw std::invalid_argument("rotation count exceeds the propagation limit");
  }

  std::vector<PauliTerm> terms{normalized(observable, 1.0, {})};
  // U = g_T ... g_1, so U^dag P U applies the last gate's conjugation first.
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    if (it->kind == Gate::Kind::Clifford) {
      for (PauliTerm& t : terms) {
        t = normalized(conjugate_by_gate_dagger(it->clifford, it->qubits, t.pauli), t.coeff,
                       std::move(t.factors));
      }
    } else {
      std::vector<PauliTerm> next;
      next.reserve(terms.size() * 2);
      for (const PauliTerm& t : terms) {
        for (PauliTerm& branch : rotate_pauli(it->generator, it->param, t)) {
          next.push_back(std::move(branch));
        }
      }
      terms = merge_terms(std::move(next));
    }
  }
  return terms;
}

TrigPoly closed_form_cost(const GenericCircuit& circuit, const Observable& observable,
                          std::uint64_t input_bits, int max_rotations) {
  circuit.validate();
  if (circuit.num_qubits < 64 && input_bits >= (1ULL << circuit.num_qubits)) {
    throw std::invalid_argument("input state out of range");
  }
  const int d = circuit.num_parameters();
  const FrequencyLattice lattice = d == 0
                                       ? FrequencyLattice({0})
                                       : support_from_correlated_circuit(circuit.rotation_counts());
  TrigPoly poly(lattice);
  const int kd = std::max(d, 1);

  for (const auto& [weight, pauli] : observable) {
    if (!pauli.is_hermitian() || pauli.hermitian_sign() != 1) {
      throw std::invalid_argument("observable Paulis must carry phase +1");
    }
    for (const PauliTerm& term : heisenberg_propagate(circuit, pauli, max_rotations)) {
      if (!term.pauli.is_z_type()) continue;  // <x|Q|x> = 0 for X/Y support
      const double sign =
          std::popcount(term.pauli.z_mask() & input_bits) % 2 == 0 ? 1.0 : -1.0;
      const Complex base(weight * term.coeff * sign, 0.0);

      // Expand the cos/sin product into exponentials on the lattice.
      std::map<FrequencyVector, Complex> expanded{{FrequencyVector(kd, 0), base}};
      for (const auto& [param, kind] : term.factors) {
        std::map<FrequencyVector, Complex> next;
        for (const auto& [k, val] : expanded) {
          FrequencyVector up = k;
          ++up[static_cast<std::size_t>(param)];
          FrequencyVector down = k;
          --down[static_cast<std::size_t>(param)];
          if (kind == TrigFactor::Cos) {
            next[up] += 0.5 * val;
            next[down] += 0.5 * val;
          } else {
            next[up] += Complex(0.0, -0.5) * val;
            next[down] += Complex(0.0, 0.5) * val;
          }
        }
        expanded = std::move(next);
      }
      // The expansion is Hermitian-symmetric (val(-k) = conj(val(k))) because
      // the term is real; adding only the canonical entry contributes the
      // whole mirror pair through the storage scheme.
      for (const auto& [k, val] : expanded) {
        if (val != Complex(0.0, 0.0) && is_canonical(k)) poly.add(k, val);
      }
    }
  }
  return poly;
}

}  // namespace qlandscape
