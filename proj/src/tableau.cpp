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

#include "qlandscape/tableau.hpp"

#include <stdexcept>

namespace qlandscape {

namespace {

// Images of X_q and Z_q under g^dag . g for the touched qubits.
// Returned as full-width Pauli strings.
struct GateImages {
  std::vector<int> qubits;
  std::vector<PauliString> x_img;
  std::vector<PauliString> z_img;
};

PauliString single(int n, int q, char letter, int extra_i) {
  const std::uint64_t bit = 1ULL << q;
  switch (letter) {
    case 'X': return PauliString(n, bit, 0, extra_i);
    case 'Z': return PauliString(n, 0, bit, extra_i);
    case 'Y': return PauliString(n, bit, bit, 1 + extra_i);
    default: throw std::logic_error("bad letter");
  }
}

GateImages gate_images(CliffordGate g, std::span<const int> qubits, int n) {
  GateImages im;
  im.qubits.assign(qubits.begin(), qubits.end());
  switch (g) {
    case CliffordGate::H: {
      const int q = qubits[0];
      im.x_img = {single(n, q, 'Z', 0)};
      im.z_img = {single(n, q, 'X', 0)};
      break;
    }
    case CliffordGate::S: {
      // S^dag X S = -Y, S^dag Z S = Z.
      const int q = qubits[0];
      im.x_img = {single(n, q, 'Y', 2)};
      im.z_img = {single(n, q, 'Z', 0)};
      break;
    }
    case CliffordGate::X: {
      const int q = qubits[0];
      im.x_img = {single(n, q, 'X', 0)};
      im.z_img = {single(n, q, 'Z', 2)};
      break;
    }
    case CliffordGate::Y: {
      const int q = qubits[0];
      im.x_img = {single(n, q, 'X', 2)};
      im.z_img = {single(n, q, 'Z', 2)};
      break;
    }
    case CliffordGate::Z: {
      const int q = qubits[0];
      im.x_img = {single(n, q, 'X', 2)};
      im.z_img = {single(n, q, 'Z', 0)};
      break;
    }
    case CliffordGate::CX: {
      const int c = qubits[0];
      const int t = qubits[1];
      im.x_img = {single(n, c, 'X', 0) * single(n, t, 'X', 0), single(n, t, 'X', 0)};
      im.z_img = {single(n, c, 'Z', 0), single(n, c, 'Z', 0) * single(n, t, 'Z', 0)};
      break;
    }
    case CliffordGate::CZ: {
      const int a = qubits[0];
      const int b = qubits[1];
      im.x_img = {single(n, a, 'X', 0) * single(n, b, 'Z', 0),
                  single(n, a, 'Z', 0) * single(n, b, 'X', 0)};
      im.z_img = {single(n, a, 'Z', 0), single(n, b, 'Z', 0)};
      break;
    }
  }
  return im;
}

// Rebuilds i^e X^x Z^z with the factors on `touched` qubits replaced by their
// images. Factors on disjoint supports commute exactly, so only the touched
// block needs careful ordering.
PauliString substitute(const PauliString& p, const GateImages& im) {
  const int n = p.num_qubits();
  std::uint64_t touched = 0;
  for (int q : im.qubits) touched |= 1ULL << q;

  PauliString block(n);
  bool have_block = false;
  for (std::size_t i = 0; i < im.qubits.size(); ++i) {
    if (p.x_mask() & (1ULL << im.qubits[i])) {
      block = have_block ? block * im.x_img[i] : im.x_img[i];
      have_block = true;
    }
  }
  for (std::size_t i = 0; i < im.qubits.size(); ++i) {
    if (p.z_mask() & (1ULL << im.qubits[i])) {
      block = have_block ? block * im.z_img[i] : im.z_img[i];
      have_block = true;
    }
  }
  if (!have_block) return p;

  const PauliString rest(n, p.x_mask() & ~touched, p.z_mask() & ~touched, p.phase_power());
  return rest * block;
}

}  // namespace

PauliString conjugate_by_gate_dagger(CliffordGate g, std::span<const int> qubits,
                                     const PauliString& p) {
  if (static_cast<int>(qubits.size()) != clifford_gate_arity(g)) {
    throw std::invalid_argument("wrong qubit count for gate");
  }
  for (int q : qubits) {
    if (q < 0 || q >= p.num_qubits()) throw std::invalid_argument("gate qubit out of range");
  }
  return substitute(p, gate_images(g, qubits, p.num_qubits()));
}

CliffordTableau::CliffordTableau(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 64) throw std::invalid_argument("qubit count must be in [1, 64]");
  x_images_.reserve(static_cast<std::size_t>(n_));
  z_images_.reserve(static_cast<std::size_t>(n_));
  for (int q = 0; q < n_; ++q) {
    x_images_.push_back(PauliString(n_, 1ULL << q, 0, 0));
    z_images_.push_back(PauliString(n_, 0, 1ULL << q, 0));
  }
}

void CliffordTableau::append(CliffordGate g, std::vector<int> qubits) {
  // New circuit C' = g after C, so the map composes as tau_C(tau_g(.)).
  // Generator images change only on the gate's qubits.
  for (int q : qubits) {
    if (q < 0 || q >= n_) throw std::invalid_argument("gate qubit out of range");
  }
  std::vector<PauliString> new_x, new_z;
  new_x.reserve(qubits.size());
  new_z.reserve(qubits.size());
  for (int q : qubits) {
    new_x.push_back(conjugate(conjugate_by_gate_dagger(g, qubits, PauliString(n_, 1ULL << q, 0, 0))));
    new_z.push_back(conjugate(conjugate_by_gate_dagger(g, qubits, PauliString(n_, 0, 1ULL << q, 0))));
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    x_images_[static_cast<std::size_t>(qubits[i])] = new_x[i];
    z_images_[static_cast<std::size_t>(qubits[i])] = new_z[i];
  }
  ops_.emplace_back(g, std::move(qubits));
}

void CliffordTableau::append(const CliffordTableau& other) {
  if (other.n_ != n_) throw std::invalid_argument("qubit count mismatch");
  for (const auto& [g, qs] : other.ops_) append(g, qs);
}

PauliString CliffordTableau::conjugate(const PauliString& p) const {
  if (p.num_qubits() != n_) throw std::invalid_argument("qubit count mismatch");
  PauliString out(n_);
  out = out.with_extra_i(p.phase_power());
  for (int q = 0; q < n_; ++q) {
    if (p.x_mask() & (1ULL << q)) out = out * x_images_[static_cast<std::size_t>(q)];
  }
  for (int q = 0; q < n_; ++q) {
    if (p.z_mask() & (1ULL << q)) out = out * z_images_[static_cast<std::size_t>(q)];
  }
  return out;
}

CliffordTableau CliffordTableau::inverse() const {
  CliffordTableau inv(n_);
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    const auto& [g, qs] = *it;
    if (g == CliffordGate::S) {
      inv.append(CliffordGate::S, qs);
      inv.append(CliffordGate::S, qs);
      inv.append(CliffordGate::S, qs);
    } else {
      inv.append(g, qs);
    }
  }
  return inv;
}

PauliString conjugate_pauli(const CliffordTableau& tableau, const PauliString& p) {
  return tableau.conjugate(p);
}

}  // namespace qlandscape
