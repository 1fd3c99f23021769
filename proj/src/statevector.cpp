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

#include "qlandscape/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qlandscape/rng.hpp"

namespace qlandscape {

namespace {
constexpr std::complex<double> kI(0.0, 1.0);

std::complex<double> i_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}
}  // namespace

Statevector::Statevector(int num_qubits, int qubit_limit) : n_(num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("need at least one qubit");
  if (num_qubits > qubit_limit) throw std::invalid_argument("qubit count exceeds the simulator limit");
  amp_.assign(std::size_t{1} << num_qubits, {0.0, 0.0});
}

Statevector Statevector::plus_state(int num_qubits, int qubit_limit) {
  Statevector sv(num_qubits, qubit_limit);
  const double a = 1.0 / std::sqrt(static_cast<double>(sv.dim()));
  std::fill(sv.amp_.begin(), sv.amp_.end(), std::complex<double>(a, 0.0));
  return sv;
}

Statevector Statevector::basis_state(int num_qubits, std::uint64_t bits, int qubit_limit) {
  Statevector sv(num_qubits, qubit_limit);
  if (bits >= sv.dim()) throw std::invalid_argument("basis state out of range");
  sv.amp_[bits] = {1.0, 0.0};
  return sv;
}

void Statevector::apply_clifford(CliffordGate g, const std::vector<int>& qubits) {
  if (static_cast<int>(qubits.size()) != clifford_gate_arity(g)) {
    throw std::invalid_argument("wrong qubit count for gate");
  }
  for (int q : qubits) {
    if (q < 0 || q >= n_) throw std::invalid_argument("gate qubit out of range");
  }
  const std::size_t dim = amp_.size();
  switch (g) {
    case CliffordGate::H: {
      const std::size_t bit = std::size_t{1} << qubits[0];
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        const auto a = amp_[i];
        const auto b = amp_[i | bit];
        amp_[i] = (a + b) * inv_sqrt2;
        amp_[i | bit] = (a - b) * inv_sqrt2;
      }
      break;
    }
    case CliffordGate::S: {
      const std::size_t bit = std::size_t{1} << qubits[0];
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit) amp_[i] *= kI;
      }
      break;
    }
    case CliffordGate::X: {
      const std::size_t bit = std::size_t{1} << qubits[0];
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & bit)) std::swap(amp_[i], amp_[i | bit]);
      }
      break;
    }
    case CliffordGate::Y: {
      const std::size_t bit = std::size_t{1} << qubits[0];
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        const auto a = amp_[i];
        const auto b = amp_[i | bit];
        amp_[i] = -kI * b;
        amp_[i | bit] = kI * a;
      }
      break;
    }
    case CliffordGate::Z: {
      const std::size_t bit = std::size_t{1} << qubits[0];
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit) amp_[i] = -amp_[i];
      }
      break;
    }
    case CliffordGate::CX: {
      if (qubits[0] == qubits[1]) throw std::invalid_argument("control equals target");
      const std::size_t c = std::size_t{1} << qubits[0];
      const std::size_t t = std::size_t{1} << qubits[1];
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & c) && !(i & t)) std::swap(amp_[i], amp_[i | t]);
      }
      break;
    }
    case CliffordGate::CZ: {
      if (qubits[0] == qubits[1]) throw std::invalid_argument("control equals target");
      const std::size_t a = std::size_t{1} << qubits[0];
      const std::size_t b = std::size_t{1} << qubits[1];
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & a) && (i & b)) amp_[i] = -amp_[i];
      }
      break;
    }
  }
}

void Statevector::apply_pauli_rotation(const PauliString& p, double theta) {
  if (p.num_qubits() != n_) throw std::invalid_argument("generator qubit count mismatch");
  if (!p.is_hermitian() || p.hermitian_sign() != 1) {
    throw std::invalid_argument("rotation generator must carry phase +1");
  }
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const std::size_t dim = amp_.size();
  if (x == 0) {
    // Diagonal: eigenvalue (-1)^{|z & b|} per basis state.
    const std::complex<double> f_plus(c, -s);
    const std::complex<double> f_minus(c, s);
    for (std::size_t b = 0; b < dim; ++b) {
      amp_[b] *= (std::popcount(b & z) % 2 == 0) ? f_plus : f_minus;
    }
    return;
  }
  const std::complex<double> pf = -kI * s * i_power(p.phase_power());
  const std::uint64_t pivot = x & (~x + 1);
  for (std::size_t b = 0; b < dim; ++b) {
    if (b & pivot) continue;
    const std::size_t b2 = b ^ x;
    const double sign_b = (std::popcount(b & z) % 2 == 0) ? 1.0 : -1.0;
    const double sign_b2 = (std::popcount(b2 & z) % 2 == 0) ? 1.0 : -1.0;
    const auto va = amp_[b];
    const auto vb = amp_[b2];
    amp_[b] = c * va + pf * sign_b2 * vb;
    amp_[b2] = c * vb + pf * sign_b * va;
  }
}

void Statevector::apply_diagonal_phase(const std::vector<double>& values, double gamma) {
  if (values.size() != amp_.size()) throw std::invalid_argument("diagonal length mismatch");
  for (std::size_t b = 0; b < amp_.size(); ++b) {
    const double ang = -gamma * values[b];
    amp_[b] *= std::complex<double>(std::cos(ang), std::sin(ang));
  }
}

void Statevector::apply_rx_all(double beta) {
  const double c = std::cos(beta);
  const std::complex<double> ms(0.0, -std::sin(beta));
  const std::size_t dim = amp_.size();
  for (int q = 0; q < n_; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const auto a = amp_[i];
      const auto b = amp_[i | bit];
      amp_[i] = c * a + ms * b;
      amp_[i | bit] = ms * a + c * b;
    }
  }
}

double Statevector::norm() const {
  double acc = 0.0;
  for (const auto& a : amp_) acc += std::norm(a);
  return std::sqrt(acc);
}

double Statevector::expectation_diagonal(const std::vector<double>& values) const {
  if (values.size() != amp_.size()) throw std::invalid_argument("diagonal length mismatch");
  double acc = 0.0;
  for (std::size_t b = 0; b < amp_.size(); ++b) acc += std::norm(amp_[b]) * values[b];
  return acc;
}

double Statevector::expectation_pauli(const PauliString& p) const {
  if (p.num_qubits() != n_) throw std::invalid_argument("observable qubit count mismatch");
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const std::complex<double> phase = i_power(p.phase_power());
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t b = 0; b < amp_.size(); ++b) {
    const std::size_t src = b ^ x;
    const double sign = (std::popcount(b & z) % 2 == 0) ? 1.0 : -1.0;
    acc += std::conj(amp_[src]) * (phase * sign) * amp_[b];
  }
  return acc.real();
}

std::vector<std::uint64_t> Statevector::sample(int n_shots, std::mt19937_64& rng) const {
  if (n_shots < 1) throw std::invalid_argument("n_shots must be positive");
  std::vector<double> cdf(amp_.size());
  double acc = 0.0;
  for (std::size_t b = 0; b < amp_.size(); ++b) {
    acc += std::norm(amp_[b]);
    cdf[b] = acc;
  }
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n_shots));
  for (auto& shot : out) {
    const double u = uniform01(rng) * acc;
    shot = static_cast<std::uint64_t>(
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    if (shot >= amp_.size()) shot = amp_.size() - 1;
  }
  return out;
}

}  // namespace qlandscape
