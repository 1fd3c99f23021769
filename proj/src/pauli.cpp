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

#include "qlandscape/pauli.hpp"

#include <bit>
#include <stdexcept>
#include <tuple>

namespace qlandscape {

PauliString::PauliString(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 64) throw std::invalid_argument("qubit count must be in [1, 64]");
}

PauliString::PauliString(int num_qubits, std::uint64_t x_mask, std::uint64_t z_mask, int phase_power)
    : PauliString(num_qubits) {
  const std::uint64_t valid = (num_qubits == 64) ? ~0ULL : ((1ULL << num_qubits) - 1);
  if ((x_mask | z_mask) & ~valid) throw std::invalid_argument("mask exceeds qubit count");
  x_ = x_mask;
  z_ = z_mask;
  e_ = ((phase_power % 4) + 4) % 4;
}

PauliString PauliString::from_string(std::string_view letters) {
  if (letters.empty()) throw std::invalid_argument("empty Pauli string");
  PauliString p(static_cast<int>(letters.size()));
  for (std::size_t q = 0; q < letters.size(); ++q) {
    const std::uint64_t bit = 1ULL << q;
    switch (letters[q]) {
      case 'I': break;
      case 'X': p.x_ |= bit; break;
      case 'Z': p.z_ |= bit; break;
      case 'Y':
        p.x_ |= bit;
        p.z_ |= bit;
        p.e_ = (p.e_ + 1) % 4;
        break;
      default:
        throw std::invalid_argument("Pauli letters must be I, X, Y or Z");
    }
  }
  return p;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_ != other.n_) throw std::invalid_argument("qubit count mismatch");
  const int anti = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
  return (anti % 2) == 0;
}

PauliString PauliString::operator*(const PauliString& other) const {
  if (n_ != other.n_) throw std::invalid_argument("qubit count mismatch");
  // (i^a X^x1 Z^z1)(i^b X^x2 Z^z2): moving X^x2 through Z^z1 flips sign per overlap.
  PauliString out(n_);
  out.x_ = x_ ^ other.x_;
  out.z_ = z_ ^ other.z_;
  out.e_ = (e_ + other.e_ + 2 * std::popcount(z_ & other.x_)) % 4;
  return out;
}

bool PauliString::is_hermitian() const {
  return ((e_ - std::popcount(x_ & z_)) % 2) == 0;
}

int PauliString::hermitian_sign() const {
  if (!is_hermitian()) throw std::logic_error("operator is not Hermitian");
  return ((e_ - std::popcount(x_ & z_)) % 4 + 4) % 4 == 0 ? 1 : -1;
}

PauliString PauliString::canonical() const {
  PauliString out = *this;
  out.e_ = std::popcount(x_ & z_) % 4;
  return out;
}

PauliString PauliString::adjoint() const {
  // (X^x Z^z)^dag = Z^z X^x = (-1)^{|x & z|} X^x Z^z.
  PauliString out = *this;
  out.e_ = ((-e_ + 2 * std::popcount(x_ & z_)) % 4 + 4) % 4;
  return out;
}

PauliString PauliString::with_extra_i(int count) const {
  PauliString out = *this;
  out.e_ = ((e_ + count) % 4 + 4) % 4;
  return out;
}

std::string PauliString::to_string() const {
  std::string s(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) {
    const bool x = (x_ >> q) & 1;
    const bool z = (z_ >> q) & 1;
    if (x && z) s[q] = 'Y';
    else if (x) s[q] = 'X';
    else if (z) s[q] = 'Z';
  }
  return s;
}

bool PauliString::operator<(const PauliString& other) const {
  return std::tie(x_, z_, e_) < std::tie(other.x_, other.z_, other.e_);
}

}  // namespace qlandscape
