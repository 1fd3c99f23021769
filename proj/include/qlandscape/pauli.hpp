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
#include <string>
#include <string_view>

namespace qlandscape {

/// N-qubit Pauli operator in the symplectic form P = i^e X^x Z^z with
/// bit-mask x/z components (bit q = qubit q) and phase exponent e mod 4.
/// Y contributes one factor of i, so the phase-+1 string "XY Z" has
/// e = (number of Y letters) mod 4. Supports up to 64 qubits.
class PauliString {
 public:
  explicit PauliString(int num_qubits);
  PauliString(int num_qubits, std::uint64_t x_mask, std::uint64_t z_mask, int phase_power);

  /// Parses a letter string like "IZXY" (qubit 0 first) with overall phase +1.
  static PauliString from_string(std::string_view letters);

  int num_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  int phase_power() const { return e_; }

  bool is_identity() const { return x_ == 0 && z_ == 0 && e_ == 0; }
  bool is_z_type() const { return x_ == 0; }

  bool commutes_with(const PauliString& other) const;
  PauliString operator*(const PauliString& other) const;

  bool is_hermitian() const;
  /// +1 or -1 relative to the canonical Hermitian representative
  /// (e = popcount(x & z) mod 4). Requires a Hermitian operator.
  int hermitian_sign() const;
  /// Same operator with sign +1 (canonical phase exponent).
  PauliString canonical() const;

  PauliString adjoint() const;
  PauliString with_extra_i(int count) const;  // multiplies by i^count

  /// Letter representation without the sign.
  std::string to_string() const;

  bool operator==(const PauliString& other) const = default;
  /// Strict ordering on (x, z, e); used as a map key.
  bool operator<(const PauliString& other) const;

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int e_ = 0;  // power of i, mod 4
};

}  // namespace qlandscape
