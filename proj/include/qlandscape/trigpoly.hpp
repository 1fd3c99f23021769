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
#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace qlandscape {

using Complex = std::complex<double>;

/// Integer frequency vector, one entry per independent parameter.
using FrequencyVector = std::vector<int>;

/// Bounded integer frequency lattice: frequencies range over
/// {-f_i, ..., f_i} in each of d dimensions, total size n = prod(2 f_i + 1).
///
/// All modules share one flat-index bijection over the lattice: mixed radix
/// with dimension 0 most significant and digit_i = k_i + f_i.
class FrequencyLattice {
 public:
  explicit FrequencyLattice(std::vector<int> max_freq);

  int dims() const { return static_cast<int>(max_freq_.size()); }
  const std::vector<int>& max_freq() const { return max_freq_; }
  std::size_t size() const { return size_; }

  /// Per-dimension Nyquist grid sizes g_i = 2 f_i + 1 (always odd).
  std::vector<int> grid_sizes() const;

  bool contains(const FrequencyVector& k) const;
  std::size_t flat_index(const FrequencyVector& k) const;
  FrequencyVector frequency_at(std::size_t flat) const;

  /// Flat index of the mirrored frequency -k.
  std::size_t mirror_index(std::size_t flat) const;

  bool operator==(const FrequencyLattice& other) const {
    return max_freq_ == other.max_freq_;
  }

 private:
  std::vector<int> max_freq_;
  std::size_t size_ = 1;
};

/// Lattice spanned by a circuit whose dimension i groups M_i canonically
/// parameterised Pauli rotations under one superparameter: f_i = M_i.
FrequencyLattice support_from_correlated_circuit(const std::vector<int>& group_sizes);

/// True when k is the stored representative of its {k, -k} pair:
/// k = 0 or the first nonzero component of k is positive.
bool is_canonical(const FrequencyVector& k);
FrequencyVector negated(const FrequencyVector& k);

/// Real-valued multivariate trigonometric polynomial
///   f(theta) = sum_k c_k exp(i k.theta),  c_{-k} = conj(c_k).
///
/// Only the canonical half-lattice is stored (plus k = 0 with a real
/// coefficient); the mirror term is reconstructed during evaluation, so the
/// Hermitian symmetry cannot be violated. Immutable-after-construction use is
/// thread safe.
class TrigPoly {
 public:
  explicit TrigPoly(FrequencyLattice lattice);

  const FrequencyLattice& lattice() const { return lattice_; }

  /// Adds c to the coefficient of exp(i k.theta). Non-canonical k is folded
  /// onto its mirror (conjugating c). The accumulated k = 0 coefficient must
  /// stay real to tolerance.
  void add(const FrequencyVector& k, Complex c);
  void set(const FrequencyVector& k, Complex c);

  /// Coefficient of any lattice frequency (conjugated for mirrored k);
  /// zero when unset.
  Complex coeff(const FrequencyVector& k) const;

  /// Stored canonical coefficients, keyed by lattice flat index.
  const std::map<std::size_t, Complex>& canonical_coeffs() const { return coeffs_; }
  std::size_t stored_count() const { return coeffs_.size(); }

  /// Number of nonzero full-lattice coefficients (mirror pairs count as two).
  std::size_t full_support_size() const;

  double eval(std::span<const double> theta) const;
  std::vector<double> grad(std::span<const double> theta) const;

  double max_abs_coeff() const;

  /// Drops stored coefficients with |c| <= abs_threshold.
  void prune(double abs_threshold);

 private:
  void add_flat(std::size_t flat, const FrequencyVector& k, Complex c, bool replace);

  FrequencyLattice lattice_;
  std::map<std::size_t, Complex> coeffs_;
};

}  // namespace qlandscape
