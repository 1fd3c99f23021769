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

#include <functional>
#include <vector>

#include "qlandscape/trigpoly.hpp"

namespace qlandscape {

/// Real cost function over the parameter torus.
using CostOracle = std::function<double(std::span<const double>)>;

constexpr std::size_t kDefaultGridBudget = 10'000'000;

/// Uniform grid with g_i = 2 f_i + 1 points per axis, theta_i = 2 pi j / g_i.
/// Point flat indices follow the lattice flat-index convention.
class NyquistGrid {
 public:
  explicit NyquistGrid(FrequencyLattice lattice) : lattice_(std::move(lattice)) {}

  const FrequencyLattice& lattice() const { return lattice_; }
  std::size_t num_points() const { return lattice_.size(); }
  std::vector<double> point_at(std::size_t flat) const;

  bool operator==(const NyquistGrid& other) const { return lattice_ == other.lattice_; }

 private:
  FrequencyLattice lattice_;
};

struct GridData {
  NyquistGrid grid;
  std::vector<double> values;  // length num_points(), flat-index order
};

/// Separable multidimensional transforms over the Nyquist grid, shared by the
/// DFT path and the matrix-free BPDN operators.
///   synthesis: v_g = sum_k c_k e^{+i w_k.theta_g}
///   analysis:  u_k = sum_g v_g e^{-i w_k.theta_g}   (no 1/n factor)
/// Implemented as per-axis dense DFTs; grid sizes are odd and small here, so
/// the O(g_i^2) axis passes win over general FFT plumbing.
std::vector<Complex> grid_synthesis(const FrequencyLattice& lattice, std::vector<Complex> coeffs);
std::vector<Complex> grid_analysis(const FrequencyLattice& lattice, std::vector<Complex> values);

GridData sample_full_grid(const CostOracle& oracle, const NyquistGrid& grid,
                          std::size_t budget = kDefaultGridBudget);

/// Full-grid DFT: c_k = (1/n) sum_j values[j] e^{-i w_k.theta_j}. Real input
/// gives Hermitian output; the result is symmetrised and a deviation above
/// tolerance (non-real or corrupted input) throws.
TrigPoly dft_forward(const GridData& data);

/// Evaluates poly on every grid point; inverse of dft_forward.
GridData dft_inverse(const TrigPoly& poly, const NyquistGrid& grid);

/// Number of full-lattice coefficients with |c_k| above rel_threshold times
/// the maximum magnitude. Mirror pairs count as two; all-zero input gives 0.
std::size_t sparsity(const TrigPoly& poly, double rel_threshold);

/// Full recovery pipeline: lattice from the correlated-gate pattern, Nyquist
/// sampling, forward DFT.
TrigPoly recover_full(const CostOracle& oracle, const std::vector<int>& group_sizes,
                      std::size_t budget = kDefaultGridBudget);

/// Dense full-lattice coefficient vector (flat-index order) of a TrigPoly.
std::vector<Complex> full_coefficients(const TrigPoly& poly);

}  // namespace qlandscape
