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
#include <optional>
#include <stdexcept>
#include <vector>

#include "qlandscape/spectral.hpp"
#include "qlandscape/trigpoly.hpp"

namespace qlandscape {

/// Landscape samples taken on the Nyquist grid of a lattice. Points are kept
/// as strictly increasing grid flat indices, so distinctness and the on-grid
/// invariant hold by construction.
class SampleSet {
 public:
  SampleSet(FrequencyLattice lattice, std::vector<std::size_t> point_indices,
            std::vector<double> values, std::optional<int> n_shots = std::nullopt);

  /// Builds from explicit parameter vectors, validating that every point sits
  /// on the Nyquist grid (within tolerance) and that points are distinct.
  static SampleSet from_points(FrequencyLattice lattice,
                               const std::vector<std::vector<double>>& points,
                               std::vector<double> values,
                               std::optional<int> n_shots = std::nullopt);

  const FrequencyLattice& lattice() const { return lattice_; }
  const std::vector<std::size_t>& point_indices() const { return indices_; }
  const std::vector<double>& values() const { return values_; }
  std::optional<int> n_shots() const { return n_shots_; }
  std::size_t size() const { return values_.size(); }

  std::vector<double> point(std::size_t i) const;

 private:
  FrequencyLattice lattice_;
  std::vector<std::size_t> indices_;
  std::vector<double> values_;
  std::optional<int> n_shots_;
};

/// BPDN hyperparameters. lambda < 0 means "use lambda_heuristic(values)
/// scaled by lambda_scale"; the default scale keeps the L1 weight safely
/// below the zero-solution threshold ||(1/m) Phi^T C||_inf in this basis
/// normalization. support_threshold is relative to the largest coefficient
/// magnitude after FISTA.
struct BpdnConfig {
  double alpha_fista = 0.1;
  double lambda = -1.0;
  double lambda_scale = 0.01;
  int n_fista = 3000;
  double alpha_gd = 1.0;  // kept for config parity; the CG refinement needs no step size
  int n_gd = 40;
  double support_threshold = 1e-6;

  void validate() const;
};

/// m distinct Nyquist-grid points drawn uniformly without replacement,
/// returned as sorted flat indices. Entries listed in `exclude` (sorted) are
/// never drawn.
std::vector<std::size_t> random_sample_grid(const FrequencyLattice& lattice, std::size_t m,
                                            std::uint64_t seed,
                                            const std::vector<std::size_t>& exclude = {});

/// Matrix-free sampled operator in the real trigonometric basis
///   phi_0 = 1, phi_{cos k} = sqrt(2) cos(k.theta), phi_{sin k} = sqrt(2) sin(k.theta)
/// over the canonical half-lattice, indexed by lattice flat indices
/// (canonical index = cos component, mirror index = sin component). The basis
/// is orthonormal under the grid inner product (1/n) sum_g, and distinct grid
/// rows are orthogonal, so the Gram (1/m) Phi^T Phi has top eigenvalue
/// exactly n/m.
///
/// Applications pick between a cached dense matrix, full-grid separable
/// transforms, and direct summation based on problem size; all paths agree to
/// rounding and the choice is deterministic.
class SampledBasis {
 public:
  SampledBasis(FrequencyLattice lattice, std::vector<std::size_t> point_indices);

  std::size_t rows() const { return points_.size(); }   // m
  std::size_t cols() const { return lattice_.size(); }  // n

  std::vector<double> forward(std::span<const double> coeffs) const;    // Phi x
  std::vector<double> adjoint(std::span<const double> residual) const;  // Phi^T r

  /// Single entry phi_col(theta_row) by direct formula.
  double entry(std::size_t row, std::size_t col) const;

 private:
  FrequencyLattice lattice_;
  std::vector<std::size_t> points_;
  std::vector<std::vector<double>> thetas_;
  std::vector<double> dense_;  // row-major m x n cache when small enough
  bool use_transform_ = false;
};

std::vector<double> soft_threshold(std::span<const double> x, double t);

/// lambda = scale * (1/m) ||C||_2^2, a rough L1 weight from the sample scale.
double lambda_heuristic(std::span<const double> values, double scale = 1.0);

/// Thrown when the FISTA L2 objective grows by more than 10x from its
/// running minimum (step size too large for the problem).
class FistaDivergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FistaResult {
  std::vector<double> coefficients;     // length n, real basis
  std::vector<double> objective_trace;  // (1/2m)||Phi x - C||^2 per iteration
  double lambda = 0.0;                  // the L1 weight actually used
  int iterations = 0;
};

/// FISTA for min (1/2m)||Phi x - C||^2 + lambda ||x||_1 with soft
/// thresholding and (i-2)/(i+1) momentum. The gradient step is
/// alpha_fista / L with L = n/m, the exact Lipschitz constant of the
/// normalized quadratic, so the default alpha has a fixed stability margin
/// for every (m, n).
FistaResult fista(const SampleSet& samples, const BpdnConfig& config);

/// L2-only refinement on a fixed support by conjugate gradient on the normal
/// equations; off-support coefficients stay exactly zero and the data-fit
/// objective never increases.
std::vector<double> refine_on_support(const SampleSet& samples,
                                      const std::vector<std::size_t>& support,
                                      std::span<const double> init, const BpdnConfig& config);

/// Real-basis coefficients -> TrigPoly (c_k = (x_cos - i x_sin)/sqrt(2)).
/// Entries with |x| <= drop_below are discarded first.
TrigPoly real_coefficients_to_poly(const FrequencyLattice& lattice, std::span<const double> x,
                                   double drop_below = 0.0);

struct RecoverOptions {
  std::size_t m_init = 100;
  std::size_t holdout_size = 100;
  double accept_ratio = 0.1;
  std::size_t m_max = 0;  // 0 -> 8 * m_init (capped at n - holdout)
  std::uint64_t seed = 0;
};

struct RecoveryResult {
  explicit RecoveryResult(TrigPoly p) : poly(std::move(p)) {}

  TrigPoly poly;
  std::vector<std::size_t> support;  // real-basis indices kept after refinement
  std::size_t support_size = 0;      // full-lattice count (mirror pairs = 2)
  std::size_t m_used = 0;
  double oos_mse_rel = 0.0;
  double baseline_mse_rel = 0.0;
  int fista_iterations = 0;
  bool accepted = false;
};

/// Dynamic-budget recovery: draws a disjoint holdout, runs FISTA plus
/// support-restricted refinement, and doubles the training set (reusing all
/// previous samples) until the out-of-sample MSE beats accept_ratio times the
/// zero-predictor MSE or m_max is reached. The holdout uses the same oracle
/// as training, so a noisy oracle is compared against noisy holdout values.
RecoveryResult recover(const CostOracle& oracle, const FrequencyLattice& lattice,
                       const RecoverOptions& options, const BpdnConfig& config);

/// recover() on a fixed, pre-sampled set: a random holdout_size subset is
/// held out and the rest trains a single FISTA + refinement pass.
RecoveryResult recover_from_samples(const SampleSet& samples, std::size_t holdout_size,
                                    double accept_ratio, std::uint64_t seed,
                                    const BpdnConfig& config);

}  // namespace qlandscape
