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
#include <vector>

#include "qlandscape/qaoa.hpp"
#include "qlandscape/sparse_recovery.hpp"
#include "qlandscape/spectral.hpp"
#include "qlandscape/trigpoly.hpp"

namespace qlandscape {

enum class OptMode { TrueLandscape, RecoveredPoly };

/// One gradient-descent run. quantum_calls counts oracle evaluations in
/// TrueLandscape mode and is zero in RecoveredPoly mode, where the gradient
/// is analytic and classical.
struct OptRun {
  std::vector<std::vector<double>> trajectory;  // theta_0 .. theta_iters
  std::vector<double> theta_star;
  double final_cost = 0.0;
  std::size_t quantum_calls = 0;
  OptMode mode = OptMode::TrueLandscape;
};

struct GdParams {
  double step = 0.05;
  int iters = 200;
  double fd_step = 1e-3;
};

/// Plain gradient descent on a recovered polynomial (analytic gradient).
OptRun gd_optimize(const TrigPoly& poly, std::span<const double> theta0, const GdParams& params);

/// Plain gradient descent on an oracle with central finite differences.
/// Accounting: 2d calls per iteration for the gradient plus one call per cost
/// evaluation (iters + 1 of them, the initial point included).
OptRun gd_optimize(const CostOracle& oracle, std::span<const double> theta0,
                   const GdParams& params);

/// Out-of-sample relative MSE against oracle values on the given test points,
/// plus the zero-predictor baseline. Errors out when every oracle value is 0.
std::pair<double, double> oos_relative_mse(const TrigPoly& poly, const CostOracle& oracle,
                                           const std::vector<std::vector<double>>& test_points);

/// Reference global minimum: exhaustive scan of the lattice's Nyquist grid
/// followed by a finite-difference GD polish from the best grid point.
double reference_minimum(const QaoaInstance& instance, const FrequencyLattice& scan_lattice,
                         const GdParams& polish, std::size_t budget = kDefaultGridBudget);

/// (value - C_min) / |C_min|.
double relative_error_to_optimum(double value, double reference_min);

/// Convenience overload computing the reference internally; callers looping
/// over many values should compute reference_minimum once instead.
double relative_error_to_optimum(double value, const QaoaInstance& instance,
                                 const FrequencyLattice& scan_lattice, const GdParams& polish);

/// Recoverability diagnostics for a sampled landscape (the narrow-gorge
/// failure conditions). With n_shots given, the noise tolerance is
/// epsilon = sqrt(m / n_shots) * sigma with sigma the full-grid standard
/// deviation, modelling mean-of-shots sampling noise.
struct GorgeReport {
  double ratio = 0.0;            // ||C|_Omega||_1 / ||C_all||_2
  double bound = 0.0;            // 1 / sqrt(n)
  bool condition_met = false;    // ratio < bound: basis pursuit provably fails
  double l2_sample_norm = 0.0;   // ||C|_Omega||_2
  double epsilon = 0.0;          // noise tolerance
  bool zero_feasible = false;    // ||C|_Omega||_2 < epsilon: zero vector fits
};

GorgeReport gorge_report(const GridData& full, const std::vector<std::size_t>& sample_indices,
                         std::optional<int> n_shots = std::nullopt);

struct SparsityRow {
  int num_qubits = 0;
  int layers = 0;
  std::uint64_t graph_seed = 0;
  int edges = 0;
  std::size_t lattice_size = 0;
  std::size_t sparsity = 0;
  double threshold = 0.0;
  bool ok = false;  // false when the grid budget was exceeded and the cell skipped
};

/// Full-grid sparsity measurement over (N, p) cells with several random
/// 3-regular graphs per cell.
std::vector<SparsityRow> sparsity_scaling_experiment(const std::vector<int>& n_list,
                                                     const std::vector<int>& p_list,
                                                     int graphs_per_point, std::uint64_t seed,
                                                     double threshold = 1e-8,
                                                     std::size_t budget = kDefaultGridBudget);

}  // namespace qlandscape
