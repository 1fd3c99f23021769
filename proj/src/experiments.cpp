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

#include "qlandscape/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qlandscape/rng.hpp"
#include "qlandscape/threads.hpp"

namespace qlandscape {

namespace {

void check_gd_params(const GdParams& params) {
  if (params.step <= 0.0 || params.iters < 1 || params.fd_step <= 0.0) {
    throw std::invalid_argument("GD parameters must be positive");
  }
}

void check_finite(double v) {
  if (!std::isfinite(v)) throw std::runtime_error("non-finite cost encountered");
}

}  // namespace

OptRun gd_optimize(const TrigPoly& poly, std::span<const double> theta0, const GdParams& params) {
  check_gd_params(params);
  if (static_cast<int>(theta0.size()) != poly.lattice().dims()) {
    throw std::invalid_argument("theta dimension mismatch");
  }
  OptRun run;
  run.mode = OptMode::RecoveredPoly;
  std::vector<double> theta(theta0.begin(), theta0.end());
  run.trajectory.push_back(theta);
  check_finite(poly.eval(theta));
  for (int i = 0; i < params.iters; ++i) {
    const std::vector<double> g = poly.grad(theta);
    for (std::size_t d = 0; d < theta.size(); ++d) theta[d] -= params.step * g[d];
    check_finite(poly.eval(theta));
    run.trajectory.push_back(theta);
  }
  run.theta_star = theta;
  run.final_cost = poly.eval(theta);
  run.quantum_calls = 0;
  return run;
}

OptRun gd_optimize(const CostOracle& oracle, std::span<const double> theta0,
                   const GdParams& params) {
  check_gd_params(params);
  OptRun run;
  run.mode = OptMode::TrueLandscape;
  std::vector<double> theta(theta0.begin(), theta0.end());
  const std::size_t d = theta.size();

  auto cost = [&](const std::vector<double>& t) {
    ++run.quantum_calls;
    const double v = oracle(t);
    check_finite(v);
    return v;
  };

  run.trajectory.push_back(theta);
  double value = cost(theta);
  for (int i = 0; i < params.iters; ++i) {
    std::vector<double> g(d, 0.0);
    std::vector<double> probe = theta;
    for (std::size_t j = 0; j < d; ++j) {
      probe[j] = theta[j] + params.fd_step;
      ++run.quantum_calls;
      const double up = oracle(probe);
      probe[j] = theta[j] - params.fd_step;
      ++run.quantum_calls;
      const double down = oracle(probe);
      probe[j] = theta[j];
      check_finite(up);
      check_finite(down);
      g[j] = (up - down) / (2.0 * params.fd_step);
    }
    for (std::size_t j = 0; j < d; ++j) theta[j] -= params.step * g[j];
    value = cost(theta);
    run.trajectory.push_back(theta);
  }
  run.theta_star = theta;
  run.final_cost = value;
  return run;
}

std::pair<double, double> oos_relative_mse(const TrigPoly& poly, const CostOracle& oracle,
                                           const std::vector<std::vector<double>>& test_points) {
  if (test_points.empty()) throw std::invalid_argument("need at least one test point");
  double err = 0.0, ref = 0.0;
  for (const auto& theta : test_points) {
    const double truth = oracle(theta);
    const double diff = poly.eval(theta) - truth;
    err += diff * diff;
    ref += truth * truth;
  }
  const double count = static_cast<double>(test_points.size());
  err /= count;
  ref /= count;
  if (ref == 0.0) throw std::runtime_error("oracle is zero on every test point");
  return {err / ref, 1.0};
}

double reference_minimum(const QaoaInstance& instance, const FrequencyLattice& scan_lattice,
                         const GdParams& polish, std::size_t budget) {
  const QaoaSimulator sim(instance);
  const NyquistGrid grid(scan_lattice);
  const std::size_t n = grid.num_points();
  if (n > budget) throw std::invalid_argument("scan grid exceeds the budget");

  std::vector<double> values(n);
  parallel_for(0, n, [&](std::size_t j) { values[j] = sim.expectation(grid.point_at(j)); });

  // polish from the few best grid points; a single basin can be missed by
  // polishing only the minimum sample
  constexpr std::size_t kPolishStarts = 5;
  std::vector<std::size_t> order(n);
  for (std::size_t j = 0; j < n; ++j) order[j] = j;
  const std::size_t starts = std::min(kPolishStarts, n);
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(starts),
                    order.end(),
                    [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  const CostOracle oracle = [&sim](std::span<const double> theta) {
    return sim.expectation(theta);
  };
  double best = values[order[0]];
  for (std::size_t s = 0; s < starts; ++s) {
    const OptRun polish_run = gd_optimize(oracle, grid.point_at(order[s]), polish);
    best = std::min(best, polish_run.final_cost);
  }
  return best;
}

double relative_error_to_optimum(double value, double reference_min) {
  if (reference_min == 0.0) throw std::invalid_argument("reference minimum is zero");
  return (value - reference_min) / std::abs(reference_min);
}

double relative_error_to_optimum(double value, const QaoaInstance& instance,
                                 const FrequencyLattice& scan_lattice, const GdParams& polish) {
  return relative_error_to_optimum(value, reference_minimum(instance, scan_lattice, polish));
}

GorgeReport gorge_report(const GridData& full, const std::vector<std::size_t>& sample_indices,
                         std::optional<int> n_shots) {
  const std::size_t n = full.values.size();
  if (n == 0) throw std::invalid_argument("empty grid");
  double norm2_all = 0.0;
  double mean = 0.0;
  for (double v : full.values) {
    norm2_all += v * v;
    mean += v;
  }
  mean /= static_cast<double>(n);
  if (norm2_all == 0.0) throw std::invalid_argument("full-grid norm is zero");

  GorgeReport report;
  double l1 = 0.0, l2 = 0.0;
  for (std::size_t idx : sample_indices) {
    if (idx >= n) throw std::invalid_argument("sample index outside the grid");
    const double v = full.values[idx];
    l1 += std::abs(v);
    l2 += v * v;
  }
  report.l2_sample_norm = std::sqrt(l2);
  report.ratio = l1 / std::sqrt(norm2_all);
  report.bound = 1.0 / std::sqrt(static_cast<double>(n));
  report.condition_met = report.ratio < report.bound;

  if (n_shots) {
    if (*n_shots < 1) throw std::invalid_argument("n_shots must be positive");
    double var = 0.0;
    for (double v : full.values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n);
    report.epsilon = std::sqrt(static_cast<double>(sample_indices.size()) * var /
                               static_cast<double>(*n_shots));
    report.zero_feasible = report.l2_sample_norm < report.epsilon;
  }
  return report;
}

std::vector<SparsityRow> sparsity_scaling_experiment(const std::vector<int>& n_list,
                                                     const std::vector<int>& p_list,
                                                     int graphs_per_point, std::uint64_t seed,
                                                     double threshold, std::size_t budget) {
  if (graphs_per_point < 1) throw std::invalid_argument("need at least one graph per cell");
  std::vector<SparsityRow> rows;
  for (int n_qubits : n_list) {
    for (int p : p_list) {
      for (int g = 0; g < graphs_per_point; ++g) {
        SparsityRow row;
        row.num_qubits = n_qubits;
        row.layers = p;
        row.graph_seed = mix_seed(seed, static_cast<std::uint64_t>(g));
        row.threshold = threshold;
        const Graph graph = random_regular_graph(n_qubits, 3, row.graph_seed);
        row.edges = graph.num_edges();
        const QaoaInstance instance{graph, p};
        const FrequencyLattice lattice = qaoa_lattice(instance);
        row.lattice_size = lattice.size();
        if (lattice.size() > budget) {
          row.ok = false;
          rows.push_back(row);
          continue;
        }
        const QaoaSimulator sim(instance);
        const GridData data = sample_full_grid(
            [&sim](std::span<const double> theta) { return sim.expectation(theta); },
            NyquistGrid(lattice), budget);
        row.sparsity = sparsity(dft_forward(data), threshold);
        row.ok = true;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

}  // namespace qlandscape
