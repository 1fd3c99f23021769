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

#include "qlandscape/sparse_recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_set>

#include "qlandscape/rng.hpp"
#include "qlandscape/threads.hpp"

namespace qlandscape {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr std::size_t kDenseCacheLimit = 4'000'000;  // entries, ~32 MB

bool strictly_increasing(const std::vector<std::size_t>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] <= v[i - 1]) return false;
  }
  return true;
}

}  // namespace

SampleSet::SampleSet(FrequencyLattice lattice, std::vector<std::size_t> point_indices,
                     std::vector<double> values, std::optional<int> n_shots)
    : lattice_(std::move(lattice)),
      indices_(std::move(point_indices)),
      values_(std::move(values)),
      n_shots_(n_shots) {
  if (indices_.size() != values_.size()) throw std::invalid_argument("points/values length mismatch");
  if (!strictly_increasing(indices_)) {
    throw std::invalid_argument("point indices must be strictly increasing (distinct)");
  }
  if (!indices_.empty() && indices_.back() >= lattice_.size()) {
    throw std::invalid_argument("point index outside the grid");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("sample values must be finite");
  }
  if (n_shots_ && *n_shots_ < 1) throw std::invalid_argument("n_shots must be positive");
}

SampleSet SampleSet::from_points(FrequencyLattice lattice,
                                 const std::vector<std::vector<double>>& points,
                                 std::vector<double> values, std::optional<int> n_shots) {
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<std::pair<std::size_t, double>> tagged(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& theta = points[i];
    if (static_cast<int>(theta.size()) != lattice.dims()) {
      throw std::invalid_argument("point dimension mismatch");
    }
    std::size_t flat = 0;
    for (int d = 0; d < lattice.dims(); ++d) {
      const int g = 2 * lattice.max_freq()[static_cast<std::size_t>(d)] + 1;
      double frac = theta[static_cast<std::size_t>(d)] / two_pi * g;
      frac -= std::floor(frac / g) * g;
      const long long j = std::llround(frac);
      if (std::abs(frac - static_cast<double>(j)) > 1e-6) {
        throw std::invalid_argument("point does not lie on the Nyquist grid");
      }
      flat = flat * static_cast<std::size_t>(g) + static_cast<std::size_t>(j % g);
    }
    tagged[i] = {flat, values[i]};
  }
  std::sort(tagged.begin(), tagged.end());
  std::vector<std::size_t> idx(tagged.size());
  std::vector<double> vals(tagged.size());
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    idx[i] = tagged[i].first;
    vals[i] = tagged[i].second;
  }
  return SampleSet(std::move(lattice), std::move(idx), std::move(vals), n_shots);
}

std::vector<double> SampleSet::point(std::size_t i) const {
  return NyquistGrid(lattice_).point_at(indices_.at(i));
}

void BpdnConfig::validate() const {
  if (alpha_fista <= 0.0) throw std::invalid_argument("alpha_fista must be positive");
  if (n_fista < 1) throw std::invalid_argument("n_fista must be positive");
  if (alpha_gd <= 0.0) throw std::invalid_argument("alpha_gd must be positive");
  if (n_gd < 1) throw std::invalid_argument("n_gd must be positive");
  if (support_threshold <= 0.0) throw std::invalid_argument("support_threshold must be positive");
  if (lambda_scale < 0.0) throw std::invalid_argument("lambda_scale must be nonnegative");
}

std::vector<std::size_t> random_sample_grid(const FrequencyLattice& lattice, std::size_t m,
                                            std::uint64_t seed,
                                            const std::vector<std::size_t>& exclude) {
  const std::size_t n = lattice.size();
  if (m + exclude.size() > n) throw std::invalid_argument("requested more points than the grid holds");
  std::mt19937_64 rng = make_engine(seed, 0x73616d706c65ULL);

  const std::size_t available = n - exclude.size();
  std::vector<std::size_t> chosen;
  chosen.reserve(m);
  if (available <= 4 * (m + 1)) {
    // Dense regime: partial Fisher-Yates over the explicit complement.
    std::vector<std::size_t> pool;
    pool.reserve(available);
    std::size_t e = 0;
    for (std::size_t i = 0; i < n; ++i) {
      while (e < exclude.size() && exclude[e] < i) ++e;
      if (e < exclude.size() && exclude[e] == i) continue;
      pool.push_back(i);
    }
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = i + uniform_index(rng, pool.size() - i);
      std::swap(pool[i], pool[j]);
      chosen.push_back(pool[i]);
    }
  } else {
    std::unordered_set<std::size_t> taken(exclude.begin(), exclude.end());
    while (chosen.size() < m) {
      const std::size_t candidate = uniform_index(rng, n);
      if (taken.insert(candidate).second) chosen.push_back(candidate);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

SampledBasis::SampledBasis(FrequencyLattice lattice, std::vector<std::size_t> point_indices)
    : lattice_(std::move(lattice)), points_(std::move(point_indices)) {
  if (!strictly_increasing(points_)) {
    throw std::invalid_argument("point indices must be strictly increasing");
  }
  if (!points_.empty() && points_.back() >= lattice_.size()) {
    throw std::invalid_argument("point index outside the grid");
  }
  const NyquistGrid grid(lattice_);
  thetas_.reserve(points_.size());
  for (std::size_t p : points_) thetas_.push_back(grid.point_at(p));

  const std::size_t m = points_.size();
  const std::size_t n = lattice_.size();
  if (m > 0 && m <= kDenseCacheLimit / n) {
    dense_.resize(m * n);
    parallel_for(0, m, [&](std::size_t row) {
      for (std::size_t col = 0; col < n; ++col) dense_[row * n + col] = entry(row, col);
    });
  } else {
    use_transform_ = true;
  }
}

double SampledBasis::entry(std::size_t row, std::size_t col) const {
  const FrequencyVector k = lattice_.frequency_at(col);
  const std::vector<double>& theta = thetas_.at(row);
  double phase = 0.0;
  for (std::size_t d = 0; d < k.size(); ++d) phase += k[d] * theta[d];
  bool zero = true;
  for (int v : k) {
    if (v != 0) {
      zero = false;
      break;
    }
  }
  if (zero) return 1.0;
  // canonical index: sqrt(2) cos(k.theta); mirror index: sqrt(2) sin(k_c.theta)
  // with k_c = -k, i.e. -sqrt(2) sin(k.theta).
  return is_canonical(k) ? kSqrt2 * std::cos(phase) : -kSqrt2 * std::sin(phase);
}

std::vector<double> SampledBasis::forward(std::span<const double> coeffs) const {
  const std::size_t m = rows();
  const std::size_t n = cols();
  if (coeffs.size() != n) throw std::invalid_argument("coefficient length mismatch");
  std::vector<double> y(m, 0.0);
  if (!use_transform_) {
    parallel_for(0, m, [&](std::size_t row) {
      const double* phi = dense_.data() + row * n;
      double acc = 0.0;
      for (std::size_t col = 0; col < n; ++col) acc += phi[col] * coeffs[col];
      y[row] = acc;
    });
    return y;
  }
  // Real coefficients -> Hermitian complex coefficients -> full-grid synthesis.
  std::vector<Complex> c(n);
  const std::size_t center = (n - 1) / 2;
  c[center] = Complex(coeffs[center], 0.0);
  for (std::size_t flat = 0; flat < center; ++flat) {
    const std::size_t cos_idx = n - 1 - flat;  // canonical partner
    const Complex ck(coeffs[cos_idx] / kSqrt2, -coeffs[flat] / kSqrt2);
    c[cos_idx] = ck;
    c[flat] = std::conj(ck);
  }
  const std::vector<Complex> v = grid_synthesis(lattice_, std::move(c));
  for (std::size_t j = 0; j < m; ++j) y[j] = v[points_[j]].real();
  return y;
}

std::vector<double> SampledBasis::adjoint(std::span<const double> residual) const {
  const std::size_t m = rows();
  const std::size_t n = cols();
  if (residual.size() != m) throw std::invalid_argument("residual length mismatch");
  std::vector<double> g(n, 0.0);
  if (!use_transform_) {
    for (std::size_t row = 0; row < m; ++row) {
      const double* phi = dense_.data() + row * n;
      const double r = residual[row];
      for (std::size_t col = 0; col < n; ++col) g[col] += phi[col] * r;
    }
    return g;
  }
  std::vector<Complex> w(n, Complex(0.0, 0.0));
  for (std::size_t j = 0; j < m; ++j) w[points_[j]] = Complex(residual[j], 0.0);
  const std::vector<Complex> u = grid_analysis(lattice_, std::move(w));
  const std::size_t center = (n - 1) / 2;
  g[center] = u[center].real();
  for (std::size_t flat = 0; flat < center; ++flat) {
    const std::size_t cos_idx = n - 1 - flat;
    g[cos_idx] = kSqrt2 * u[cos_idx].real();
    g[flat] = -kSqrt2 * u[cos_idx].imag();
  }
  return g;
}

std::vector<double> soft_threshold(std::span<const double> x, double t) {
  if (t < 0.0) throw std::invalid_argument("threshold must be nonnegative");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double mag = std::abs(x[i]) - t;
    out[i] = mag > 0.0 ? (x[i] > 0.0 ? mag : -mag) : 0.0;
  }
  return out;
}

double lambda_heuristic(std::span<const double> values, double scale) {
  if (values.empty()) throw std::invalid_argument("need at least one sample");
  double acc = 0.0;
  for (double v : values) acc += v * v;
  return scale * acc / static_cast<double>(values.size());
}

FistaResult fista(const SampleSet& samples, const BpdnConfig& config) {
  config.validate();
  const std::size_t m = samples.size();
  if (m < 1) throw std::invalid_argument("need at least one sample");
  const SampledBasis op(samples.lattice(), samples.point_indices());
  const std::size_t n = op.cols();
  const std::vector<double>& C = samples.values();

  const double lambda = config.lambda >= 0.0
                            ? config.lambda
                            : lambda_heuristic(C, config.lambda_scale);
  const double lipschitz = static_cast<double>(n) / static_cast<double>(m);
  const double step = config.alpha_fista / lipschitz;
  const double threshold = step * lambda;

  std::vector<double> x(n, 0.0), x_prev(n, 0.0);
  std::vector<double> pred(m, 0.0), pred_prev(m, 0.0);  // cached Phi x, Phi x_prev
  FistaResult result;
  result.lambda = lambda;
  result.objective_trace.reserve(static_cast<std::size_t>(config.n_fista) + 1);

  auto data_objective = [&](const std::vector<double>& prediction) {
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double e = prediction[j] - C[j];
      acc += e * e;
    }
    return acc / (2.0 * static_cast<double>(m));
  };

  double obj = data_objective(pred);
  result.objective_trace.push_back(obj);
  double min_obj = obj;

  for (int i = 1; i <= config.n_fista; ++i) {
    // Gradient at the extrapolated point y = x + mu (x - x_prev); the
    // prediction at y follows from the cached forward results by linearity.
    const double mu = static_cast<double>(i - 2) / static_cast<double>(i + 1);
    std::vector<double> residual(m);
    for (std::size_t j = 0; j < m; ++j) {
      residual[j] = (1.0 + mu) * pred[j] - mu * pred_prev[j] - C[j];
    }
    const std::vector<double> grad = op.adjoint(residual);

    std::vector<double> next(n);
    for (std::size_t b = 0; b < n; ++b) {
      const double y = x[b] + mu * (x[b] - x_prev[b]);
      const double proposal = y - step * grad[b] / static_cast<double>(m);
      const double mag = std::abs(proposal) - threshold;
      next[b] = mag > 0.0 ? (proposal > 0.0 ? mag : -mag) : 0.0;
    }
    x_prev = std::move(x);
    x = std::move(next);
    pred_prev = std::move(pred);
    pred = op.forward(x);
    ++result.iterations;

    obj = data_objective(pred);
    result.objective_trace.push_back(obj);
    if (obj < min_obj) min_obj = obj;
    // Converging runs ripple below the initial objective; growth past 10x of
    // both the running minimum and the start is a genuine blow-up.
    if (obj > 10.0 * min_obj && obj > 10.0 * result.objective_trace.front()) {
      throw FistaDivergence("FISTA objective diverged; step size too large");
    }
  }
  result.coefficients = std::move(x);
  return result;
}

std::vector<double> refine_on_support(const SampleSet& samples,
                                      const std::vector<std::size_t>& support,
                                      std::span<const double> init, const BpdnConfig& config) {
  config.validate();
  if (support.empty()) throw std::invalid_argument("support must be nonempty");
  const std::size_t m = samples.size();
  const std::size_t n = samples.lattice().size();
  if (init.size() != n) throw std::invalid_argument("init length mismatch");
  std::vector<std::size_t> cols(support);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  if (cols.back() >= n) throw std::invalid_argument("support index outside the basis");
  const std::size_t s = cols.size();

  const SampledBasis op(samples.lattice(), samples.point_indices());
  const bool cache_rows = s <= kDenseCacheLimit / std::max<std::size_t>(m, 1);
  std::vector<double> phi;
  if (cache_rows) {
    phi.resize(m * s);
    parallel_for(0, m, [&](std::size_t row) {
      for (std::size_t c = 0; c < s; ++c) phi[row * s + c] = op.entry(row, cols[c]);
    });
  }
  std::vector<double> row_buf(cache_rows ? 0 : s);
  auto row_values = [&](std::size_t row) -> const double* {
    if (cache_rows) return phi.data() + row * s;
    for (std::size_t c = 0; c < s; ++c) row_buf[c] = op.entry(row, cols[c]);
    return row_buf.data();
  };
  const std::vector<double>& C = samples.values();

  auto apply_normal = [&](const std::vector<double>& v) {
    std::vector<double> tmp(m, 0.0);
    for (std::size_t row = 0; row < m; ++row) {
      const double* p = row_values(row);
      double acc = 0.0;
      for (std::size_t c = 0; c < s; ++c) acc += p[c] * v[c];
      tmp[row] = acc;
    }
    std::vector<double> out(s, 0.0);
    for (std::size_t row = 0; row < m; ++row) {
      const double* p = row_values(row);
      const double t = tmp[row] / static_cast<double>(m);
      for (std::size_t c = 0; c < s; ++c) out[c] += p[c] * t;
    }
    return out;
  };

  std::vector<double> b(s, 0.0);
  for (std::size_t row = 0; row < m; ++row) {
    const double* p = row_values(row);
    const double t = C[row] / static_cast<double>(m);
    for (std::size_t c = 0; c < s; ++c) b[c] += p[c] * t;
  }

  std::vector<double> x(s);
  for (std::size_t c = 0; c < s; ++c) x[c] = init[cols[c]];

  auto norm2 = [](const std::vector<double>& v) {
    double acc = 0.0;
    for (double e : v) acc += e * e;
    return acc;
  };

  // CG on (1/m) Phi_S^T Phi_S x = (1/m) Phi_S^T C; the residual equals the
  // negative gradient of the data-fit objective.
  std::vector<double> Ax = apply_normal(x);
  std::vector<double> r(s);
  for (std::size_t c = 0; c < s; ++c) r[c] = b[c] - Ax[c];
  std::vector<double> p = r;
  double rr = norm2(r);
  const double tol = 1e-12 * std::max(1.0, std::sqrt(norm2(b)));

  for (int it = 0; it < config.n_gd && std::sqrt(rr) > tol; ++it) {
    const std::vector<double> Ap = apply_normal(p);
    double pAp = 0.0;
    for (std::size_t c = 0; c < s; ++c) pAp += p[c] * Ap[c];
    if (pAp <= 0.0) break;  // semidefinite A exhausted
    const double alpha = rr / pAp;
    for (std::size_t c = 0; c < s; ++c) {
      x[c] += alpha * p[c];
      r[c] -= alpha * Ap[c];
    }
    const double rr_new = norm2(r);
    const double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t c = 0; c < s; ++c) p[c] = r[c] + beta * p[c];
  }

  std::vector<double> out(n, 0.0);
  for (std::size_t c = 0; c < s; ++c) out[cols[c]] = x[c];
  return out;
}

TrigPoly real_coefficients_to_poly(const FrequencyLattice& lattice, std::span<const double> x,
                                   double drop_below) {
  const std::size_t n = lattice.size();
  if (x.size() != n) throw std::invalid_argument("coefficient length mismatch");
  TrigPoly poly(lattice);
  const std::size_t center = (n - 1) / 2;
  auto kept = [&](std::size_t idx) {
    const double v = x[idx];
    return std::abs(v) > drop_below ? v : 0.0;
  };
  const double dc = kept(center);
  if (dc != 0.0) poly.set(FrequencyVector(lattice.dims(), 0), Complex(dc, 0.0));
  for (std::size_t flat = 0; flat < center; ++flat) {
    const std::size_t cos_idx = n - 1 - flat;
    const double a = kept(cos_idx);
    const double b = kept(flat);
    if (a == 0.0 && b == 0.0) continue;
    poly.set(lattice.frequency_at(cos_idx), Complex(a / kSqrt2, -b / kSqrt2));
  }
  return poly;
}

namespace {

struct OosStats {
  double mse_rel;
  double baseline_rel;
};

OosStats oos_against_values(const TrigPoly& poly, const NyquistGrid& grid,
                            const std::vector<std::size_t>& idx,
                            const std::vector<double>& values) {
  double err = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const std::vector<double> theta = grid.point_at(idx[i]);
    const double d = poly.eval(theta) - values[i];
    err += d * d;
    ref += values[i] * values[i];
  }
  const double count = static_cast<double>(idx.size());
  err /= count;
  ref /= count;
  if (ref == 0.0) {
    return {err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity(), 1.0};
  }
  return {err / ref, 1.0};
}

RecoveryResult run_bpdn_pass(const FrequencyLattice& lattice,
                             const std::vector<std::size_t>& train_idx,
                             const std::vector<double>& train_values,
                             const std::vector<std::size_t>& holdout_idx,
                             const std::vector<double>& holdout_values,
                             std::optional<int> n_shots, const BpdnConfig& config) {
  SampleSet train(lattice, train_idx, train_values, n_shots);
  FistaResult fit = fista(train, config);

  double max_mag = 0.0;
  for (double v : fit.coefficients) max_mag = std::max(max_mag, std::abs(v));
  const double cut = config.support_threshold * max_mag;

  std::vector<std::size_t> support;
  for (std::size_t b = 0; b < fit.coefficients.size(); ++b) {
    if (std::abs(fit.coefficients[b]) > cut) support.push_back(b);
  }

  std::vector<double> refined;
  if (support.empty()) {
    refined.assign(lattice.size(), 0.0);
  } else {
    refined = refine_on_support(train, support, fit.coefficients, config);
  }

  RecoveryResult result{TrigPoly(lattice)};
  result.poly = real_coefficients_to_poly(lattice, refined, cut);
  for (std::size_t b = 0; b < refined.size(); ++b) {
    if (std::abs(refined[b]) > cut) result.support.push_back(b);
  }
  result.support_size = result.poly.full_support_size();
  result.m_used = train_idx.size();
  result.fista_iterations = fit.iterations;

  const NyquistGrid grid(lattice);
  const OosStats oos = oos_against_values(result.poly, grid, holdout_idx, holdout_values);
  result.oos_mse_rel = oos.mse_rel;
  result.baseline_mse_rel = oos.baseline_rel;
  return result;
}

}  // namespace

RecoveryResult recover(const CostOracle& oracle, const FrequencyLattice& lattice,
                       const RecoverOptions& options, const BpdnConfig& config) {
  config.validate();
  const std::size_t n = lattice.size();
  if (options.m_init < 1) throw std::invalid_argument("m_init must be positive");
  if (options.holdout_size < 1) throw std::invalid_argument("holdout_size must be positive");
  if (options.m_init + options.holdout_size > n) {
    throw std::invalid_argument("m_init + holdout exceeds the grid");
  }
  std::size_t m_max = options.m_max == 0 ? 8 * options.m_init : options.m_max;
  m_max = std::min(m_max, n - options.holdout_size);
  m_max = std::max(m_max, options.m_init);

  const NyquistGrid grid(lattice);
  auto evaluate = [&](const std::vector<std::size_t>& idx) {
    std::vector<double> out(idx.size());
    parallel_for(0, idx.size(), [&](std::size_t i) {
      out[i] = oracle(grid.point_at(idx[i]));
    });
    return out;
  };

  const std::vector<std::size_t> holdout_idx =
      random_sample_grid(lattice, options.holdout_size, mix_seed(options.seed, 0));
  const std::vector<double> holdout_values = evaluate(holdout_idx);

  std::vector<std::size_t> train_idx =
      random_sample_grid(lattice, options.m_init, mix_seed(options.seed, 1), holdout_idx);
  const std::vector<double> train_values = evaluate(train_idx);
  // values are keyed to sorted indices; keep (index, value) pairs associated
  std::vector<std::pair<std::size_t, double>> bank(train_idx.size());
  for (std::size_t i = 0; i < train_idx.size(); ++i) bank[i] = {train_idx[i], train_values[i]};

  RecoveryResult best{TrigPoly(lattice)};
  int total_iterations = 0;
  std::uint64_t round = 2;
  while (true) {
    std::sort(bank.begin(), bank.end());
    std::vector<std::size_t> idx(bank.size());
    std::vector<double> vals(bank.size());
    for (std::size_t i = 0; i < bank.size(); ++i) {
      idx[i] = bank[i].first;
      vals[i] = bank[i].second;
    }
    RecoveryResult result = run_bpdn_pass(lattice, idx, vals, holdout_idx, holdout_values,
                                          std::nullopt, config);
    total_iterations += result.fista_iterations;
    result.fista_iterations = total_iterations;
    result.accepted = result.oos_mse_rel <= options.accept_ratio * result.baseline_mse_rel;
    best = std::move(result);
    if (best.accepted) break;

    const std::size_t m_next = std::min(2 * bank.size(), m_max);
    if (m_next <= bank.size()) break;  // budget exhausted; return best effort

    std::vector<std::size_t> exclude = idx;
    exclude.insert(exclude.end(), holdout_idx.begin(), holdout_idx.end());
    std::sort(exclude.begin(), exclude.end());
    const std::vector<std::size_t> fresh = random_sample_grid(
        lattice, m_next - bank.size(), mix_seed(options.seed, round++), exclude);
    const std::vector<double> fresh_values = evaluate(fresh);
    for (std::size_t i = 0; i < fresh.size(); ++i) bank.emplace_back(fresh[i], fresh_values[i]);
  }
  return best;
}

RecoveryResult recover_from_samples(const SampleSet& samples, std::size_t holdout_size,
                                    double accept_ratio, std::uint64_t seed,
                                    const BpdnConfig& config) {
  config.validate();
  if (holdout_size < 1) throw std::invalid_argument("holdout_size must be positive");
  if (samples.size() <= holdout_size) {
    throw std::invalid_argument("need more samples than the holdout size");
  }
  const std::size_t total = samples.size();
  std::mt19937_64 rng = make_engine(seed, 0x686f6c64ULL);
  std::vector<std::size_t> order(total);
  for (std::size_t i = 0; i < total; ++i) order[i] = i;
  for (std::size_t i = 0; i < holdout_size; ++i) {
    const std::size_t j = i + uniform_index(rng, total - i);
    std::swap(order[i], order[j]);
  }
  std::vector<bool> is_holdout(total, false);
  for (std::size_t i = 0; i < holdout_size; ++i) is_holdout[order[i]] = true;

  std::vector<std::size_t> train_idx, holdout_idx;
  std::vector<double> train_values, holdout_values;
  for (std::size_t i = 0; i < total; ++i) {
    if (is_holdout[i]) {
      holdout_idx.push_back(samples.point_indices()[i]);
      holdout_values.push_back(samples.values()[i]);
    } else {
      train_idx.push_back(samples.point_indices()[i]);
      train_values.push_back(samples.values()[i]);
    }
  }
  RecoveryResult result = run_bpdn_pass(samples.lattice(), train_idx, train_values, holdout_idx,
                                        holdout_values, samples.n_shots(), config);
  result.accepted = result.oos_mse_rel <= accept_ratio * result.baseline_mse_rel;
  return result;
}

}  // namespace qlandscape
