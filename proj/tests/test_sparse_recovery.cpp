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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "helpers.hpp"
#include "qlandscape/sparse_recovery.hpp"

using namespace qlandscape;
namespace qt = qlandscape::testing;

namespace {

// Synthetic sparse signal in the real basis.
struct Planted {
  FrequencyLattice lattice;
  std::vector<std::size_t> support;
  std::vector<double> coefficients;  // dense length n

  double value_at(const SampledBasis& op, std::size_t row) const {
    double acc = 0.0;
    for (std::size_t b : support) acc += coefficients[b] * op.entry(row, b);
    return acc;
  }
};

Planted plant_signal(const FrequencyLattice& lattice, std::size_t s, std::mt19937_64& rng) {
  Planted p{lattice, {}, std::vector<double>(lattice.size(), 0.0)};
  std::set<std::size_t> chosen;
  while (chosen.size() < s) chosen.insert(uniform_index(rng, lattice.size()));
  for (std::size_t b : chosen) {
    p.support.push_back(b);
    p.coefficients[b] = uniform01(rng) < 0.5 ? -1.0 : 1.0;  // unit magnitude
  }
  return p;
}

SampleSet sample_planted(const Planted& p, std::size_t m, std::uint64_t seed) {
  const std::vector<std::size_t> idx = random_sample_grid(p.lattice, m, seed);
  const SampledBasis op(p.lattice, idx);
  std::vector<double> values(m);
  for (std::size_t j = 0; j < m; ++j) values[j] = p.value_at(op, j);
  return SampleSet(p.lattice, idx, values);
}

// FISTA + thresholded support + CG refinement, the Recover core on a fixed set.
struct PassOutput {
  std::vector<double> refined;
  std::vector<std::size_t> support;
};

PassOutput bpdn_pass(const SampleSet& samples, const BpdnConfig& config) {
  const FistaResult fit = fista(samples, config);
  double max_mag = 0.0;
  for (double v : fit.coefficients) max_mag = std::max(max_mag, std::abs(v));
  const double cut = config.support_threshold * max_mag;
  std::vector<std::size_t> support;
  for (std::size_t b = 0; b < fit.coefficients.size(); ++b) {
    if (std::abs(fit.coefficients[b]) > cut) support.push_back(b);
  }
  PassOutput out;
  out.refined = support.empty() ? std::vector<double>(samples.lattice().size(), 0.0)
                                : refine_on_support(samples, support, fit.coefficients, config);
  for (std::size_t b = 0; b < out.refined.size(); ++b) {
    if (std::abs(out.refined[b]) > cut) out.support.push_back(b);
  }
  return out;
}

}  // namespace

TEST_CASE("random_sample_grid invariants") {
  const FrequencyLattice lattice({2, 2});
  const std::size_t n = lattice.size();

  const auto whole = random_sample_grid(lattice, n, 3);
  REQUIRE(whole.size() == n);
  for (std::size_t i = 0; i < n; ++i) CHECK(whole[i] == i);

  const auto one = random_sample_grid(lattice, 1, 9);
  REQUIRE(one.size() == 1);
  CHECK(one[0] < n);

  CHECK(random_sample_grid(lattice, 10, 4) == random_sample_grid(lattice, 10, 4));
  CHECK_THROWS_AS(random_sample_grid(lattice, n + 1, 0), std::invalid_argument);

  const std::vector<std::size_t> exclude{0, 1, 2, 3, 4};
  const auto rest = random_sample_grid(lattice, n - 5, 1, exclude);
  for (std::size_t idx : rest) CHECK(idx >= 5);
}

TEST_CASE("soft threshold formula") {
  const std::vector<double> x{0.5, -0.1, 0.2, -3.0};
  const std::vector<double> out = soft_threshold(x, 0.2);
  CHECK(out[0] == doctest::Approx(0.3));
  CHECK(out[1] == 0.0);
  CHECK(out[2] == 0.0);
  CHECK(out[3] == doctest::Approx(-2.8));
  CHECK(soft_threshold(x, 0.0) == x);
  CHECK_THROWS_AS(soft_threshold(x, -1.0), std::invalid_argument);
}

TEST_CASE("lambda heuristic") {
  CHECK(lambda_heuristic(std::vector<double>{0.0, 0.0}) == 0.0);
  CHECK(lambda_heuristic(std::vector<double>{2.0, 2.0}) == doctest::Approx(4.0));
  CHECK(lambda_heuristic(std::vector<double>{2.0, 2.0}, 0.25) == doctest::Approx(1.0));
  CHECK_THROWS_AS(lambda_heuristic(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("adjoint is the exact transpose (dot-product test)") {
  std::mt19937_64 rng = make_engine(61, 0);
  const FrequencyLattice lattice({4, 3});
  const std::size_t m = 20;
  const SampledBasis op(lattice, random_sample_grid(lattice, m, 2));
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> x(op.cols()), y(op.rows());
    for (double& v : x) v = uniform_real(rng, -1.0, 1.0);
    for (double& v : y) v = uniform_real(rng, -1.0, 1.0);
    const std::vector<double> fx = op.forward(x);
    const std::vector<double> aty = op.adjoint(y);
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t j = 0; j < m; ++j) lhs += fx[j] * y[j];
    for (std::size_t b = 0; b < op.cols(); ++b) rhs += x[b] * aty[b];
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("transform path agrees with the dense path") {
  // n = 83521 with m = 60 exceeds the dense cache, forcing the grid
  // transforms; entries computed directly are the reference.
  const FrequencyLattice lattice({8, 8, 8});
  const std::size_t n = lattice.size();
  REQUIRE(n == 4913);
  const std::size_t m = 1000;  // m * n just under the cache limit: dense path
  const SampledBasis dense_op(lattice, random_sample_grid(lattice, m, 5));

  const FrequencyLattice big({20, 20, 20});
  const std::size_t m2 = 200;
  REQUIRE(big.size() * m2 > 4'000'000);  // transform path
  const SampledBasis transform_op(big, random_sample_grid(big, m2, 5));

  std::mt19937_64 rng = make_engine(62, 0);
  for (const SampledBasis* op : {&dense_op, &transform_op}) {
    std::vector<double> x(op->cols(), 0.0);
    for (int k = 0; k < 30; ++k) x[uniform_index(rng, x.size())] = uniform_real(rng, -2.0, 2.0);
    const std::vector<double> y = op->forward(x);
    for (std::size_t j = 0; j < op->rows(); j += op->rows() / 7 + 1) {
      double direct = 0.0;
      for (std::size_t b = 0; b < x.size(); ++b) {
        if (x[b] != 0.0) direct += x[b] * op->entry(j, b);
      }
      CHECK(std::abs(y[j] - direct) <= 1e-10 * (1.0 + std::abs(direct)));
    }

    std::vector<double> r(op->rows());
    for (double& v : r) v = uniform_real(rng, -1.0, 1.0);
    const std::vector<double> g = op->adjoint(r);
    for (std::size_t b = 0; b < op->cols(); b += op->cols() / 11 + 1) {
      double direct = 0.0;
      for (std::size_t j = 0; j < op->rows(); ++j) direct += op->entry(j, b) * r[j];
      CHECK(std::abs(g[b] - direct) <= 1e-10 * (1.0 + std::abs(direct)));
    }
  }
}

TEST_CASE("basis is orthonormal under the grid inner product") {
  const FrequencyLattice lattice({3, 2});
  const std::size_t n = lattice.size();
  const SampledBasis full(lattice, random_sample_grid(lattice, n, 0));
  std::mt19937_64 rng = make_engine(63, 0);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<double> e(n, 0.0);
    const std::size_t b = uniform_index(rng, n);
    e[b] = 1.0;
    const std::vector<double> gram_col = full.adjoint(full.forward(e));
    for (std::size_t i = 0; i < n; ++i) {
      const double expected = (i == b) ? static_cast<double>(n) : 0.0;
      CHECK(std::abs(gram_col[i] - expected) <= 1e-10 * static_cast<double>(n));
    }
  }
}

TEST_CASE("fista fixed point at zero data") {
  const FrequencyLattice lattice({8});
  SampleSet samples(lattice, {0, 3, 7, 11}, {0.0, 0.0, 0.0, 0.0});
  const FistaResult fit = fista(samples, BpdnConfig{});
  for (double v : fit.coefficients) CHECK(v == 0.0);
}

TEST_CASE("fista with lambda=0 on the full grid reproduces the DFT") {
  std::mt19937_64 rng = make_engine(64, 0);
  const FrequencyLattice lattice({4});
  const std::size_t n = lattice.size();
  const TrigPoly truth = qt::random_poly(lattice, 3, rng);
  const NyquistGrid grid(lattice);
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = truth.eval(grid.point_at(i));
  SampleSet samples(lattice, idx, values);

  BpdnConfig config;
  config.lambda = 0.0;
  const FistaResult fit = fista(samples, config);
  const TrigPoly recovered = real_coefficients_to_poly(lattice, fit.coefficients);
  for (std::size_t flat = 0; flat < n; ++flat) {
    const FrequencyVector k = lattice.frequency_at(flat);
    CHECK(std::abs(recovered.coeff(k) - truth.coeff(k)) <= 1e-8);
  }
}

TEST_CASE("fista objective is non-increasing over the last 10% of iterations") {
  std::mt19937_64 rng = make_engine(65, 0);
  const FrequencyLattice lattice({16});
  const Planted planted = plant_signal(lattice, 3, rng);
  const SampleSet samples = sample_planted(planted, 25, 7);
  BpdnConfig config;
  config.lambda = 0.02;
  const FistaResult fit = fista(samples, config);
  const std::size_t tail = fit.objective_trace.size() * 9 / 10;
  for (std::size_t i = tail; i + 1 < fit.objective_trace.size(); ++i) {
    CHECK(fit.objective_trace[i + 1] <=
          fit.objective_trace[i] + 1e-9 * (1.0 + fit.objective_trace[i]));
  }
}

TEST_CASE("oversized steps trigger the divergence detector") {
  std::mt19937_64 rng = make_engine(66, 0);
  const FrequencyLattice lattice({16});
  const Planted planted = plant_signal(lattice, 3, rng);
  const SampleSet samples = sample_planted(planted, 20, 3);
  BpdnConfig config;
  config.alpha_fista = 50.0;  // far beyond the stability limit
  config.lambda = 1e-6;
  CHECK_THROWS_AS(fista(samples, config), FistaDivergence);
}

TEST_CASE("1-sparse signal, d=1, f=16: support and coefficients recovered") {
  std::mt19937_64 rng = make_engine(67, 0);
  const FrequencyLattice lattice({16});
  REQUIRE(lattice.size() == 33);
  Planted planted{lattice, {5}, std::vector<double>(33, 0.0)};
  planted.coefficients[5] = 1.0;
  const SampleSet samples = sample_planted(planted, 20, 11);

  BpdnConfig config;
  config.lambda_scale = 0.02;  // heuristic gives ~1; scale well below the unit coefficient
  const PassOutput out = bpdn_pass(samples, config);
  CHECK(out.support == std::vector<std::size_t>{5});
  double err = 0.0;
  for (std::size_t b = 0; b < 33; ++b) {
    err = std::max(err, std::abs(out.refined[b] - planted.coefficients[b]));
  }
  CHECK(err <= 1e-6);
}

TEST_CASE("planted s=5 in n=1025: recovery at m=300, failure at m=20") {
  std::mt19937_64 rng = make_engine(68, 0);
  const FrequencyLattice lattice({512});
  REQUIRE(lattice.size() == 1025);
  const Planted planted = plant_signal(lattice, 5, rng);

  BpdnConfig config;
  config.lambda_scale = 0.01;

  const SampleSet good = sample_planted(planted, 300, 21);
  const PassOutput ok = bpdn_pass(good, config);
  std::vector<std::size_t> expected = planted.support;
  std::sort(expected.begin(), expected.end());
  CHECK(ok.support == expected);
  double err = 0.0;
  for (std::size_t b = 0; b < lattice.size(); ++b) {
    err = std::max(err, std::abs(ok.refined[b] - planted.coefficients[b]));
  }
  CHECK(err <= 1e-6);

  const SampleSet bad = sample_planted(planted, 20, 22);
  const PassOutput fail = bpdn_pass(bad, config);
  CHECK(fail.support != expected);
}

TEST_CASE("refinement equals the DFT on the full grid with full support") {
  std::mt19937_64 rng = make_engine(69, 0);
  const FrequencyLattice lattice({5});
  const std::size_t n = lattice.size();
  const TrigPoly truth = qt::random_poly(lattice, 4, rng);
  const NyquistGrid grid(lattice);
  std::vector<std::size_t> idx(n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    idx[i] = i;
    values[i] = truth.eval(grid.point_at(i));
  }
  SampleSet samples(lattice, idx, values);

  std::vector<std::size_t> full_support(n);
  for (std::size_t i = 0; i < n; ++i) full_support[i] = i;
  const std::vector<double> init(n, 0.0);
  const std::vector<double> refined = refine_on_support(samples, full_support, init, BpdnConfig{});
  const TrigPoly recovered = real_coefficients_to_poly(lattice, refined);
  for (std::size_t flat = 0; flat < n; ++flat) {
    const FrequencyVector k = lattice.frequency_at(flat);
    CHECK(std::abs(recovered.coeff(k) - truth.coeff(k)) <= 1e-10);
  }
}

TEST_CASE("refinement is monotone and leaves an optimal point unchanged") {
  std::mt19937_64 rng = make_engine(70, 0);
  const FrequencyLattice lattice({10});
  const Planted planted = plant_signal(lattice, 3, rng);
  const SampleSet samples = sample_planted(planted, 15, 9);

  auto objective = [&](std::span<const double> x) {
    const SampledBasis op(lattice, samples.point_indices());
    const std::vector<double> pred = op.forward(x);
    double acc = 0.0;
    for (std::size_t j = 0; j < pred.size(); ++j) {
      const double e = pred[j] - samples.values()[j];
      acc += e * e;
    }
    return acc / (2.0 * static_cast<double>(pred.size()));
  };

  std::vector<std::size_t> support = planted.support;
  std::sort(support.begin(), support.end());
  std::vector<double> init(lattice.size(), 0.0);
  const std::vector<double> refined = refine_on_support(samples, support, init, BpdnConfig{});
  CHECK(objective(refined) <= objective(init) + 1e-15);

  // exact-solution fixed point
  const std::vector<double> again = refine_on_support(samples, support, refined, BpdnConfig{});
  for (std::size_t b = 0; b < lattice.size(); ++b) {
    CHECK(std::abs(again[b] - refined[b]) <= 1e-12);
  }

  CHECK_THROWS_AS(refine_on_support(samples, {}, init, BpdnConfig{}), std::invalid_argument);
}

TEST_CASE("real coefficients convert to a polynomial with matching values") {
  std::mt19937_64 rng = make_engine(71, 0);
  const FrequencyLattice lattice({3, 2});
  std::vector<double> x(lattice.size());
  for (double& v : x) v = uniform_real(rng, -1.0, 1.0);
  const TrigPoly poly = real_coefficients_to_poly(lattice, x);
  const std::vector<std::size_t> idx = random_sample_grid(lattice, 10, 1);
  const SampledBasis op(lattice, idx);
  const NyquistGrid grid(lattice);
  for (std::size_t row = 0; row < idx.size(); ++row) {
    double direct = 0.0;
    for (std::size_t b = 0; b < x.size(); ++b) direct += x[b] * op.entry(row, b);
    CHECK(std::abs(poly.eval(grid.point_at(idx[row])) - direct) <= 1e-11);
  }
}

TEST_CASE("recover on a constant oracle") {
  const FrequencyLattice lattice({6, 6});
  const CostOracle oracle = [](std::span<const double>) { return 2.5; };
  RecoverOptions options;
  options.m_init = 10;
  options.holdout_size = 20;
  options.seed = 123;
  const RecoveryResult result = recover(oracle, lattice, options, BpdnConfig{});
  CHECK(result.accepted);
  CHECK(result.support_size == 1);
  CHECK(result.m_used == 10);
  CHECK(result.oos_mse_rel <= 1e-12);
  CHECK(std::abs(result.poly.coeff(FrequencyVector{0, 0}).real() - 2.5) <= 1e-9);
}

TEST_CASE("recover doubles m until acceptance and reuses samples") {
  std::mt19937_64 rng = make_engine(72, 0);
  const FrequencyLattice lattice({40});
  const Planted planted = plant_signal(lattice, 4, rng);
  const TrigPoly truth = real_coefficients_to_poly(lattice, planted.coefficients);
  const CostOracle oracle = [&truth](std::span<const double> theta) { return truth.eval(theta); };
  RecoverOptions options;
  options.m_init = 6;  // too small; doubling should kick in
  options.holdout_size = 15;
  options.accept_ratio = 0.01;
  options.m_max = 60;
  options.seed = 9;
  BpdnConfig config;
  config.lambda_scale = 0.01;
  const RecoveryResult result = recover(oracle, lattice, options, config);
  CHECK(result.m_used > 6);
  CHECK(result.accepted);
}

TEST_CASE("sample set validation") {
  const FrequencyLattice lattice({2});
  CHECK_THROWS_AS(SampleSet(lattice, {1, 1}, {0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(SampleSet(lattice, {7}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(SampleSet(lattice, {0}, {std::nan("")}), std::invalid_argument);

  const NyquistGrid grid(lattice);
  std::vector<std::vector<double>> points{grid.point_at(3), grid.point_at(1)};
  const SampleSet ok = SampleSet::from_points(lattice, points, {3.0, 1.0});
  CHECK(ok.point_indices() == std::vector<std::size_t>{1, 3});
  CHECK(ok.values() == std::vector<double>{1.0, 3.0});

  points[0][0] += 0.01;  // off the grid
  CHECK_THROWS_AS(SampleSet::from_points(lattice, points, {3.0, 1.0}), std::invalid_argument);
}
