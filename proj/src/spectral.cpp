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

#include "qlandscape/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qlandscape/threads.hpp"

namespace qlandscape {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSymmetryTol = 1e-10;

// One separable axis pass over the kernel exp(sign * 2 pi i (a - f) j / g)
// with a the frequency digit and j the spatial index.
//   to_frequency: out[a] = sum_j in[j] kernel   (analysis, sign = -1)
//   to_spatial:   out[j] = sum_a in[a] kernel   (synthesis, sign = +1)
enum class AxisPass { ToFrequency, ToSpatial };

void axis_transform(std::vector<Complex>& data, const std::vector<int>& grid_sizes,
                    std::size_t axis, int f, AxisPass pass) {
  const std::size_t g = static_cast<std::size_t>(grid_sizes[axis]);
  std::size_t stride = 1;
  for (std::size_t i = axis + 1; i < grid_sizes.size(); ++i) {
    stride *= static_cast<std::size_t>(grid_sizes[i]);
  }
  const std::size_t n = data.size();
  const std::size_t lines = n / g;
  const int sign = pass == AxisPass::ToFrequency ? -1 : 1;
  const std::size_t uf = static_cast<std::size_t>(f);

  std::vector<Complex> roots(g);
  for (std::size_t r = 0; r < g; ++r) {
    const double ang = sign * kTwoPi * static_cast<double>(r) / static_cast<double>(g);
    roots[r] = Complex(std::cos(ang), std::sin(ang));
  }

  parallel_for_blocks(0, lines, [&](std::size_t lo, std::size_t hi) {
    std::vector<Complex> in(g), out(g);
    for (std::size_t line = lo; line < hi; ++line) {
      const std::size_t block = line / stride;
      const std::size_t offset = line % stride;
      const std::size_t base = block * g * stride + offset;
      for (std::size_t t = 0; t < g; ++t) in[t] = data[base + t * stride];
      for (std::size_t o = 0; o < g; ++o) {
        // twiddle exponent (a - f) j mod g walked incrementally over the
        // summation index
        std::size_t r, step;
        if (pass == AxisPass::ToFrequency) {
          step = (o + g - uf % g) % g;  // o = digit a, sum over j
          r = 0;
        } else {
          step = o % g;  // o = spatial j, sum over a
          r = (g - (o * uf) % g) % g;
        }
        Complex acc(0.0, 0.0);
        for (std::size_t t = 0; t < g; ++t) {
          acc += in[t] * roots[r];
          r += step;
          if (r >= g) r -= g;
        }
        out[o] = acc;
      }
      for (std::size_t t = 0; t < g; ++t) data[base + t * stride] = out[t];
    }
  });
}

std::vector<Complex> separable_transform(const FrequencyLattice& lattice,
                                         std::vector<Complex> data, AxisPass pass) {
  if (data.size() != lattice.size()) throw std::invalid_argument("buffer size mismatch");
  const std::vector<int> sizes = lattice.grid_sizes();
  for (std::size_t axis = 0; axis < sizes.size(); ++axis) {
    axis_transform(data, sizes, axis, lattice.max_freq()[axis], pass);
  }
  return data;
}

}  // namespace

std::vector<double> NyquistGrid::point_at(std::size_t flat) const {
  if (flat >= num_points()) throw std::invalid_argument("grid index out of range");
  const auto& f = lattice_.max_freq();
  std::vector<double> theta(f.size());
  for (std::size_t i = f.size(); i-- > 0;) {
    const std::size_t g = 2 * static_cast<std::size_t>(f[i]) + 1;
    theta[i] = kTwoPi * static_cast<double>(flat % g) / static_cast<double>(g);
    flat /= g;
  }
  return theta;
}

std::vector<Complex> grid_synthesis(const FrequencyLattice& lattice, std::vector<Complex> coeffs) {
  return separable_transform(lattice, std::move(coeffs), AxisPass::ToSpatial);
}

std::vector<Complex> grid_analysis(const FrequencyLattice& lattice, std::vector<Complex> values) {
  return separable_transform(lattice, std::move(values), AxisPass::ToFrequency);
}

GridData sample_full_grid(const CostOracle& oracle, const NyquistGrid& grid, std::size_t budget) {
  const std::size_t n = grid.num_points();
  if (n > budget) throw std::invalid_argument("grid exceeds the sampling budget");
  std::vector<double> values(n);
  parallel_for(0, n, [&](std::size_t j) {
    const std::vector<double> theta = grid.point_at(j);
    values[j] = oracle(theta);
  });
  return GridData{grid, std::move(values)};
}

TrigPoly dft_forward(const GridData& data) {
  const FrequencyLattice& lattice = data.grid.lattice();
  const std::size_t n = lattice.size();
  if (data.values.size() != n) throw std::invalid_argument("grid data length mismatch");
  for (double v : data.values) {
    if (!std::isfinite(v)) throw std::invalid_argument("grid data must be finite");
  }

  std::vector<Complex> buf(n);
  for (std::size_t j = 0; j < n; ++j) buf[j] = Complex(data.values[j], 0.0);
  buf = grid_analysis(lattice, std::move(buf));
  const double inv_n = 1.0 / static_cast<double>(n);

  double max_mag = 0.0;
  for (const Complex& c : buf) max_mag = std::max(max_mag, std::abs(c) * inv_n);
  const double tol = kSymmetryTol * std::max(1.0, max_mag);
  // transform roundoff floor; anything below is numerically zero
  const double floor = 1e-15 * max_mag;

  TrigPoly poly(lattice);
  const std::size_t zero_flat = lattice.flat_index(FrequencyVector(lattice.dims(), 0));
  // Fold each {k, -k} pair onto the canonical index; real input guarantees the
  // pair is conjugate up to roundoff.
  for (std::size_t flat = 0; flat < n; ++flat) {
    const std::size_t mirror = lattice.mirror_index(flat);
    if (flat > mirror) continue;
    if (flat == zero_flat) {
      const Complex c = buf[flat] * inv_n;
      if (std::abs(c.imag()) > tol) throw std::runtime_error("DFT symmetry deviation above tolerance");
      if (std::abs(c.real()) > floor) poly.set(lattice.frequency_at(flat), Complex(c.real(), 0.0));
      continue;
    }
    const Complex a = buf[flat] * inv_n;
    const Complex b = std::conj(buf[mirror] * inv_n);
    if (std::abs(a - b) > tol) throw std::runtime_error("DFT symmetry deviation above tolerance");
    const Complex c = 0.5 * (a + b);
    const FrequencyVector k = lattice.frequency_at(flat);
    if (std::abs(c) > floor) {
      poly.set(is_canonical(k) ? k : negated(k), is_canonical(k) ? c : std::conj(c));
    }
  }
  return poly;
}

std::vector<Complex> full_coefficients(const TrigPoly& poly) {
  const FrequencyLattice& lattice = poly.lattice();
  std::vector<Complex> c(lattice.size(), Complex(0.0, 0.0));
  for (const auto& [flat, v] : poly.canonical_coeffs()) {
    c[flat] = v;
    c[lattice.mirror_index(flat)] = std::conj(v);
  }
  return c;
}

GridData dft_inverse(const TrigPoly& poly, const NyquistGrid& grid) {
  if (!(poly.lattice() == grid.lattice())) throw std::invalid_argument("lattice mismatch");
  std::vector<Complex> buf = grid_synthesis(poly.lattice(), full_coefficients(poly));
  std::vector<double> values(buf.size());
  for (std::size_t j = 0; j < buf.size(); ++j) values[j] = buf[j].real();
  return GridData{grid, std::move(values)};
}

std::size_t sparsity(const TrigPoly& poly, double rel_threshold) {
  if (rel_threshold <= 0.0 || rel_threshold >= 1.0) {
    throw std::invalid_argument("rel_threshold must lie in (0, 1)");
  }
  const double max_mag = poly.max_abs_coeff();
  if (max_mag == 0.0) return 0;
  const double cut = rel_threshold * max_mag;
  const std::size_t zero_flat =
      poly.lattice().flat_index(FrequencyVector(poly.lattice().dims(), 0));
  std::size_t s = 0;
  for (const auto& [flat, c] : poly.canonical_coeffs()) {
    if (std::abs(c) > cut) s += (flat == zero_flat) ? 1 : 2;
  }
  return s;
}

TrigPoly recover_full(const CostOracle& oracle, const std::vector<int>& group_sizes,
                      std::size_t budget) {
  const FrequencyLattice lattice = support_from_correlated_circuit(group_sizes);
  const NyquistGrid grid(lattice);
  return dft_forward(sample_full_grid(oracle, grid, budget));
}

}  // namespace qlandscape
