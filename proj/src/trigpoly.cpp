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

#include "qlandscape/trigpoly.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qlandscape {

namespace {
constexpr double kZeroFreqImagTol = 1e-9;
}

FrequencyLattice::FrequencyLattice(std::vector<int> max_freq)
    : max_freq_(std::move(max_freq)) {
  if (max_freq_.empty()) throw std::invalid_argument("lattice needs at least one dimension");
  const std::size_t overflow_guard = std::numeric_limits<std::size_t>::max() / 2;
  for (int f : max_freq_) {
    if (f < 0) throw std::invalid_argument("max_freq entries must be nonnegative");
    const std::size_t g = 2 * static_cast<std::size_t>(f) + 1;
    if (size_ > overflow_guard / g) throw std::invalid_argument("lattice size overflows");
    size_ *= g;
  }
}

std::vector<int> FrequencyLattice::grid_sizes() const {
  std::vector<int> g(max_freq_.size());
  for (std::size_t i = 0; i < max_freq_.size(); ++i) g[i] = 2 * max_freq_[i] + 1;
  return g;
}

bool FrequencyLattice::contains(const FrequencyVector& k) const {
  if (k.size() != max_freq_.size()) return false;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < -max_freq_[i] || k[i] > max_freq_[i]) return false;
  }
  return true;
}

std::size_t FrequencyLattice::flat_index(const FrequencyVector& k) const {
  if (!contains(k)) throw std::invalid_argument("frequency vector outside lattice");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    flat = flat * (2 * static_cast<std::size_t>(max_freq_[i]) + 1) +
           static_cast<std::size_t>(k[i] + max_freq_[i]);
  }
  return flat;
}

FrequencyVector FrequencyLattice::frequency_at(std::size_t flat) const {
  if (flat >= size_) throw std::invalid_argument("flat index outside lattice");
  FrequencyVector k(max_freq_.size());
  for (std::size_t i = max_freq_.size(); i-- > 0;) {
    const std::size_t g = 2 * static_cast<std::size_t>(max_freq_[i]) + 1;
    k[i] = static_cast<int>(flat % g) - max_freq_[i];
    flat /= g;
  }
  return k;
}

std::size_t FrequencyLattice::mirror_index(std::size_t flat) const {
  if (flat >= size_) throw std::invalid_argument("flat index outside lattice");
  return size_ - 1 - flat;
}

FrequencyLattice support_from_correlated_circuit(const std::vector<int>& group_sizes) {
  if (group_sizes.empty()) throw std::invalid_argument("empty group list");
  for (int m : group_sizes) {
    if (m < 1) throw std::invalid_argument("group sizes must be positive");
  }
  return FrequencyLattice(group_sizes);
}

bool is_canonical(const FrequencyVector& k) {
  for (int v : k) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return true;  // zero vector
}

FrequencyVector negated(const FrequencyVector& k) {
  FrequencyVector m(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) m[i] = -k[i];
  return m;
}

TrigPoly::TrigPoly(FrequencyLattice lattice) : lattice_(std::move(lattice)) {}

void TrigPoly::add_flat(std::size_t flat, const FrequencyVector& k, Complex c, bool replace) {
  auto it = coeffs_.find(flat);
  Complex next = c;
  if (it != coeffs_.end() && !replace) next += it->second;
  const bool zero_freq = flat == lattice_.flat_index(FrequencyVector(k.size(), 0));
  if (zero_freq) {
    if (std::abs(next.imag()) > kZeroFreqImagTol * (1.0 + std::abs(next.real()))) {
      throw std::invalid_argument("zero-frequency coefficient must be real");
    }
    next = Complex(next.real(), 0.0);
  }
  if (next == Complex(0.0, 0.0)) {
    if (it != coeffs_.end()) coeffs_.erase(it);
    return;
  }
  if (it != coeffs_.end()) {
    it->second = next;
  } else {
    coeffs_.emplace(flat, next);
  }
}

void TrigPoly::add(const FrequencyVector& k, Complex c) {
  if (!lattice_.contains(k)) throw std::invalid_argument("frequency vector outside lattice");
  if (is_canonical(k)) {
    add_flat(lattice_.flat_index(k), k, c, false);
  } else {
    add_flat(lattice_.flat_index(negated(k)), k, std::conj(c), false);
  }
}

void TrigPoly::set(const FrequencyVector& k, Complex c) {
  if (!lattice_.contains(k)) throw std::invalid_argument("frequency vector outside lattice");
  if (is_canonical(k)) {
    add_flat(lattice_.flat_index(k), k, c, true);
  } else {
    add_flat(lattice_.flat_index(negated(k)), k, std::conj(c), true);
  }
}

Complex TrigPoly::coeff(const FrequencyVector& k) const {
  if (!lattice_.contains(k)) throw std::invalid_argument("frequency vector outside lattice");
  if (is_canonical(k)) {
    auto it = coeffs_.find(lattice_.flat_index(k));
    return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
  }
  auto it = coeffs_.find(lattice_.flat_index(negated(k)));
  return it == coeffs_.end() ? Complex(0.0, 0.0) : std::conj(it->second);
}

std::size_t TrigPoly::full_support_size() const {
  std::size_t s = 0;
  const std::size_t zero_flat = lattice_.flat_index(FrequencyVector(lattice_.dims(), 0));
  for (const auto& [flat, c] : coeffs_) s += (flat == zero_flat) ? 1 : 2;
  return s;
}

double TrigPoly::eval(std::span<const double> theta) const {
  if (static_cast<int>(theta.size()) != lattice_.dims()) {
    throw std::invalid_argument("theta dimension mismatch");
  }
  // c_k e^{ik.theta} + conj for the mirror term = 2 Re(c_k e^{ik.theta});
  // the storage scheme makes the result real by construction.
  double acc = 0.0;
  const std::size_t zero_flat = lattice_.flat_index(FrequencyVector(lattice_.dims(), 0));
  for (const auto& [flat, c] : coeffs_) {
    if (flat == zero_flat) {
      acc += c.real();
      continue;
    }
    const FrequencyVector k = lattice_.frequency_at(flat);
    double phase = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) phase += k[i] * theta[i];
    acc += 2.0 * (c.real() * std::cos(phase) - c.imag() * std::sin(phase));
  }
  return acc;
}

std::vector<double> TrigPoly::grad(std::span<const double> theta) const {
  if (static_cast<int>(theta.size()) != lattice_.dims()) {
    throw std::invalid_argument("theta dimension mismatch");
  }
  std::vector<double> g(theta.size(), 0.0);
  const std::size_t zero_flat = lattice_.flat_index(FrequencyVector(lattice_.dims(), 0));
  for (const auto& [flat, c] : coeffs_) {
    if (flat == zero_flat) continue;
    const FrequencyVector k = lattice_.frequency_at(flat);
    double phase = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) phase += k[i] * theta[i];
    // d/dtheta_j of 2 Re(c e^{i phase}) = 2 k_j Re(i c e^{i phase})
    const double re_ice = -(c.real() * std::sin(phase) + c.imag() * std::cos(phase));
    for (std::size_t j = 0; j < k.size(); ++j) g[j] += 2.0 * k[j] * re_ice;
  }
  return g;
}

double TrigPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [flat, c] : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

void TrigPoly::prune(double abs_threshold) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (std::abs(it->second) <= abs_threshold) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace qlandscape
