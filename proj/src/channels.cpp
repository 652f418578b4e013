// Copyright 2026 The qdeph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdeph/channels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qdeph {

namespace {

constexpr double kContractionSlack = 1e-12;

void check_kappa(Complex kappa) {
  if (!(std::abs(kappa) <= 1.0 + kContractionSlack)) {
    std::ostringstream msg;
    msg << "decoherence factor |kappa| = " << std::abs(kappa) << " exceeds 1; map is not CPTP";
    throw std::invalid_argument(msg.str());
  }
}

void check_magnitude(double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    std::ostringstream msg;
    msg << "coherence magnitude " << m << " outside [0, 1]";
    throw std::domain_error(msg.str());
  }
}

// Factor for one qubit's letter change from `row` to `col` (0 = H, 1 = V).
Complex letter_factor(unsigned row, unsigned col, Complex kappa) {
  if (row == col) return 1.0;
  return row == 0 ? kappa : std::conj(kappa);
}

}  // namespace

Matrix4 apply_dephasing(const Matrix4& rho, Complex kappa1, Complex kappa2) {
  check_kappa(kappa1);
  check_kappa(kappa2);
  Matrix4::Entries out = rho.entries();
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      out[i * 4 + j] *= letter_factor(i >> 1, j >> 1, kappa1) * letter_factor(i & 1, j & 1, kappa2);
    }
  }
  return Matrix4::trusted(out);
}

Matrix2 apply_local_dephasing(const Matrix2& rho, Complex kappa) {
  check_kappa(kappa);
  Matrix2::Entries out = rho.entries();
  out[1] *= kappa;
  out[2] *= std::conj(kappa);
  return Matrix2::trusted(out);
}

double capacity_single(double mag) {
  check_magnitude(mag);
  return 1.0 - binary_entropy(0.5 * (1.0 + mag));
}

double capacity_two_qubit(double mag1, double mag2) {
  check_magnitude(mag1);
  check_magnitude(mag2);
  return 2.0 - binary_entropy(0.5 * (1.0 + mag1)) - binary_entropy(0.5 * (1.0 + mag2));
}

CapacityTrace capacity_trace(const DephasingPair& pair, const TimeGrid& grid) {
  CapacityTrace trace{grid, {}, {}, {}};
  trace.q_a.resize(grid.size());
  trace.q_b.resize(grid.size());
  trace.q_ab.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double ma = magnitude(pair.a, grid[i]);
    const double mb = magnitude(pair.b, grid[i]);
    trace.q_a[i] = capacity_single(ma);
    trace.q_b[i] = capacity_single(mb);
    trace.q_ab[i] = capacity_two_qubit(ma, mb);
  }
  return trace;
}

}  // namespace qdeph
