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

#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <string>
#include <vector>

namespace qdeph {

using Complex = std::complex<double>;

/// Increments at or below this value do not count as an increase.
inline constexpr double kIncreaseThreshold = 1e-9;
/// Allowed |M_ij - conj(M_ji)| for a matrix to be accepted as Hermitian.
inline constexpr double kHermiticityTolerance = 1e-12;
/// Trace and eigenvalue slack for density matrices.
inline constexpr double kDensityTolerance = 1e-10;

/// Raised when an input object violates a structural invariant
/// (non-Hermitian matrix, invalid density matrix, non-stochastic matrix).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// H2(p) in bits, with 0 log 0 = 0. Throws std::domain_error outside [0, 1].
double binary_entropy(double p);

/// Dense complex Hermitian matrix of dimension 2 (one qubit) or 4 (two
/// qubits), stored row-major. Two-qubit index order is HH, HV, VH, VV.
template <std::size_t N>
class HermitianMatrix {
  static_assert(N == 2 || N == 4, "only one- and two-qubit matrices");

 public:
  static constexpr std::size_t kDim = N;
  using Entries = std::array<Complex, N * N>;

  HermitianMatrix() : entries_{} {}

  /// Validates Hermiticity within kHermiticityTolerance.
  explicit HermitianMatrix(const Entries& entries);

  /// Skips validation; the caller guarantees Hermiticity.
  static HermitianMatrix trusted(const Entries& entries) {
    HermitianMatrix m;
    m.entries_ = entries;
    return m;
  }

  static HermitianMatrix identity() {
    HermitianMatrix m;
    for (std::size_t i = 0; i < N; ++i) m.entries_[i * N + i] = 1.0;
    return m;
  }

  /// |v><v| for a (not necessarily normalized) vector.
  static HermitianMatrix projector(const std::array<Complex, N>& v) {
    HermitianMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m.entries_[i * N + j] = v[i] * std::conj(v[j]);
    return m;
  }

  Complex operator()(std::size_t i, std::size_t j) const { return entries_[i * N + j]; }
  const Entries& entries() const { return entries_; }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += entries_[i * N + i].real();
    return t;
  }

  HermitianMatrix operator+(const HermitianMatrix& o) const {
    HermitianMatrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
  }
  HermitianMatrix operator-(const HermitianMatrix& o) const {
    HermitianMatrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
  }
  HermitianMatrix operator*(double s) const {
    HermitianMatrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.entries_[i] = entries_[i] * s;
    return r;
  }

  double max_abs_diff(const HermitianMatrix& o) const {
    double d = 0.0;
    for (std::size_t i = 0; i < N * N; ++i) d = std::max(d, std::abs(entries_[i] - o.entries_[i]));
    return d;
  }

  double frobenius_norm() const;

 private:
  Entries entries_;
};

using Matrix2 = HermitianMatrix<2>;
using Matrix4 = HermitianMatrix<4>;

/// Real eigenvalues in descending order, by cyclic complex Jacobi rotations.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const HermitianMatrix<N>& m);

/// Sum of absolute eigenvalues.
template <std::size_t N>
double trace_norm(const HermitianMatrix<N>& m);

/// Throws ValidationError unless unit trace and positive semidefinite
/// within kDensityTolerance.
template <std::size_t N>
void validate_density(const HermitianMatrix<N>& rho);

template <std::size_t N>
bool is_density(const HermitianMatrix<N>& rho);

/// D(r1, r2) = ||r1 - r2||_tr / 2. Both arguments are validated.
template <std::size_t N>
double trace_distance(const HermitianMatrix<N>& r1, const HermitianMatrix<N>& r2);

/// Optimal single-shot discrimination probability (1 + D) / 2.
template <std::size_t N>
double distinguish_probability(const HermitianMatrix<N>& r1, const HermitianMatrix<N>& r2);

struct TimeInterval {
  double start = 0.0;
  double end = 0.0;
};

struct IncreaseSummary {
  double total = 0.0;
  std::vector<TimeInterval> intervals;
  /// Index pairs [first, last] of the sample points bounding each interval.
  std::vector<std::pair<std::size_t, std::size_t>> index_ranges;
};

/// Adds up the rises max(0, f[i+1] - f[i]) that exceed `threshold` and
/// reports the maximal runs of such rises as time intervals.
IncreaseSummary positive_increase_sum(std::span<const double> times, std::span<const double> values,
                                      double threshold = kIncreaseThreshold);

/// True when no consecutive rise exceeds `threshold`.
bool is_non_increasing(std::span<const double> values, double threshold = kIncreaseThreshold);

}  // namespace qdeph
