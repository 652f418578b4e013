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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdeph/numerics.hpp"
#include "qdeph/rng.hpp"

namespace qdeph {

/// Raw spectrum fields as they appear in configuration files.
struct SpectrumParams {
  double omega1 = 0.0;      ///< first peak center, rad/s
  double omega2 = 0.0;      ///< second peak center, rad/s
  double sigma = 0.0;       ///< common peak width, rad/s
  double amp_ratio = 0.0;   ///< A = A2 / A1
  double delta_n = 1.0;     ///< birefringence contrast n_H - n_V
  double time_scale = 1.0;  ///< multiplier applied to the time argument
};

/// Double-peaked Gaussian frequency intensity of one photon's environment.
///
/// Stored in canonical orientation omega2 >= omega1: a spectrum given the
/// other way round is mirrored by swapping the peaks and inverting A, which
/// describes the same intensity distribution.
class DoublePeakSpectrum {
 public:
  /// Throws std::invalid_argument on sigma < 0, A < 0, delta_n <= 0,
  /// time_scale <= 0 or non-finite fields.
  explicit DoublePeakSpectrum(const SpectrumParams& params);

  double omega1() const { return p_.omega1; }
  double omega2() const { return p_.omega2; }
  double sigma() const { return p_.sigma; }
  double amp_ratio() const { return p_.amp_ratio; }
  double delta_n() const { return p_.delta_n; }
  double time_scale() const { return p_.time_scale; }
  double peak_separation() const { return p_.omega2 - p_.omega1; }
  const SpectrumParams& params() const { return p_; }

  /// Peak weights 1/(1+A) and A/(1+A).
  double weight1() const { return 1.0 / (1.0 + p_.amp_ratio); }
  double weight2() const { return p_.amp_ratio / (1.0 + p_.amp_ratio); }

  DoublePeakSpectrum with_amp_ratio(double a) const;
  DoublePeakSpectrum with_time_scale(double s) const;

  bool operator==(const DoublePeakSpectrum&) const = default;

 private:
  SpectrumParams p_;
};

/// Uniform sampling t_i = i * t_max / (n_points - 1) of the time parameter (seconds).
class TimeGrid {
 public:
  TimeGrid(double t_max, std::size_t n_points);

  double t_max() const { return t_max_; }
  std::size_t size() const { return n_; }
  double operator[](std::size_t i) const {
    return i + 1 == n_ ? t_max_ : static_cast<double>(i) * t_max_ / static_cast<double>(n_ - 1);
  }
  std::vector<double> samples() const;

 private:
  double t_max_;
  std::size_t n_;
};

inline constexpr std::size_t kDefaultGridPoints = std::size_t{1} << 17;
inline constexpr double kDefaultWindowFactor = 6.0;

/// Window t_max = factor / max_j(sigma_j * delta_n_j * time_scale_j): the
/// slower of the two Gaussian envelopes has decayed to exp(-factor^2 / 2).
TimeGrid default_grid(const DoublePeakSpectrum& a, const DoublePeakSpectrum& b,
                      std::size_t n_points = kDefaultGridPoints, double factor = kDefaultWindowFactor);

/// Fourier transform of the intensity evaluated at delta_n * time_scale * tau:
/// exp(-(sigma dn s tau)^2 / 2) (e^{i dn w1 s tau} + A e^{i dn w2 s tau}) / (1 + A).
Complex characteristic_fn(const DoublePeakSpectrum& spec, double tau);

/// |characteristic_fn| from the real closed form
/// exp(-(sigma dn s tau)^2 / 2) sqrt(1 + A^2 + 2 A cos(dn dw s tau)) / (1 + A).
double magnitude(const DoublePeakSpectrum& spec, double tau);

/// magnitude(spec, t_i) over the grid.
std::vector<double> magnitude_series(const DoublePeakSpectrum& spec, const TimeGrid& grid);

/// Draws one frequency from the two-component intensity mixture.
double sample_frequency(const DoublePeakSpectrum& spec, CounterRng& rng);

/// Sample mean of exp(i dn s tau w) with w drawn from the intensity mixture.
///
/// The samples are split into `partitions` contiguous blocks; block j uses the
/// stream derive_seed(seed, j). Results are bit-identical for a fixed
/// (seed, n_samples, partitions) triple.
Complex monte_carlo_characteristic(const DoublePeakSpectrum& spec, double tau, std::size_t n_samples,
                                   std::uint64_t seed, std::size_t partitions = 1);

}  // namespace qdeph
