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

#include "qdeph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qdeph/rng.hpp"

namespace qdeph {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("DoublePeakSpectrum: ") + what);
}

void check_tau(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    std::ostringstream msg;
    msg << "spectrum evaluated at negative or non-finite time " << tau;
    throw std::domain_error(msg.str());
  }
}

}  // namespace

DoublePeakSpectrum::DoublePeakSpectrum(const SpectrumParams& params) : p_(params) {
  require(std::isfinite(p_.omega1) && std::isfinite(p_.omega2), "peak centers must be finite");
  require(std::isfinite(p_.sigma) && p_.sigma >= 0.0, "sigma must be >= 0");
  require(std::isfinite(p_.amp_ratio) && p_.amp_ratio >= 0.0, "amp_ratio must be >= 0");
  require(std::isfinite(p_.delta_n) && p_.delta_n > 0.0, "delta_n must be > 0");
  require(std::isfinite(p_.time_scale) && p_.time_scale > 0.0, "time_scale must be > 0");
  if (p_.omega2 < p_.omega1) {
    if (p_.amp_ratio > 0.0) {
      std::swap(p_.omega1, p_.omega2);
      p_.amp_ratio = 1.0 / p_.amp_ratio;
    } else {
      // Second peak carries no weight; only omega1 is physical.
      p_.omega2 = p_.omega1;
    }
  }
}

DoublePeakSpectrum DoublePeakSpectrum::with_amp_ratio(double a) const {
  SpectrumParams p = p_;
  p.amp_ratio = a;
  return DoublePeakSpectrum(p);
}

DoublePeakSpectrum DoublePeakSpectrum::with_time_scale(double s) const {
  SpectrumParams p = p_;
  p.time_scale = s;
  return DoublePeakSpectrum(p);
}

TimeGrid::TimeGrid(double t_max, std::size_t n_points) : t_max_(t_max), n_(n_points) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw std::invalid_argument("TimeGrid: t_max must be > 0");
  if (n_points < 2) throw std::invalid_argument("TimeGrid: need at least 2 points");
}

std::vector<double> TimeGrid::samples() const {
  std::vector<double> t(n_);
  for (std::size_t i = 0; i < n_; ++i) t[i] = (*this)[i];
  return t;
}

TimeGrid default_grid(const DoublePeakSpectrum& a, const DoublePeakSpectrum& b, std::size_t n_points,
                      double factor) {
  const double rate = std::max(a.sigma() * a.delta_n() * a.time_scale(),
                               b.sigma() * b.delta_n() * b.time_scale());
  if (!(rate > 0.0)) throw std::invalid_argument("default_grid: both spectra have zero width");
  if (!(factor > 0.0)) throw std::invalid_argument("default_grid: window factor must be > 0");
  return TimeGrid(factor / rate, n_points);
}

Complex characteristic_fn(const DoublePeakSpectrum& spec, double tau) {
  check_tau(tau);
  if (tau == 0.0) return {1.0, 0.0};
  const double x = spec.delta_n() * spec.time_scale() * tau;
  const double envelope = std::exp(-0.5 * std::pow(spec.sigma() * x, 2));
  const Complex peaks = std::polar(1.0, spec.omega1() * x) + spec.amp_ratio() * std::polar(1.0, spec.omega2() * x);
  return envelope * peaks / (1.0 + spec.amp_ratio());
}

double magnitude(const DoublePeakSpectrum& spec, double tau) {
  check_tau(tau);
  if (tau == 0.0) return 1.0;
  const double x = spec.delta_n() * spec.time_scale() * tau;
  const double a = spec.amp_ratio();
  const double envelope = std::exp(-0.5 * std::pow(spec.sigma() * x, 2));
  const double beat = std::max(0.0, 1.0 + a * a + 2.0 * a * std::cos(spec.peak_separation() * x));
  return std::min(1.0, envelope * std::sqrt(beat) / (1.0 + a));
}

std::vector<double> magnitude_series(const DoublePeakSpectrum& spec, const TimeGrid& grid) {
  std::vector<double> m(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) m[i] = magnitude(spec, grid[i]);
  return m;
}

double sample_frequency(const DoublePeakSpectrum& spec, CounterRng& rng) {
  const double center = rng.uniform() <= spec.weight1() ? spec.omega1() : spec.omega2();
  return center + spec.sigma() * rng.normal();
}

Complex monte_carlo_characteristic(const DoublePeakSpectrum& spec, double tau, std::size_t n_samples,
                                   std::uint64_t seed, std::size_t partitions) {
  check_tau(tau);
  if (n_samples < 1) throw std::invalid_argument("monte_carlo_characteristic: n_samples must be >= 1");
  if (partitions < 1 || partitions > n_samples)
    throw std::invalid_argument("monte_carlo_characteristic: partitions must lie in [1, n_samples]");

  const double x = spec.delta_n() * spec.time_scale() * tau;
  double re = 0.0;
  double im = 0.0;
  for (std::size_t part = 0; part < partitions; ++part) {
    const std::size_t begin = n_samples * part / partitions;
    const std::size_t end = n_samples * (part + 1) / partitions;
    CounterRng rng(derive_seed(seed, part));
    double part_re = 0.0;
    double part_im = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const double phase = sample_frequency(spec, rng) * x;
      part_re += std::cos(phase);
      part_im += std::sin(phase);
    }
    re += part_re;
    im += part_im;
  }
  const double n = static_cast<double>(n_samples);
  return {re / n, im / n};
}

}  // namespace qdeph
