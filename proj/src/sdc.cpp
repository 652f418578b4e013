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

#include "qdeph/sdc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qdeph/rng.hpp"

namespace qdeph {

Preset parse_preset(std::string_view name) {
  if (name == "a") return Preset::kA;
  if (name == "b") return Preset::kB;
  if (name == "c") return Preset::kC;
  if (name == "d") return Preset::kD;
  throw std::invalid_argument("unknown noise preset '" + std::string(name) + "' (expected a, b, c or d)");
}

std::string preset_name(Preset p) {
  switch (p) {
    case Preset::kA: return "a";
    case Preset::kB: return "b";
    case Preset::kC: return "c";
    case Preset::kD: return "d";
    case Preset::kCustom: break;
  }
  return "custom";
}

NoiseSchedule NoiseSchedule::from_preset(Preset p) {
  switch (p) {
    case Preset::kA: return {0.0, 0.0, 1.0, 0.0, p};
    case Preset::kB: return {0.5, 0.0, 0.5, 0.0, p};
    case Preset::kC:
    case Preset::kD: return {0.5, 0.5, 0.5, 0.5, p};
    case Preset::kCustom: break;
  }
  throw std::invalid_argument("NoiseSchedule::from_preset: custom schedules need explicit fractions");
}

NoiseSchedule NoiseSchedule::custom(double f1, double f2, double f3, double f4) {
  for (double f : {f1, f2, f3, f4}) {
    if (!std::isfinite(f) || f < 0.0) throw std::invalid_argument("NoiseSchedule: fractions must be finite and >= 0");
  }
  return {f1, f2, f3, f4, Preset::kCustom};
}

EncodingOp::EncodingOp(int k) : k_(k) {
  if (k < 0 || k > 3) throw std::invalid_argument("EncodingOp: message index must be 0..3");
}

Coherences effective_coherences(const DoublePeakSpectrum& spec_a, const DoublePeakSpectrum& spec_b,
                                const NoiseSchedule& sched, double t) {
  if (!(t >= 0.0)) throw std::domain_error("effective_coherences: negative time");
  const double bob = magnitude(spec_b, (sched.f2 + sched.f4) * t);
  return {magnitude(spec_a, std::abs(sched.f3 - sched.f1) * t) * bob, magnitude(spec_a, (sched.f1 + sched.f3) * t) * bob};
}

std::array<Matrix4, 4> bell_projectors() { return encoded_states(1.0, 1.0); }

std::array<Matrix4, 4> encoded_states(double h_mag, double k_mag) {
  for (double m : {h_mag, k_mag}) {
    if (!(m >= 0.0 && m <= 1.0)) {
      std::ostringstream msg;
      msg << "encoded_states: coherence magnitude " << m << " outside [0, 1]";
      throw std::domain_error(msg.str());
    }
  }
  // HH = 0, HV = 1, VH = 2, VV = 3.
  auto state = [](std::size_t i, std::size_t j, double coherence) {
    Matrix4::Entries e{};
    e[i * 4 + i] = 0.5;
    e[j * 4 + j] = 0.5;
    e[i * 4 + j] = 0.5 * coherence;
    e[j * 4 + i] = 0.5 * coherence;
    return Matrix4::trusted(e);
  };
  return {state(0, 3, k_mag), state(1, 2, h_mag), state(1, 2, -h_mag), state(0, 3, -k_mag)};
}

ChannelMatrix conditional_probabilities(double h_mag, double k_mag) {
  for (double m : {h_mag, k_mag}) {
    if (!(m >= 0.0 && m <= 1.0)) throw std::domain_error("conditional_probabilities: magnitude outside [0, 1]");
  }
  const double kp = 0.5 * (1.0 + k_mag);
  const double km = 0.5 * (1.0 - k_mag);
  const double hp = 0.5 * (1.0 + h_mag);
  const double hm = 0.5 * (1.0 - h_mag);
  return {{{kp, 0.0, 0.0, km}, {0.0, hp, hm, 0.0}, {0.0, hm, hp, 0.0}, {km, 0.0, 0.0, kp}}};
}

double mutual_information(const ChannelMatrix& p) {
  constexpr double kTol = 1e-10;
  for (std::size_t x = 0; x < 4; ++x) {
    double row = 0.0;
    for (double v : p[x]) {
      if (!(v >= -kTol && v <= 1.0 + kTol)) throw ValidationError("mutual_information: entry outside [0, 1]");
      row += v;
    }
    if (std::abs(row - 1.0) > kTol) {
      std::ostringstream msg;
      msg << "mutual_information: row " << x << " sums to " << row;
      throw ValidationError(msg.str());
    }
  }
  std::array<double, 4> py{};
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) py[y] += 0.25 * p[x][y];

  double info = 0.0;
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) {
      if (p[x][y] <= 0.0) continue;
      info += 0.25 * p[x][y] * std::log2(p[x][y] / py[y]);
    }
  }
  return info;
}

double mutual_information_closed_form(double h_mag, double k_mag) {
  return 2.0 - 0.5 * (binary_entropy(0.5 * (1.0 + k_mag)) + binary_entropy(0.5 * (1.0 + h_mag)));
}

namespace {

using State4 = std::array<Complex, 4>;

// U_j over duration tau: |H> picks up exp(i dn s w tau), |V> is the reference.
void apply_noise(State4& psi, double phase_a, double phase_b) {
  const Complex ua = std::polar(1.0, phase_a);
  const Complex ub = std::polar(1.0, phase_b);
  psi[0] *= ua * ub;  // HH
  psi[1] *= ua;       // HV
  psi[2] *= ub;       // VH
}

void apply_encoding(State4& psi, int k) {
  const Complex i1{0.0, 1.0};
  for (std::size_t b = 0; b < 2; ++b) {
    const Complex h = psi[b];
    const Complex v = psi[2 + b];
    switch (k) {
      case 1:
        psi[b] = v;
        psi[2 + b] = h;
        break;
      case 2:
        psi[b] = -i1 * v;
        psi[2 + b] = i1 * h;
        break;
      case 3:
        psi[2 + b] = -v;
        break;
      default:
        break;
    }
  }
}

}  // namespace

Matrix4 dilation_oracle(const DoublePeakSpectrum& spec_a, const DoublePeakSpectrum& spec_b, const NoiseSchedule& sched,
                        EncodingOp op, double t, std::size_t n_samples, std::uint64_t seed, std::size_t partitions) {
  if (!(t >= 0.0)) throw std::domain_error("dilation_oracle: negative time");
  if (n_samples < 1) throw std::invalid_argument("dilation_oracle: n_samples must be >= 1");
  if (partitions < 1 || partitions > n_samples)
    throw std::invalid_argument("dilation_oracle: partitions must lie in [1, n_samples]");

  const double rate_a = spec_a.delta_n() * spec_a.time_scale() * t;
  const double rate_b = spec_b.delta_n() * spec_b.time_scale() * t;
  Matrix4::Entries sum{};
  for (std::size_t part = 0; part < partitions; ++part) {
    const std::size_t begin = n_samples * part / partitions;
    const std::size_t end = n_samples * (part + 1) / partitions;
    CounterRng rng(derive_seed(seed, part));
    for (std::size_t s = begin; s < end; ++s) {
      const double wa = sample_frequency(spec_a, rng);
      const double wb = sample_frequency(spec_b, rng);
      // Unnormalized |HH> + |VV>; the 1/2 is applied once at the end so the
      // noiseless average is exact.
      State4 psi{1.0, 0.0, 0.0, 1.0};
      apply_noise(psi, wa * rate_a * sched.f1, wb * rate_b * sched.f2);
      apply_encoding(psi, op.k());
      apply_noise(psi, wa * rate_a * sched.f3, wb * rate_b * sched.f4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) sum[i * 4 + j] += psi[i] * std::conj(psi[j]);
    }
  }

  const Matrix4 ideal = bell_projectors()[static_cast<std::size_t>(op.k())];
  const double n = static_cast<double>(n_samples);
  Matrix4::Entries out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Complex mean = 0.5 * (sum[i * 4 + j] / n);
      if (i == j) {
        out[i * 4 + j] = mean.real();
      } else if (const double ref = ideal(i, j).real(); ref != 0.0) {
        out[i * 4 + j] = std::copysign(std::abs(mean), ref);
      } else {
        out[i * 4 + j] = mean;
      }
    }
  }
  return Matrix4::trusted(out);
}

SdcCurve simulate_schedule(const NoiseSchedule& sched, const DoublePeakSpectrum& spec_a,
                           const DoublePeakSpectrum& spec_b, const TimeGrid& grid) {
  SdcCurve curve{grid, {}, {}, {}};
  curve.h_mag.resize(grid.size());
  curve.k_mag.resize(grid.size());
  curve.mutual_info.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Coherences c = effective_coherences(spec_a, spec_b, sched, grid[i]);
    curve.h_mag[i] = c.h_mag;
    curve.k_mag[i] = c.k_mag;
    curve.mutual_info[i] = mutual_information_closed_form(c.h_mag, c.k_mag);
  }
  return curve;
}

SdcCurve simulate_configuration(Preset preset, const DoublePeakSpectrum& spec_a, const DoublePeakSpectrum& spec_b,
                                const TimeGrid& grid) {
  if (preset == Preset::kD && spec_a.amp_ratio() == spec_b.amp_ratio())
    throw std::invalid_argument("preset d needs different amplitude ratios on the two sides");
  return simulate_schedule(NoiseSchedule::from_preset(preset), spec_a, spec_b, grid);
}

double tail_mean(const std::vector<double>& series, double fraction) {
  if (series.empty()) throw std::invalid_argument("tail_mean: empty series");
  const auto count = std::max<std::size_t>(1, static_cast<std::size_t>(static_cast<double>(series.size()) * fraction));
  double s = 0.0;
  for (std::size_t i = series.size() - count; i < series.size(); ++i) s += series[i];
  return s / static_cast<double>(count);
}

}  // namespace qdeph
