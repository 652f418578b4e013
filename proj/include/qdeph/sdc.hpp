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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qdeph/numerics.hpp"
#include "qdeph/spectra.hpp"

namespace qdeph {

enum class Preset { kA, kB, kC, kD, kCustom };

/// Parses "a".."d"; throws std::invalid_argument otherwise.
Preset parse_preset(std::string_view name);
std::string preset_name(Preset p);

/// Durations of the four local noise periods as multiples of the scan time
/// t: Alice before encoding (f1), Bob (f2), Alice after encoding (f3), Bob (f4).
struct NoiseSchedule {
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
  double f4 = 0.0;
  Preset preset = Preset::kCustom;

  /// Throws std::invalid_argument for kCustom.
  static NoiseSchedule from_preset(Preset p);
  /// Validates finiteness and non-negativity.
  static NoiseSchedule custom(double f1, double f2, double f3, double f4);
};

/// Alice's encoding for message k in {0, 1, 2, 3}: identity, X, Y, Z up to
/// the phase conventions that realify the coherences.
class EncodingOp {
 public:
  explicit EncodingOp(int k);
  int k() const { return k_; }
  bool flips_polarization() const { return k_ == 1 || k_ == 2; }
  int coherence_sign() const { return k_ <= 1 ? 1 : -1; }

 private:
  int k_;
};

struct Coherences {
  double h_mag = 1.0;  ///< coherence of the polarization-flipped messages 1, 2
  double k_mag = 1.0;  ///< coherence of messages 0, 3
};

/// Magnitudes of the surviving coherences after the schedule at scan time t.
/// The flip between Alice's two periods reverses her accumulated phase, so
/// messages 1, 2 see Alice's noise for |f3 - f1| t only.
Coherences effective_coherences(const DoublePeakSpectrum& spec_a, const DoublePeakSpectrum& spec_b,
                                const NoiseSchedule& sched, double t);

/// Bell projectors in message order Phi+, Psi+, Psi-, Phi-.
std::array<Matrix4, 4> bell_projectors();

/// Realified reduced states rho_0..rho_3 Bob holds before measuring.
/// Throws std::domain_error if h or k lies outside [0, 1].
std::array<Matrix4, 4> encoded_states(double h_mag, double k_mag);

using ChannelMatrix = std::array<std::array<double, 4>, 4>;

/// P[x][y] = p(y | x) = tr(E_y rho_x) in closed form.
ChannelMatrix conditional_probabilities(double h_mag, double k_mag);

/// I(X:Y) in bits for uniform messages p(x) = 1/4 by the generic double sum.
/// Throws ValidationError if a row is not a probability vector within 1e-10.
double mutual_information(const ChannelMatrix& p);

/// 2 - (H2((1 + k) / 2) + H2((1 + h) / 2)) / 2.
double mutual_information_closed_form(double h_mag, double k_mag);

/// Monte-Carlo purification check: samples (w_A, w_B) from the product
/// intensity, evolves |Phi+> through noise, encoding and noise exactly, and
/// averages the projectors. Coherences that are non-zero in the noiseless
/// Bell state are reported as (noiseless sign) * |average|.
Matrix4 dilation_oracle(const DoublePeakSpectrum& spec_a, const DoublePeakSpectrum& spec_b, const NoiseSchedule& sched,
                        EncodingOp op, double t, std::size_t n_samples, std::uint64_t seed,
                        std::size_t partitions = 1);

struct SdcCurve {
  TimeGrid grid;
  std::vector<double> h_mag;
  std::vector<double> k_mag;
  std::vector<double> mutual_info;
};

/// Mutual information over the grid for a preset schedule. Preset d needs
/// spectra with different amplitude ratios.
SdcCurve simulate_configuration(Preset preset, const DoublePeakSpectrum& spec_a, const DoublePeakSpectrum& spec_b,
                                const TimeGrid& grid);

SdcCurve simulate_schedule(const NoiseSchedule& sched, const DoublePeakSpectrum& spec_a,
                           const DoublePeakSpectrum& spec_b, const TimeGrid& grid);

/// Mean of the last `fraction` of the samples (at least one).
double tail_mean(const std::vector<double>& series, double fraction = 0.05);

}  // namespace qdeph
