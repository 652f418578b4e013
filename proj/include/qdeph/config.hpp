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
#include <cstddef>
#include <cstdint>
#include <string>

#include "qdeph/measures.hpp"
#include "qdeph/spectra.hpp"

namespace qdeph {

/// Malformed or inconsistent configuration document.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParameterSet { kLiteral, kCalibrated, kCustom };
enum class OutputFormat { kCsv, kJson };

const char* to_string(ParameterSet p);

struct GridConfig {
  double t_max_factor = kDefaultWindowFactor;
  std::size_t n_points = kDefaultGridPoints;
};

struct SeedConfig {
  std::uint64_t mc = 12345;
  std::uint64_t blp = 2026;
};

struct OutputConfig {
  OutputFormat format = OutputFormat::kCsv;
  std::string path = ".";
};

struct SearchConfig {
  int restarts = 2;
  std::size_t n_points = 256;
};

struct RunConfig {
  ParameterSet parameter_set = ParameterSet::kCalibrated;
  SpectrumParams spectrum_a;
  SpectrumParams spectrum_b;
  GridConfig grid;
  SeedConfig seeds;
  OutputConfig output;
  SearchConfig search;

  DoublePeakSpectrum side_a() const { return DoublePeakSpectrum(spectrum_a); }
  DoublePeakSpectrum side_b() const { return DoublePeakSpectrum(spectrum_b); }
  DephasingPair pair() const { return {side_a(), side_b()}; }
  TimeGrid grid_for(const DephasingPair& p) const {
    return default_grid(p.a, p.b, grid.n_points, grid.t_max_factor);
  }
};

inline constexpr double kPeakWidth = 1.8e12;             // rad/s
inline constexpr double kLiteralPeakSeparation = 1.6e16;  // rad/s
/// Width-to-separation ratio of the calibrated set.
inline constexpr double kCalibratedWidthRatio = 0.125;
inline constexpr double kMarkovianAmpRatio = 0.004;
inline constexpr double kNonMarkovianAmpRatio = 0.390;

/// Built-in spectrum for one side; Alice defaults to the non-Markovian and
/// Bob to the Markovian amplitude ratio.
SpectrumParams builtin_spectrum(ParameterSet set, bool alice_side);

/// Defaults for a parameter set (custom starts from calibrated).
RunConfig default_config(ParameterSet set = ParameterSet::kCalibrated);

/// Parses a JSON configuration document. Spectrum fields present in the
/// document override the chosen base set field by field. Unknown keys,
/// wrong types and invariant violations raise ConfigError.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

struct Table1Row {
  int combination;
  double a_amp;
  double b_amp;
  double b_time_scale;
  CombinationVerdict expected;
};

/// The five reference combinations with their expected classes.
const std::array<Table1Row, 5>& table1_rows();

/// Config spectra with the row's amplitude ratios and Bob's time scale.
DephasingPair table1_pair(const RunConfig& config, const Table1Row& row);

}  // namespace qdeph
