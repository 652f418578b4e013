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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdeph/config.hpp"
#include "qdeph/measures.hpp"
#include "qdeph/sdc.hpp"

namespace qdeph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class MarkovianSide { kNone, kA, kB };

nlohmann::json to_json(const MeasureReport& report);
nlohmann::json to_json(const CombinationVerdict& verdict);
nlohmann::json to_json(const SpectrumParams& spectrum);

/// Keys of a serialized MeasureReport, in emission order.
const std::vector<std::string>& measure_report_keys();

/// Decimal text with 17 significant digits.
std::string format_double(double v);

/// Writes `header` and the columns row by row, '\n' line endings.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<const std::vector<double>*>& columns);

/// Each command writes fixed file names into config.output.path (created if
/// missing) and a one-line summary per artifact to `out`.
int cmd_capacity(const RunConfig& config, std::ostream& out);
int cmd_table1(const RunConfig& config, std::ostream& out);
/// Without `side`, preset d writes both orientations and presets a-c use the
/// configured spectra. kA / kB put the Markovian amplitude ratio on that
/// side and the non-Markovian one on the other.
int cmd_sdc(const RunConfig& config, Preset preset, std::optional<MarkovianSide> side, std::ostream& out);
int cmd_measures(const RunConfig& config, std::ostream& out);
int cmd_oracle(const RunConfig& config, std::size_t n_samples, std::ostream& out);

/// Full command-line entry point; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdeph
