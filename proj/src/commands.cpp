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

#include "qdeph/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qdeph/channels.hpp"

namespace qdeph {

using nlohmann::json;
namespace fs = std::filesystem;

json to_json(const MeasureReport& r) {
  json intervals = json::array();
  for (const auto& iv : r.increase_intervals) intervals.push_back({{"t_start", iv.start}, {"t_end", iv.end}});
  return json{{"bcm_detected", r.bcm_detected},
              {"bcm_increase_sum", r.bcm_increase_sum},
              {"bcm_literal_integral", r.bcm_literal_integral},
              {"blp_bound_a", r.blp_bound_a},
              {"blp_bound_b", r.blp_bound_b},
              {"blp_detected", r.blp_detected},
              {"increase_intervals", intervals}};
}

json to_json(const CombinationVerdict& v) {
  return json{{"local_a", to_string(v.local_a)},
              {"local_b", to_string(v.local_b)},
              {"global_bcm", to_string(v.global_bcm)},
              {"blp_detected", v.blp_detected}};
}

json to_json(const SpectrumParams& s) {
  return json{{"omega1", s.omega1},       {"omega2", s.omega2},   {"sigma", s.sigma},
              {"amp_ratio", s.amp_ratio}, {"delta_n", s.delta_n}, {"time_scale", s.time_scale}};
}

const std::vector<std::string>& measure_report_keys() {
  static const std::vector<std::string> keys{"bcm_detected",  "bcm_increase_sum", "bcm_literal_integral",
                                             "blp_bound_a",   "blp_bound_b",      "blp_detected",
                                             "increase_intervals"};
  return keys;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

fs::path output_dir(const RunConfig& config) {
  fs::path dir(config.output.path.empty() ? "." : config.output.path);
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot write '" + path.string() + "'");
  f << text;
  if (!f) throw std::ios_base::failure("write failed for '" + path.string() + "'");
}

void write_json(const fs::path& path, const json& doc) { write_text(path, doc.dump(2) + "\n"); }

const char* extension(const RunConfig& c) { return c.output.format == OutputFormat::kJson ? ".json" : ".csv"; }

void write_series(const RunConfig& config, const fs::path& stem, const std::vector<std::string>& header,
                  const std::vector<const std::vector<double>*>& columns, json meta) {
  const fs::path path = fs::path(stem).concat(extension(config));
  if (config.output.format == OutputFormat::kCsv) {
    write_csv(path.string(), header, columns);
    return;
  }
  for (std::size_t c = 0; c < header.size(); ++c) meta[header[c]] = *columns[c];
  write_json(path, meta);
}

}  // namespace

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<const std::vector<double>*>& columns) {
  if (header.size() != columns.size()) throw std::invalid_argument("write_csv: header/column count mismatch");
  std::string text;
  for (std::size_t c = 0; c < header.size(); ++c) text += (c ? "," : "") + header[c];
  text += '\n';
  const std::size_t rows = columns.empty() ? 0 : columns.front()->size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) text += ',';
      text += format_double((*columns[c])[r]);
    }
    text += '\n';
  }
  write_text(path, text);
}

int cmd_capacity(const RunConfig& config, std::ostream& out) {
  const fs::path dir = output_dir(config);
  for (const auto& row : table1_rows()) {
    const DephasingPair pair = table1_pair(config, row);
    const CapacityTrace trace = capacity_trace(pair, config.grid_for(pair));
    const std::vector<double> t = trace.grid.samples();
    const std::string stem = "capacity_combination_" + std::to_string(row.combination);
    write_series(config, dir / stem, {"t", "q_a", "q_b", "q_ab"}, {&t, &trace.q_a, &trace.q_b, &trace.q_ab},
                 json{{"combination", row.combination}});
    out << stem << extension(config) << ": " << t.size() << " samples\n";
  }
  return kExitOk;
}

int cmd_table1(const RunConfig& config, std::ostream& out) {
  const fs::path dir = output_dir(config);
  json rows = json::array();
  std::vector<std::vector<double>> csv_cols(9);
  bool all_pass = true;
  for (const auto& row : table1_rows()) {
    const DephasingPair pair = table1_pair(config, row);
    const CombinationVerdict got = classify_combination(pair, config.grid_for(pair));
    const bool pass = got == row.expected;
    all_pass = all_pass && pass;
    rows.push_back({{"combination", row.combination},
                    {"a_amp", row.a_amp},
                    {"b_amp", row.b_amp},
                    {"b_time_scale", row.b_time_scale},
                    {"expected", to_json(row.expected)},
                    {"observed", to_json(got)},
                    {"pass", pass}});
    auto nm = [](Dynamics d) { return d == Dynamics::kNonMarkovian ? 1.0 : 0.0; };
    const std::array<double, 9> vals{static_cast<double>(row.combination), row.a_amp, row.b_amp, row.b_time_scale,
                                     nm(got.local_a), nm(got.local_b), nm(got.global_bcm),
                                     got.blp_detected ? 1.0 : 0.0, pass ? 1.0 : 0.0};
    for (std::size_t c = 0; c < vals.size(); ++c) csv_cols[c].push_back(vals[c]);
    out << "combination " << row.combination << ": A=" << to_string(got.local_a) << " B=" << to_string(got.local_b)
        << " AB=" << to_string(got.global_bcm) << " blp=" << (got.blp_detected ? "true" : "false") << " -> "
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  if (config.output.format == OutputFormat::kJson) {
    write_json(dir / "table1.json",
               json{{"parameter_set", to_string(config.parameter_set)}, {"rows", rows}, {"all_pass", all_pass}});
  } else {
    std::vector<const std::vector<double>*> cols;
    for (const auto& c : csv_cols) cols.push_back(&c);
    write_csv((dir / "table1.csv").string(),
              {"combination", "a_amp", "b_amp", "b_time_scale", "local_a_non_markovian", "local_b_non_markovian",
               "global_bcm_non_markovian", "blp_detected", "pass"},
              cols);
  }
  out << "table1 (" << to_string(config.parameter_set) << "): " << (all_pass ? "all rows match" : "mismatch") << '\n';
  if (config.parameter_set == ParameterSet::kLiteral) return kExitOk;
  return all_pass ? kExitOk : kExitFailure;
}

int cmd_sdc(const RunConfig& config, Preset preset, std::optional<MarkovianSide> side, std::ostream& out) {
  const fs::path dir = output_dir(config);
  auto emit = [&](const DoublePeakSpectrum& a, const DoublePeakSpectrum& b, const std::string& stem) {
    const SdcCurve curve = simulate_configuration(preset, a, b, default_grid(a, b, config.grid.n_points,
                                                                              config.grid.t_max_factor));
    const std::vector<double> t = curve.grid.samples();
    write_series(config, dir / stem, {"t", "h_mag", "k_mag", "mutual_info"},
                 {&t, &curve.h_mag, &curve.k_mag, &curve.mutual_info},
                 json{{"preset", preset_name(preset)}, {"spectrum_a", to_json(a.params())},
                      {"spectrum_b", to_json(b.params())}});
    out << stem << extension(config) << ": I(0)=" << format_double(curve.mutual_info.front())
        << " tail mean=" << format_double(tail_mean(curve.mutual_info)) << '\n';
  };
  auto oriented = [&](MarkovianSide s) {
    const double a_amp = s == MarkovianSide::kA ? kMarkovianAmpRatio : kNonMarkovianAmpRatio;
    const double b_amp = s == MarkovianSide::kA ? kNonMarkovianAmpRatio : kMarkovianAmpRatio;
    return std::pair{config.side_a().with_amp_ratio(a_amp), config.side_b().with_amp_ratio(b_amp)};
  };

  const std::string base = "sdc_" + preset_name(preset);
  if (!side && preset == Preset::kD) {
    for (auto s : {MarkovianSide::kA, MarkovianSide::kB}) {
      auto [a, b] = oriented(s);
      emit(a, b, base + (s == MarkovianSide::kA ? "_markovian_a" : "_markovian_b"));
    }
  } else if (!side || *side == MarkovianSide::kNone) {
    emit(config.side_a(), config.side_b(), base);
  } else {
    auto [a, b] = oriented(*side);
    emit(a, b, base + (*side == MarkovianSide::kA ? "_markovian_a" : "_markovian_b"));
  }
  return kExitOk;
}

int cmd_measures(const RunConfig& config, std::ostream& out) {
  const fs::path dir = output_dir(config);
  const DephasingPair pair = config.pair();
  const TimeGrid grid = config.grid_for(pair);
  const MeasureReport report = measure_report(pair, grid);
  const CombinationVerdict verdict = classify_combination(pair, grid);
  const TimeGrid search_grid(grid.t_max(), config.search.n_points);
  const BlpSearchResult search = blp_search(pair, search_grid, config.search.restarts, config.seeds.blp);

  const json doc{{"parameter_set", to_string(config.parameter_set)},
                 {"spectrum_a", to_json(pair.a.params())},
                 {"spectrum_b", to_json(pair.b.params())},
                 {"grid", {{"t_max", grid.t_max()}, {"n_points", grid.size()}}},
                 {"measure_report", to_json(report)},
                 {"combination_verdict", to_json(verdict)},
                 {"blp_search",
                  {{"best_value", search.best_value},
                   {"best_pair", search.best_pair},
                   {"restarts", config.search.restarts},
                   {"n_points", config.search.n_points},
                   {"seed", config.seeds.blp}}}};
  write_json(dir / "measures.json", doc);
  out << "measures.json: bcm_detected=" << (report.bcm_detected ? "true" : "false")
      << " blp_detected=" << (report.blp_detected ? "true" : "false")
      << " blp_search=" << format_double(search.best_value) << '\n';
  return kExitOk;
}

int cmd_oracle(const RunConfig& config, std::size_t n_samples, std::ostream& out) {
  if (n_samples < 1) throw std::invalid_argument("oracle: --samples must be >= 1");
  const fs::path dir = output_dir(config);
  const DephasingPair pair = config.pair();
  const TimeGrid grid = config.grid_for(pair);
  const NoiseSchedule sched = NoiseSchedule::from_preset(Preset::kC);
  const double budget = 5.0 / std::sqrt(static_cast<double>(n_samples));
  constexpr std::size_t kPoints = 20;

  std::vector<double> t(kPoints), char_dev(kPoints), dil_dev(kPoints), budget_col(kPoints, budget), ok(kPoints);
  std::size_t passed = 0;
  for (std::size_t j = 0; j < kPoints; ++j) {
    t[j] = 0.5 * grid.t_max() * static_cast<double>(j) / static_cast<double>(kPoints - 1);
    const std::uint64_t seed = derive_seed(config.seeds.mc, j);
    char_dev[j] = std::abs(monte_carlo_characteristic(pair.a, t[j], n_samples, seed) - characteristic_fn(pair.a, t[j]));
    const Coherences coh = effective_coherences(pair.a, pair.b, sched, t[j]);
    const auto expected = encoded_states(coh.h_mag, coh.k_mag);
    double worst = 0.0;
    for (int k : {0, 1}) {
      const Matrix4 est = dilation_oracle(pair.a, pair.b, sched, EncodingOp(k), t[j], n_samples, derive_seed(seed, 100 + k));
      worst = std::max(worst, est.max_abs_diff(expected[static_cast<std::size_t>(k)]));
    }
    dil_dev[j] = worst;
    ok[j] = (char_dev[j] <= budget && dil_dev[j] <= budget) ? 1.0 : 0.0;
    passed += ok[j] > 0.0 ? 1 : 0;
  }
  write_series(config, dir / "oracle", {"t", "characteristic_deviation", "dilation_deviation", "budget", "within_budget"},
               {&t, &char_dev, &dil_dev, &budget_col, &ok}, json{{"n_samples", n_samples}});
  const double max_dev = std::max(*std::max_element(char_dev.begin(), char_dev.end()),
                                  *std::max_element(dil_dev.begin(), dil_dev.end()));
  out << "oracle: " << passed << "/" << kPoints << " points within 5/sqrt(n) = " << format_double(budget)
      << ", max deviation " << format_double(max_dev) << '\n';
  return passed >= 19 ? kExitOk : kExitFailure;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit dephasing: capacity, non-Markovianity measures and noisy superdense coding", "qdeph"};
  std::string command;
  std::string config_path;
  std::string preset_str;
  std::string out_path;
  std::string format;
  std::string side_str;
  std::size_t samples = 1000000;
  app.add_option("command", command, "capacity | table1 | sdc | measures | oracle")
      ->required()
      ->check(CLI::IsMember({"capacity", "table1", "sdc", "measures", "oracle"}));
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--preset", preset_str, "noise configuration for sdc")->check(CLI::IsMember({"a", "b", "c", "d"}));
  app.add_option("--out", out_path, "output directory (overrides output.path)");
  app.add_option("--samples", samples, "Monte-Carlo samples for oracle");
  app.add_option("--format", format, "csv or json (overrides output.format)")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--markovian-side", side_str, "sdc: side carrying the Markovian spectrum")
      ->check(CLI::IsMember({"a", "b", "none"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qdeph: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    RunConfig config = config_path.empty() ? default_config() : load_config(config_path);
    if (!out_path.empty()) config.output.path = out_path;
    if (!format.empty()) config.output.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;

    if (command == "capacity") return cmd_capacity(config, out);
    if (command == "table1") return cmd_table1(config, out);
    if (command == "measures") return cmd_measures(config, out);
    if (command == "oracle") return cmd_oracle(config, samples, out);
    if (preset_str.empty()) {
      err << "qdeph: sdc requires --preset a|b|c|d\n";
      return kExitUsage;
    }
    std::optional<MarkovianSide> side;
    if (side_str == "a") side = MarkovianSide::kA;
    if (side_str == "b") side = MarkovianSide::kB;
    if (side_str == "none") side = MarkovianSide::kNone;
    return cmd_sdc(config, parse_preset(preset_str), side, out);
  } catch (const ConfigError& e) {
    err << "qdeph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "qdeph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    err << "qdeph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qdeph: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace qdeph
