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

#include "qdeph/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qdeph {

using nlohmann::json;

const char* to_string(ParameterSet p) {
  switch (p) {
    case ParameterSet::kLiteral: return "literal";
    case ParameterSet::kCalibrated: return "calibrated";
    case ParameterSet::kCustom: break;
  }
  return "custom";
}

SpectrumParams builtin_spectrum(ParameterSet set, bool alice_side) {
  SpectrumParams p;
  p.omega1 = 0.0;
  p.omega2 = set == ParameterSet::kLiteral ? kLiteralPeakSeparation : kPeakWidth / kCalibratedWidthRatio;
  p.sigma = kPeakWidth;
  p.amp_ratio = alice_side ? kNonMarkovianAmpRatio : kMarkovianAmpRatio;
  p.delta_n = 1.0;
  p.time_scale = 1.0;
  return p;
}

RunConfig default_config(ParameterSet set) {
  RunConfig c;
  c.parameter_set = set;
  c.spectrum_a = builtin_spectrum(set, true);
  c.spectrum_b = builtin_spectrum(set, false);
  return c;
}

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected a JSON object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

double get_number(const json& obj, const char* key, double fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
  return v.get<double>();
}

std::uint64_t get_unsigned(const json& obj, const char* key, std::uint64_t fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_unsigned()) throw ConfigError(where + "." + key + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

SpectrumParams parse_spectrum(const json& obj, SpectrumParams base, const std::string& where) {
  reject_unknown(obj, {"omega1", "omega2", "sigma", "amp_ratio", "delta_n", "time_scale"}, where);
  base.omega1 = get_number(obj, "omega1", base.omega1, where);
  base.omega2 = get_number(obj, "omega2", base.omega2, where);
  base.sigma = get_number(obj, "sigma", base.sigma, where);
  base.amp_ratio = get_number(obj, "amp_ratio", base.amp_ratio, where);
  base.delta_n = get_number(obj, "delta_n", base.delta_n, where);
  base.time_scale = get_number(obj, "time_scale", base.time_scale, where);
  try {
    (void)DoublePeakSpectrum(base);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return base;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(doc, {"parameter_set", "spectra", "grid", "seeds", "output", "search"}, "config");

  ParameterSet set = ParameterSet::kCalibrated;
  if (doc.contains("parameter_set")) {
    const auto& v = doc.at("parameter_set");
    const std::string name = v.is_string() ? v.get<std::string>() : "";
    if (name == "literal") {
      set = ParameterSet::kLiteral;
    } else if (name == "calibrated") {
      set = ParameterSet::kCalibrated;
    } else if (name == "custom") {
      set = ParameterSet::kCustom;
    } else {
      throw ConfigError("config.parameter_set: expected literal, calibrated or custom");
    }
  }
  RunConfig c = default_config(set);

  if (doc.contains("spectra")) {
    const auto& s = doc.at("spectra");
    reject_unknown(s, {"a", "b"}, "config.spectra");
    if (s.contains("a")) c.spectrum_a = parse_spectrum(s.at("a"), c.spectrum_a, "config.spectra.a");
    if (s.contains("b")) c.spectrum_b = parse_spectrum(s.at("b"), c.spectrum_b, "config.spectra.b");
  }
  if (doc.contains("grid")) {
    const auto& g = doc.at("grid");
    reject_unknown(g, {"t_max_factor", "n_points"}, "config.grid");
    c.grid.t_max_factor = get_number(g, "t_max_factor", c.grid.t_max_factor, "config.grid");
    c.grid.n_points = get_unsigned(g, "n_points", c.grid.n_points, "config.grid");
  }
  if (!(c.grid.t_max_factor > 0.0)) throw ConfigError("config.grid.t_max_factor must be > 0");
  if (c.grid.n_points < 2) throw ConfigError("config.grid.n_points must be >= 2");

  if (doc.contains("seeds")) {
    const auto& s = doc.at("seeds");
    reject_unknown(s, {"mc", "blp"}, "config.seeds");
    c.seeds.mc = get_unsigned(s, "mc", c.seeds.mc, "config.seeds");
    c.seeds.blp = get_unsigned(s, "blp", c.seeds.blp, "config.seeds");
  }
  if (doc.contains("output")) {
    const auto& o = doc.at("output");
    reject_unknown(o, {"format", "path"}, "config.output");
    if (o.contains("format")) {
      const auto& f = o.at("format");
      const std::string name = f.is_string() ? f.get<std::string>() : "";
      if (name == "csv") {
        c.output.format = OutputFormat::kCsv;
      } else if (name == "json") {
        c.output.format = OutputFormat::kJson;
      } else {
        throw ConfigError("config.output.format: expected csv or json");
      }
    }
    if (o.contains("path")) {
      if (!o.at("path").is_string()) throw ConfigError("config.output.path: expected a string");
      c.output.path = o.at("path").get<std::string>();
    }
  }
  if (doc.contains("search")) {
    const auto& s = doc.at("search");
    reject_unknown(s, {"restarts", "n_points"}, "config.search");
    c.search.restarts = static_cast<int>(get_unsigned(s, "restarts", static_cast<std::uint64_t>(c.search.restarts), "config.search"));
    c.search.n_points = get_unsigned(s, "n_points", c.search.n_points, "config.search");
  }
  if (c.search.restarts < 1) throw ConfigError("config.search.restarts must be >= 1");
  if (c.search.n_points < 2) throw ConfigError("config.search.n_points must be >= 2");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

const std::array<Table1Row, 5>& table1_rows() {
  constexpr auto M = Dynamics::kMarkovian;
  constexpr auto N = Dynamics::kNonMarkovian;
  static const std::array<Table1Row, 5> rows{{
      {1, 0.004, 0.026, 1.0, {M, M, M, false}},
      {2, 0.377, 0.004, 1.0, {N, M, N, true}},
      {3, 0.091, 0.004, 1.0, {N, M, M, true}},
      {4, 0.377, 0.145, 1.0, {N, N, N, true}},
      {5, 0.091, 0.091, 0.5, {N, N, M, true}},
  }};
  return rows;
}

DephasingPair table1_pair(const RunConfig& config, const Table1Row& row) {
  SpectrumParams a = config.spectrum_a;
  SpectrumParams b = config.spectrum_b;
  a.amp_ratio = row.a_amp;
  b.amp_ratio = row.b_amp;
  b.time_scale = row.b_time_scale;
  return {DoublePeakSpectrum(a), DoublePeakSpectrum(b)};
}

}  // namespace qdeph
