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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdeph/channels.hpp"
#include "qdeph/numerics.hpp"
#include "qdeph/spectra.hpp"

namespace qdeph {

enum class Dynamics { kMarkovian, kNonMarkovian };

const char* to_string(Dynamics d);

struct MeasureReport {
  bool bcm_detected = false;
  /// Sum of the capacity rises (capacity units).
  double bcm_increase_sum = 0.0;
  /// Trapezoid integral of Q over the segments where Q rises (capacity * s).
  double bcm_literal_integral = 0.0;
  double blp_bound_a = 0.0;
  double blp_bound_b = 0.0;
  bool blp_detected = false;
  /// Growth intervals of the global capacity, seconds.
  std::vector<TimeInterval> increase_intervals;
};

struct CombinationVerdict {
  Dynamics local_a = Dynamics::kMarkovian;
  Dynamics local_b = Dynamics::kMarkovian;
  Dynamics global_bcm = Dynamics::kMarkovian;
  bool blp_detected = false;

  bool operator==(const CombinationVerdict&) const = default;
};

/// Capacity-based diagnostic on a precomputed trace. Fills the BCM fields
/// only; the BLP fields stay zero.
MeasureReport bcm_scan(const CapacityTrace& trace);

struct BlpBounds {
  double a = 0.0;
  double b = 0.0;
};

/// Accumulated rises of D = |kappa_j| / 2 obtained from the product pairs
/// (|+><+| (x) 1/2, 1/4) on each side. Each component is a lower bound on the
/// trace-distance measure.
BlpBounds blp_product_bound(const DephasingPair& pair, const TimeGrid& grid);

/// Probe pair whose trace distance follows |kappa| of one side only:
/// |+><+| (x) 1/2 versus 1/4 (side A), or 1/2 (x) |+><+| versus 1/4 (side B).
std::pair<Matrix4, Matrix4> product_probe_pair(bool alice_side);

/// D(Phi_t rho1, Phi_t rho2) at every grid time, kappa_j(t) = characteristic_fn(spec_j, t).
std::vector<double> trace_distance_dynamics(const Matrix4& rho1, const Matrix4& rho2, const DephasingPair& pair,
                                            const TimeGrid& grid);

struct BlpSearchResult {
  double best_value = 0.0;
  std::string best_pair;
  Matrix4 rho1;
  Matrix4 rho2;
};

inline constexpr int kBlpMaxSweeps = 200;

/// Lower-bound search for the trace-distance measure. Always scores the two
/// product probe pairs and the antipodal equatorial product pairs, then runs
/// `n_restarts` coordinate-ascent searches over orthogonal pure-state pairs
/// from seeded random starts (restart r uses derive_seed(seed, r)).
BlpSearchResult blp_search(const DephasingPair& pair, const TimeGrid& grid, int n_restarts, std::uint64_t seed);

/// Local classes from the single-qubit capacities, global class from the
/// BCM scan, BLP detection from the product bounds.
CombinationVerdict classify_combination(const DephasingPair& pair, const TimeGrid& grid);

/// bcm_scan plus blp_product_bound for the pair.
MeasureReport measure_report(const DephasingPair& pair, const TimeGrid& grid);

inline constexpr double kCriticalAmplitudeWidth = 1e-4;

/// Smallest amplitude ratio at which |kappa| stops being monotone on the
/// grid, bracketed by bisection to kCriticalAmplitudeWidth and returned as
/// the bracket midpoint. std::nullopt when A = 1 is still monotone.
std::optional<double> critical_amplitude(const DoublePeakSpectrum& templ, const TimeGrid& grid);

/// True when magnitude(spec, .) rises by more than kIncreaseThreshold somewhere on the grid.
bool magnitude_is_non_monotone(const DoublePeakSpectrum& spec, const TimeGrid& grid);

}  // namespace qdeph
