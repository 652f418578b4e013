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

#include "qdeph/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qdeph/rng.hpp"

namespace qdeph {

const char* to_string(Dynamics d) { return d == Dynamics::kMarkovian ? "markovian" : "non_markovian"; }

MeasureReport bcm_scan(const CapacityTrace& trace) {
  const auto times = trace.grid.samples();
  const auto rises = positive_increase_sum(times, trace.q_ab);

  MeasureReport report;
  report.bcm_increase_sum = rises.total;
  report.bcm_detected = rises.total > kIncreaseThreshold;
  report.increase_intervals = rises.intervals;
  for (const auto& [first, last] : rises.index_ranges) {
    for (std::size_t i = first; i < last; ++i) {
      report.bcm_literal_integral += 0.5 * (times[i + 1] - times[i]) * (trace.q_ab[i] + trace.q_ab[i + 1]);
    }
  }
  return report;
}

std::pair<Matrix4, Matrix4> product_probe_pair(bool alice_side) {
  // |+><+| (x) 1/2 has 1/4 on the diagonal and 1/4 on the coherences of the
  // probed qubit; the reference state is the maximally mixed state.
  Matrix4::Entries e{};
  for (std::size_t i = 0; i < 4; ++i) e[i * 4 + i] = 0.25;
  if (alice_side) {
    e[0 * 4 + 2] = e[2 * 4 + 0] = 0.25;
    e[1 * 4 + 3] = e[3 * 4 + 1] = 0.25;
  } else {
    e[0 * 4 + 1] = e[1 * 4 + 0] = 0.25;
    e[2 * 4 + 3] = e[3 * 4 + 2] = 0.25;
  }
  return {Matrix4(e), Matrix4::identity() * 0.25};
}

BlpBounds blp_product_bound(const DephasingPair& pair, const TimeGrid& grid) {
  const auto times = grid.samples();
  std::vector<double> half_a(grid.size());
  std::vector<double> half_b(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    half_a[i] = 0.5 * magnitude(pair.a, times[i]);
    half_b[i] = 0.5 * magnitude(pair.b, times[i]);
  }
  return {positive_increase_sum(times, half_a).total, positive_increase_sum(times, half_b).total};
}

std::vector<double> trace_distance_dynamics(const Matrix4& rho1, const Matrix4& rho2, const DephasingPair& pair,
                                            const TimeGrid& grid) {
  validate_density(rho1);
  validate_density(rho2);
  std::vector<double> d(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Complex k1 = characteristic_fn(pair.a, grid[i]);
    const Complex k2 = characteristic_fn(pair.b, grid[i]);
    d[i] = trace_distance(apply_dephasing(rho1, k1, k2), apply_dephasing(rho2, k1, k2));
  }
  return d;
}

namespace {

using State4 = std::array<Complex, 4>;

// Scores a pair through its difference; the map is linear, so
// Phi(rho1) - Phi(rho2) = Phi(rho1 - rho2).
class BlpObjective {
 public:
  BlpObjective(const DephasingPair& pair, const TimeGrid& grid) : times_(grid.samples()) {
    kappa_a_.reserve(times_.size());
    kappa_b_.reserve(times_.size());
    for (double t : times_) {
      kappa_a_.push_back(characteristic_fn(pair.a, t));
      kappa_b_.push_back(characteristic_fn(pair.b, t));
    }
    series_.resize(times_.size());
  }

  double operator()(const Matrix4& difference) {
    for (std::size_t i = 0; i < times_.size(); ++i) {
      series_[i] = 0.5 * trace_norm(apply_dephasing(difference, kappa_a_[i], kappa_b_[i]));
    }
    return positive_increase_sum(times_, series_).total;
  }

 private:
  std::vector<double> times_;
  std::vector<Complex> kappa_a_;
  std::vector<Complex> kappa_b_;
  std::vector<double> series_;
};

constexpr std::size_t kSearchParams = 16;
// Smaller gains are indistinguishable from increase-threshold ripple.
constexpr double kMinImprovement = 1e-10;
using SearchPoint = std::array<double, kSearchParams>;

// Two orthonormal columns from 16 real parameters by Gram-Schmidt. Returns
// false when the parameters are (numerically) linearly dependent.
bool orthonormal_pair(const SearchPoint& x, State4& u, State4& v) {
  for (std::size_t i = 0; i < 4; ++i) {
    u[i] = {x[2 * i], x[2 * i + 1]};
    v[i] = {x[8 + 2 * i], x[8 + 2 * i + 1]};
  }
  double nu = 0.0;
  for (const auto& z : u) nu += std::norm(z);
  if (nu < 1e-24) return false;
  nu = std::sqrt(nu);
  for (auto& z : u) z /= nu;
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < 4; ++i) overlap += std::conj(u[i]) * v[i];
  for (std::size_t i = 0; i < 4; ++i) v[i] -= overlap * u[i];
  double nv = 0.0;
  for (const auto& z : v) nv += std::norm(z);
  if (nv < 1e-24) return false;
  nv = std::sqrt(nv);
  for (auto& z : v) z /= nv;
  return true;
}

double score_point(BlpObjective& objective, const SearchPoint& x) {
  State4 u;
  State4 v;
  if (!orthonormal_pair(x, u, v)) return 0.0;
  return objective(Matrix4::projector(u) - Matrix4::projector(v));
}

struct Candidate {
  double value;
  std::string description;
  Matrix4 rho1;
  Matrix4 rho2;
};

std::vector<Candidate> seeded_candidates(BlpObjective& objective) {
  std::vector<Candidate> out;
  for (bool alice : {true, false}) {
    auto [r1, r2] = product_probe_pair(alice);
    out.push_back({objective(r1 - r2),
                   alice ? "product probe A: |+><+| (x) 1/2 vs 1/4" : "product probe B: 1/2 (x) |+><+| vs 1/4", r1,
                   r2});
  }
  const double h = 1.0 / std::sqrt(2.0);
  // |+>|H> vs |->|H> and |H>|+> vs |H>|->.
  const State4 plus_h{h, 0.0, h, 0.0};
  const State4 minus_h{h, 0.0, -h, 0.0};
  const State4 h_plus{h, h, 0.0, 0.0};
  const State4 h_minus{h, -h, 0.0, 0.0};
  for (const auto& [s1, s2, label] :
       {std::tuple{plus_h, minus_h, "equatorial A: |+H> vs |-H>"}, std::tuple{h_plus, h_minus, "equatorial B: |H+> vs |H->"}}) {
    const Matrix4 r1 = Matrix4::projector(s1);
    const Matrix4 r2 = Matrix4::projector(s2);
    out.push_back({objective(r1 - r2), label, r1, r2});
  }
  return out;
}

Candidate run_restart(BlpObjective& objective, std::uint64_t stream, int restart) {
  CounterRng rng(stream);
  SearchPoint x;
  for (auto& c : x) c = rng.normal();
  double value = score_point(objective, x);
  double step = 0.5;
  for (int sweep = 0; sweep < kBlpMaxSweeps && step >= 1e-6; ++sweep) {
    bool improved = false;
    for (std::size_t c = 0; c < kSearchParams; ++c) {
      for (double dir : {1.0, -1.0}) {
        const double saved = x[c];
        x[c] = saved + dir * step;
        const double trial = score_point(objective, x);
        if (trial > value + kMinImprovement) {
          value = trial;
          improved = true;
          break;
        }
        x[c] = saved;
      }
    }
    if (!improved) step *= 0.5;
  }
  State4 u;
  State4 v;
  if (!orthonormal_pair(x, u, v)) return {0.0, "degenerate restart", Matrix4(), Matrix4()};
  std::ostringstream label;
  label << "restart " << restart << ": orthogonal pure pair";
  return {value, label.str(), Matrix4::projector(u), Matrix4::projector(v)};
}

}  // namespace

BlpSearchResult blp_search(const DephasingPair& pair, const TimeGrid& grid, int n_restarts, std::uint64_t seed) {
  if (n_restarts < 1) throw std::invalid_argument("blp_search: n_restarts must be >= 1");
  BlpObjective objective(pair, grid);

  BlpSearchResult best;
  best.best_value = -1.0;
  auto consider = [&best](const Candidate& c) {
    if (c.value > best.best_value) {
      best.best_value = c.value;
      best.best_pair = c.description;
      best.rho1 = c.rho1;
      best.rho2 = c.rho2;
    }
  };
  for (const auto& c : seeded_candidates(objective)) consider(c);
  for (int r = 0; r < n_restarts; ++r) consider(run_restart(objective, derive_seed(seed, static_cast<std::uint64_t>(r)), r));
  return best;
}

CombinationVerdict classify_combination(const DephasingPair& pair, const TimeGrid& grid) {
  const CapacityTrace trace = capacity_trace(pair, grid);
  const BlpBounds bounds = blp_product_bound(pair, grid);
  auto cls = [](bool monotone) { return monotone ? Dynamics::kMarkovian : Dynamics::kNonMarkovian; };

  CombinationVerdict v;
  v.local_a = cls(is_non_increasing(trace.q_a));
  v.local_b = cls(is_non_increasing(trace.q_b));
  v.global_bcm = cls(!bcm_scan(trace).bcm_detected);
  v.blp_detected = bounds.a > kIncreaseThreshold || bounds.b > kIncreaseThreshold;
  return v;
}

MeasureReport measure_report(const DephasingPair& pair, const TimeGrid& grid) {
  MeasureReport report = bcm_scan(capacity_trace(pair, grid));
  const BlpBounds bounds = blp_product_bound(pair, grid);
  report.blp_bound_a = bounds.a;
  report.blp_bound_b = bounds.b;
  report.blp_detected = bounds.a > kIncreaseThreshold || bounds.b > kIncreaseThreshold;
  return report;
}

bool magnitude_is_non_monotone(const DoublePeakSpectrum& spec, const TimeGrid& grid) {
  double prev = magnitude(spec, grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = magnitude(spec, grid[i]);
    if (cur - prev > kIncreaseThreshold) return true;
    prev = cur;
  }
  return false;
}

std::optional<double> critical_amplitude(const DoublePeakSpectrum& templ, const TimeGrid& grid) {
  if (magnitude_is_non_monotone(templ.with_amp_ratio(0.0), grid))
    throw std::invalid_argument("critical_amplitude: single-peak spectrum already non-monotone on grid");
  if (!magnitude_is_non_monotone(templ.with_amp_ratio(1.0), grid)) return std::nullopt;
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > kCriticalAmplitudeWidth) {
    const double mid = 0.5 * (lo + hi);
    if (magnitude_is_non_monotone(templ.with_amp_ratio(mid), grid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qdeph
