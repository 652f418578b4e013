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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "qdeph/numerics.hpp"
#include "test_support.hpp"

using namespace qdeph;
using namespace qdeph::testing;

namespace {

// Second, independent route to H2 through natural logarithms.
double entropy_nat(double p) {
  const double q = 1.0 - p;
  return -(p * std::log(p) + q * std::log(q)) / std::log(2.0);
}

Matrix4 bell(int which) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (which) {
    case 0: return Matrix4::projector({h, 0.0, 0.0, h});   // Phi+
    case 1: return Matrix4::projector({0.0, h, h, 0.0});   // Psi+
    case 2: return Matrix4::projector({0.0, h, -h, 0.0});  // Psi-
    default: return Matrix4::projector({h, 0.0, 0.0, -h});  // Phi-
  }
}

// Dephased difference of |+><+| (x) 1/2 and 1/4: kappa / 4 on the Alice coherences.
Matrix4 probe_difference(Complex kappa) {
  Matrix4::Entries e{};
  e[0 * 4 + 2] = e[1 * 4 + 3] = kappa / 4.0;
  e[2 * 4 + 0] = e[3 * 4 + 1] = std::conj(kappa) / 4.0;
  return Matrix4(e);
}

Matrix4 probe_state(Complex kappa) {
  Matrix4::Entries e{};
  for (int i = 0; i < 4; ++i) e[i * 4 + i] = 0.25;
  e[0 * 4 + 2] = e[1 * 4 + 3] = kappa / 4.0;
  e[2 * 4 + 0] = e[3 * 4 + 1] = std::conj(kappa) / 4.0;
  return Matrix4(e);
}

}  // namespace

TEST_CASE("binary entropy reference values") {
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  // Frozen from the natural-log route.
  CHECK(entropy_nat(0.25) == doctest::Approx(0.8112781245).epsilon(1e-10));
  CHECK(binary_entropy(0.25) == doctest::Approx(0.8112781245).epsilon(1e-10));
  CHECK(std::abs(binary_entropy(0.25) - entropy_nat(0.25)) < 1e-15);
}

TEST_CASE("binary entropy rejects probabilities outside [0, 1]") {
  CHECK_THROWS_AS(binary_entropy(-0.01), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(1.0 + 1e-9), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(std::nan("")), std::domain_error);
  CHECK(binary_entropy(1.0 + 1e-13) == 0.0);
}

TEST_CASE("binary entropy is symmetric and bounded") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double p = ud(gen);
    const double h = binary_entropy(p);
    CHECK(std::abs(h - binary_entropy(1.0 - p)) <= 1e-12);
    CHECK(h >= 0.0);
    CHECK(h <= 1.0);
    CHECK(std::abs(h - entropy_nat(p)) < 1e-13);
  }
}

TEST_CASE("Hermitian matrix construction validates") {
  Matrix2::Entries e{Complex(1.0), Complex(0.0, 1.0), Complex(0.0, 1.0), Complex(0.0)};
  CHECK_THROWS_AS(Matrix2{e}, ValidationError);
  e[2] = Complex(0.0, -1.0);
  CHECK_NOTHROW(Matrix2{e});
}

TEST_CASE("eigenvalues of simple matrices") {
  const auto id = hermitian_eigenvalues(Matrix4::identity());
  for (double v : id) CHECK(v == 1.0);

  const auto eq12 = hermitian_eigenvalues(probe_difference(1.0));
  CHECK(eq12[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(eq12[1] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(eq12[2] == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(eq12[3] == doctest::Approx(-0.25).epsilon(1e-15));

  // Complex kappa: eigenvalues depend on |kappa| only.
  const auto rotated = hermitian_eigenvalues(probe_difference(std::polar(0.6, 1.1)));
  CHECK(std::abs(rotated[0] - 0.15) < 1e-15);
  CHECK(std::abs(rotated[3] + 0.15) < 1e-15);
}

TEST_CASE("eigenvalues match characteristic-polynomial roots on random matrices") {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix4 m = random_hermitian<4>(gen);
    const auto ev = hermitian_eigenvalues(m);
    const auto oracle = polynomial_real_roots<4>(characteristic_polynomial<4>(m.entries()));
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(ev[i] - oracle[i]) < 1e-8);
    CHECK(ev[0] >= ev[1]);
    CHECK(ev[1] >= ev[2]);
    CHECK(ev[2] >= ev[3]);
  }
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix2 m = random_hermitian<2>(gen);
    const auto ev = hermitian_eigenvalues(m);
    const auto oracle = polynomial_real_roots<2>(characteristic_polynomial<2>(m.entries()));
    for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(ev[i] - oracle[i]) < 1e-8);
  }
}

TEST_CASE("eigenvalue sum equals trace and is bounded by row sums") {
  std::mt19937_64 gen(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix4 m = random_hermitian<4>(gen, trial % 2 ? 1e-3 : 50.0);
    const auto ev = hermitian_eigenvalues(m);
    double sum = 0.0;
    for (double v : ev) sum += v;
    CHECK(std::abs(sum - m.trace()) <= 1e-10 * (1.0 + std::abs(m.trace())));
    double row_bound = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      double r = 0.0;
      for (std::size_t j = 0; j < 4; ++j) r += std::abs(m(i, j));
      row_bound = std::max(row_bound, r);
    }
    CHECK(std::max(std::abs(ev.front()), std::abs(ev.back())) <= row_bound * (1.0 + 1e-12));
  }
}

TEST_CASE("degenerate spectra are returned adjacently") {
  std::mt19937_64 gen(3);
  const auto u = random_unitary<4>(gen);
  Matrix4::Entries d{};
  d[0] = 2.0;
  d[5] = 2.0;
  d[10] = -1.0;
  d[15] = 0.5;
  const auto ev = hermitian_eigenvalues(conjugate(Matrix4(d), u));
  CHECK(ev[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ev[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ev[3] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("density validation") {
  CHECK(is_density(Matrix4::identity() * 0.25));
  CHECK_FALSE(is_density(Matrix4::identity() * 0.3));
  Matrix2::Entries neg{Complex(1.2), Complex(0.0), Complex(0.0), Complex(-0.2)};
  CHECK_THROWS_AS(validate_density(Matrix2(neg)), ValidationError);
  CHECK_THROWS_AS(trace_distance(Matrix2(neg), Matrix2::identity() * 0.5), ValidationError);
}

TEST_CASE("trace distance reference values") {
  std::mt19937_64 gen(5);
  const Matrix4 rho = random_density<4>(gen);
  CHECK(trace_distance(rho, rho) == 0.0);
  CHECK(trace_distance(bell(0), bell(1)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(trace_distance(bell(2), bell(3)) == doctest::Approx(1.0).epsilon(1e-14));
  for (double k : {0.0, 0.25, 0.6, 1.0}) {
    const Complex kappa = std::polar(k, 0.7);
    CHECK(std::abs(trace_distance(probe_state(kappa), Matrix4::identity() * 0.25) - k / 2.0) < 1e-14);
  }
}

TEST_CASE("distinguish probability") {
  std::mt19937_64 gen(6);
  const Matrix2 rho = random_density<2>(gen);
  CHECK(distinguish_probability(rho, rho) == 0.5);
  CHECK(distinguish_probability(bell(0), bell(3)) == doctest::Approx(1.0).epsilon(1e-14));
  // D = 0.6 / 2 = 0.3, P = (1 + 0.3) / 2.
  CHECK(distinguish_probability(probe_state(0.6), Matrix4::identity() * 0.25) == doctest::Approx(0.65).epsilon(1e-14));
}

TEST_CASE("trace distance properties on random states") {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix4 a = random_density<4>(gen);
    const Matrix4 b = random_density<4>(gen);
    const Matrix4 c = random_density<4>(gen);
    const double ab = trace_distance(a, b);
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
    CHECK(std::abs(ab - trace_distance(b, a)) < 1e-14);
    CHECK(trace_distance(a, c) <= ab + trace_distance(b, c) + 1e-9);

    const auto u = random_unitary<4>(gen);
    CHECK(std::abs(trace_distance(conjugate(a, u), conjugate(b, u)) - ab) <= 1e-10);
  }
}

TEST_CASE("positive increase sum examples") {
  const std::vector<double> t{0.0, 1.0, 2.0, 3.0};
  const std::vector<double> down{1.0, 0.7, 0.7, 0.1};
  const auto none = positive_increase_sum(t, down);
  CHECK(none.total == 0.0);
  CHECK(none.intervals.empty());

  const std::vector<double> wiggle{1.0, 0.5, 0.8, 0.2};
  const auto one = positive_increase_sum(t, wiggle);
  CHECK(one.total == doctest::Approx(0.3).epsilon(1e-15));
  REQUIRE(one.intervals.size() == 1);
  CHECK(one.intervals[0].start == 1.0);
  CHECK(one.intervals[0].end == 2.0);

  const std::vector<double> ripple{1.0, 1.0 + 1e-10, 1.0, 2.0};
  const auto tail = positive_increase_sum(t, ripple);
  CHECK(tail.total == 1.0);
  REQUIRE(tail.intervals.size() == 1);
  CHECK(tail.intervals[0].start == 2.0);
  CHECK(tail.intervals[0].end == 3.0);
}

TEST_CASE("positive increase sum errors") {
  const std::vector<double> one{1.0};
  CHECK_THROWS_AS(positive_increase_sum(one, one), std::invalid_argument);
  const std::vector<double> t{0.0, 0.0};
  const std::vector<double> v{0.0, 1.0};
  CHECK_THROWS_AS(positive_increase_sum(t, v), std::invalid_argument);
}

TEST_CASE("positive increase sum matches a direct loop on a random walk") {
  std::mt19937_64 gen(1234);
  std::normal_distribution<double> nd(0.0, 0.01);
  std::vector<double> t(1000), f(1000);
  for (std::size_t i = 0; i < f.size(); ++i) {
    t[i] = 0.5 * static_cast<double>(i);
    f[i] = i == 0 ? 0.0 : f[i - 1] + nd(gen);
  }
  double oracle = 0.0;
  std::size_t runs = 0;
  bool in_run = false;
  for (std::size_t i = 1; i < f.size(); ++i) {
    const double d = f[i] - f[i - 1];
    if (d > kIncreaseThreshold) {
      oracle += d;
      if (!in_run) ++runs;
      in_run = true;
    } else {
      in_run = false;
    }
  }
  const auto got = positive_increase_sum(t, f);
  CHECK(got.total == oracle);
  CHECK(got.intervals.size() == runs);
  for (const auto& iv : got.intervals) CHECK(iv.end > iv.start);
}

TEST_CASE("monotone series never accumulate increases") {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> t(200), f(200);
    for (std::size_t i = 0; i < f.size(); ++i) {
      t[i] = static_cast<double>(i);
      f[i] = i == 0 ? 1.0 : f[i - 1] - ud(gen) * (trial % 3 == 0 ? 0.0 : 1e-3);
    }
    CHECK(positive_increase_sum(t, f).total == 0.0);
    CHECK(is_non_increasing(f));
  }
}
