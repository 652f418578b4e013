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
#include <stdexcept>

#include "doctest.h"
#include "qdeph/channels.hpp"
#include "qdeph/config.hpp"
#include "qdeph/numerics.hpp"
#include "test_support.hpp"

using namespace qdeph;
using namespace qdeph::testing;

namespace {

Complex random_kappa(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(u(gen), 2.0 * M_PI * u(gen));
}

// Reference map built from the letter-by-letter rule, without the library.
Matrix4 reference_dephasing(const Matrix4& rho, Complex k1, Complex k2) {
  Matrix4::Entries e = rho.entries();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t ai = i / 2, aj = j / 2, bi = i % 2, bj = j % 2;
      if (ai < aj) e[i * 4 + j] *= k1;
      if (ai > aj) e[i * 4 + j] *= std::conj(k1);
      if (bi < bj) e[i * 4 + j] *= k2;
      if (bi > bj) e[i * 4 + j] *= std::conj(k2);
    }
  }
  return Matrix4(e);
}

DephasingPair table_pair(int row) {
  return table1_pair(default_config(), table1_rows()[static_cast<std::size_t>(row - 1)]);
}

}  // namespace

TEST_CASE("dephasing identity and full dephasing") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 20; ++i) {
    const Matrix4 rho = random_density<4>(gen);
    CHECK(apply_dephasing(rho, 1.0, 1.0).max_abs_diff(rho) == 0.0);
    const Matrix4 d = apply_dephasing(rho, 0.0, 0.0);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        if (r == c) CHECK(d(r, c) == rho(r, c));
        else CHECK(std::abs(d(r, c)) == 0.0);
      }
  }
}

TEST_CASE("dephasing follows the letter rule") {
  std::mt19937_64 gen(12);
  for (int i = 0; i < 50; ++i) {
    const Matrix4 rho = random_density<4>(gen);
    const Complex k1 = random_kappa(gen);
    const Complex k2 = random_kappa(gen);
    CHECK(apply_dephasing(rho, k1, k2).max_abs_diff(reference_dephasing(rho, k1, k2)) <= 1e-15);
  }
  Matrix4::Entries e{};
  for (auto& z : e) z = 0.25;
  const Matrix4 plus = Matrix4(e);
  const Complex k1(0.0, 0.5);
  const Complex k2(0.3, 0.0);
  const Matrix4 out = apply_dephasing(plus, k1, k2);
  CHECK(std::abs(out(0, 1) - 0.25 * k2) <= 1e-16);
  CHECK(std::abs(out(0, 2) - 0.25 * k1) <= 1e-16);
  CHECK(std::abs(out(0, 3) - 0.25 * k1 * k2) <= 1e-16);
  CHECK(std::abs(out(1, 2) - 0.25 * k1 * std::conj(k2)) <= 1e-16);
  CHECK(std::abs(out(3, 0) - 0.25 * std::conj(k1 * k2)) <= 1e-16);
}

TEST_CASE("Bell state with real coherence gives the realified message state") {
  const double h = 1.0 / std::sqrt(2.0);
  const Matrix4 phi_plus = Matrix4::projector({h, 0.0, 0.0, h});
  for (double k1 : {1.0, 0.8, 0.3}) {
    for (double k2 : {1.0, 0.5, 0.0}) {
      const Matrix4 out = apply_dephasing(phi_plus, k1, k2);
      Matrix4::Entries e{};
      e[0] = e[15] = 0.5;
      e[3] = e[12] = 0.5 * k1 * k2;
      CHECK(out.max_abs_diff(Matrix4(e)) <= 1e-15);
    }
  }
}

TEST_CASE("local dephasing") {
  const Matrix2 plus = Matrix2::projector({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
  CHECK(apply_local_dephasing(plus, 1.0).max_abs_diff(plus) == 0.0);
  const Matrix2 dead = apply_local_dephasing(plus, 0.0);
  CHECK(std::abs(dead(0, 1)) == 0.0);
  CHECK(dead(0, 0).real() == doctest::Approx(0.5));
  // Equatorial Bloch vector (cos phi, sin phi, 0) halves under |kappa| = 0.5.
  for (double phi : {0.0, 0.7, 2.0}) {
    const Matrix2 rho = Matrix2::projector({1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), phi)});
    const Matrix2 out = apply_local_dephasing(rho, std::polar(0.5, 0.0));
    const double x = 2.0 * out(0, 1).real();
    const double y = -2.0 * out(0, 1).imag();
    const double z = (out(0, 0) - out(1, 1)).real();
    CHECK(std::abs(x - 0.5 * std::cos(phi)) <= 1e-15);
    CHECK(std::abs(y - 0.5 * std::sin(phi)) <= 1e-15);
    CHECK(std::abs(z) <= 1e-15);
  }
  CHECK_THROWS_AS(apply_local_dephasing(plus, 1.1), std::invalid_argument);
}

TEST_CASE("capacity values") {
  CHECK(capacity_two_qubit(1.0, 1.0) == 2.0);
  CHECK(capacity_two_qubit(0.0, 0.0) == 0.0);
  CHECK(capacity_two_qubit(1.0, 0.0) == 1.0);
  CHECK(capacity_single(1.0) == 1.0);
  CHECK(capacity_single(0.0) == 0.0);
  // (1 + 0.5) / 2 = 0.75 and H2(0.75) = 0.8112781244591328.
  CHECK(std::abs(capacity_single(0.5) - (1.0 - 0.8112781244591328)) <= 1e-15);
  CHECK_THROWS_AS(capacity_single(1.01), std::domain_error);
  CHECK_THROWS_AS(capacity_single(-0.01), std::domain_error);
  CHECK_THROWS_AS(capacity_two_qubit(0.5, 2.0), std::domain_error);
}

TEST_CASE("capacity is additive") {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double m1 = u(gen);
    const double m2 = u(gen);
    CHECK(std::abs(capacity_two_qubit(m1, m2) - capacity_single(m1) - capacity_single(m2)) <= 1e-12);
  }
}

TEST_CASE("dephasing preserves trace, Hermiticity and positivity") {
  std::mt19937_64 gen(14);
  for (int i = 0; i < 100; ++i) {
    const Matrix4 rho = random_density<4>(gen);
    const Matrix4 out = apply_dephasing(rho, random_kappa(gen), random_kappa(gen));
    CHECK(out.trace() == rho.trace());
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) CHECK(std::abs(out(r, c) - std::conj(out(c, r))) <= 1e-14);
    CHECK(hermitian_eigenvalues(out).back() >= -1e-10);
  }
}

TEST_CASE("dephasing composes multiplicatively") {
  std::mt19937_64 gen(15);
  for (int i = 0; i < 100; ++i) {
    const Matrix4 rho = random_density<4>(gen);
    const Complex k = random_kappa(gen), l = random_kappa(gen), k2 = random_kappa(gen), l2 = random_kappa(gen);
    const Matrix4 twice = apply_dephasing(apply_dephasing(rho, k, l), k2, l2);
    CHECK(twice.max_abs_diff(apply_dephasing(rho, k * k2, l * l2)) <= 1e-12);
  }
}

TEST_CASE("dephasing does not increase trace distance") {
  std::mt19937_64 gen(16);
  for (int i = 0; i < 100; ++i) {
    const Matrix4 r1 = random_density<4>(gen);
    const Matrix4 r2 = random_density<4>(gen);
    const Complex k1 = random_kappa(gen);
    const Complex k2 = random_kappa(gen);
    CHECK(trace_distance(apply_dephasing(r1, k1, k2), apply_dephasing(r2, k1, k2)) <=
          trace_distance(r1, r2) + 1e-10);
  }
}

TEST_CASE("two-qubit capacity is monotone in each magnitude") {
  constexpr int n = 100;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double m1 = i / (n - 1.0), m2 = j / (n - 1.0);
      const double q = capacity_two_qubit(m1, m2);
      if (i + 1 < n) CHECK(capacity_two_qubit((i + 1) / (n - 1.0), m2) >= q);
      if (j + 1 < n) CHECK(capacity_two_qubit(m1, (j + 1) / (n - 1.0)) >= q);
    }
  }
}

TEST_CASE("capacity traces of reference combinations") {
  const RunConfig config = default_config();
  for (int row = 1; row <= 5; ++row) {
    const DephasingPair pair = table_pair(row);
    const CapacityTrace tr = capacity_trace(pair, config.grid_for(pair));
    REQUIRE(tr.q_ab.size() == kDefaultGridPoints);
    CHECK(tr.q_ab[0] == 2.0);
    for (std::size_t i = 0; i < tr.q_ab.size(); i += 97) {
      CHECK(std::abs(tr.q_ab[i] - tr.q_a[i] - tr.q_b[i]) <= 1e-12);
      CHECK_UNARY(tr.q_a[i] >= 0.0 && tr.q_a[i] <= 1.0);
      CHECK_UNARY(tr.q_ab[i] >= 0.0 && tr.q_ab[i] <= 2.0);
      CHECK(tr.q_a[i] == capacity_single(magnitude(pair.a, tr.grid[i])));
    }
    if (row == 1) CHECK(is_non_increasing(tr.q_ab, kIncreaseThreshold));
    if (row == 4) {
      const auto s = positive_increase_sum(tr.grid.samples(), tr.q_ab, kIncreaseThreshold);
      CHECK_FALSE(s.intervals.empty());
    }
  }
}

TEST_CASE("dephasing rejects non-contractive coefficients") {
  const Matrix4 rho = Matrix4::identity() * 0.25;
  CHECK_THROWS_AS(apply_dephasing(rho, 1.01, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(apply_dephasing(rho, 0.5, Complex(0.0, 1.5)), std::invalid_argument);
  CHECK_NOTHROW(apply_dephasing(rho, 1.0 + 1e-13, 1.0));
}
