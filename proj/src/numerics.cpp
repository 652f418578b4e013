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

#include "qdeph/numerics.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace qdeph {

double binary_entropy(double p) {
  constexpr double kSlack = 1e-12;
  if (!(p >= -kSlack && p <= 1.0 + kSlack)) {
    std::ostringstream msg;
    msg << "binary_entropy: probability " << p << " outside [0, 1]";
    throw std::domain_error(msg.str());
  }
  p = std::clamp(p, 0.0, 1.0);
  if (p == 0.0 || p == 1.0) return 0.0;
  const double q = 1.0 - p;
  return -p * std::log2(p) - q * std::log2(q);
}

template <std::size_t N>
HermitianMatrix<N>::HermitianMatrix(const Entries& entries) : entries_(entries) {
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i; j < N; ++j) {
      const double gap = std::abs(entries_[i * N + j] - std::conj(entries_[j * N + i]));
      if (!(gap <= kHermiticityTolerance)) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: |M(" << i << "," << j << ") - conj(M(" << j << "," << i
            << "))| = " << gap;
        throw ValidationError(msg.str());
      }
    }
  }
}

template <std::size_t N>
double HermitianMatrix<N>::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

namespace {

constexpr double kJacobiThreshold = 1e-14;
constexpr int kJacobiMaxSweeps = 100;

template <std::size_t N>
double off_diagonal_norm(const std::array<Complex, N * N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += std::norm(a[i * N + j]);
  return std::sqrt(s);
}

// Unitary similarity A <- G^H A G with G = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
// acting on the (p, q) plane, chosen to annihilate A(p, q).
template <std::size_t N>
void jacobi_rotate(std::array<Complex, N * N>& a, std::size_t p, std::size_t q) {
  const Complex apq = a[p * N + q];
  const double mag = std::sqrt(std::norm(apq));
  if (mag == 0.0) return;
  const Complex phase = apq / mag;
  const double app = a[p * N + p].real();
  const double aqq = a[q * N + q].real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  for (std::size_t k = 0; k < N; ++k) {
    const Complex akp = a[k * N + p];
    const Complex akq = a[k * N + q];
    a[k * N + p] = akp * gpp + akq * gqp;
    a[k * N + q] = akp * gpq + akq * gqq;
  }
  for (std::size_t k = 0; k < N; ++k) {
    const Complex apk = a[p * N + k];
    const Complex aqk = a[q * N + k];
    a[p * N + k] = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a[q * N + k] = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a[p * N + q] = 0.0;
  a[q * N + p] = 0.0;
  a[p * N + p] = a[p * N + p].real();
  a[q * N + q] = a[q * N + q].real();
}

}  // namespace

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const HermitianMatrix<N>& m) {
  auto a = m.entries();
  const double scale = std::max(1.0, m.frobenius_norm());
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm<N>(a) <= kJacobiThreshold * scale) break;
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) jacobi_rotate<N>(a, p, q);
  }
  std::array<double, N> eig{};
  for (std::size_t i = 0; i < N; ++i) eig[i] = a[i * N + i].real();
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

template <std::size_t N>
double trace_norm(const HermitianMatrix<N>& m) {
  double s = 0.0;
  for (double ev : hermitian_eigenvalues(m)) s += std::abs(ev);
  return s;
}

template <std::size_t N>
void validate_density(const HermitianMatrix<N>& rho) {
  const double tr = rho.trace();
  if (!(std::abs(tr - 1.0) <= kDensityTolerance)) {
    std::ostringstream msg;
    msg << "density matrix trace " << tr << " differs from 1";
    throw ValidationError(msg.str());
  }
  const auto eig = hermitian_eigenvalues(rho);
  if (!(eig.back() >= -kDensityTolerance)) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << eig.back();
    throw ValidationError(msg.str());
  }
}

template <std::size_t N>
bool is_density(const HermitianMatrix<N>& rho) {
  try {
    validate_density(rho);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

template <std::size_t N>
double trace_distance(const HermitianMatrix<N>& r1, const HermitianMatrix<N>& r2) {
  validate_density(r1);
  validate_density(r2);
  return 0.5 * trace_norm(r1 - r2);
}

template <std::size_t N>
double distinguish_probability(const HermitianMatrix<N>& r1, const HermitianMatrix<N>& r2) {
  return 0.5 * (1.0 + trace_distance(r1, r2));
}

IncreaseSummary positive_increase_sum(std::span<const double> times, std::span<const double> values,
                                      double threshold) {
  if (values.size() < 2) throw std::invalid_argument("positive_increase_sum: need at least 2 samples");
  if (times.size() != values.size())
    throw std::invalid_argument("positive_increase_sum: times and values differ in length");

  IncreaseSummary out;
  bool open = false;
  std::size_t first = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (!(times[i + 1] > times[i]))
      throw std::invalid_argument("positive_increase_sum: time grid not strictly increasing");
    const double rise = values[i + 1] - values[i];
    if (rise > threshold) {
      out.total += rise;
      if (!open) {
        open = true;
        first = i;
      }
    } else if (open) {
      open = false;
      out.intervals.push_back({times[first], times[i]});
      out.index_ranges.emplace_back(first, i);
    }
  }
  if (open) {
    const std::size_t last = values.size() - 1;
    out.intervals.push_back({times[first], times[last]});
    out.index_ranges.emplace_back(first, last);
  }
  return out;
}

bool is_non_increasing(std::span<const double> values, double threshold) {
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i + 1] - values[i] > threshold) return false;
  return true;
}

template class HermitianMatrix<2>;
template class HermitianMatrix<4>;

#define QDEPH_INSTANTIATE(N)                                                                  \
  template std::array<double, N> hermitian_eigenvalues(const HermitianMatrix<N>&);           \
  template double trace_norm(const HermitianMatrix<N>&);                                     \
  template void validate_density(const HermitianMatrix<N>&);                                 \
  template bool is_density(const HermitianMatrix<N>&);                                       \
  template double trace_distance(const HermitianMatrix<N>&, const HermitianMatrix<N>&);      \
  template double distinguish_probability(const HermitianMatrix<N>&, const HermitianMatrix<N>&);

QDEPH_INSTANTIATE(2)
QDEPH_INSTANTIATE(4)

#undef QDEPH_INSTANTIATE

}  // namespace qdeph
