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

#include <vector>

#include "qdeph/numerics.hpp"
#include "qdeph/spectra.hpp"

namespace qdeph {

/// Independent local environments of Alice's (decoherence kappa_1) and
/// Bob's (kappa_2) qubits.
struct DephasingPair {
  DoublePeakSpectrum a;
  DoublePeakSpectrum b;
};

/// Local and global capacity series on a common grid.
struct CapacityTrace {
  TimeGrid grid;
  std::vector<double> q_a;
  std::vector<double> q_b;
  std::vector<double> q_ab;
};

/// Two-qubit local dephasing in the HH, HV, VH, VV basis: an element whose
/// row and column differ in the first letter picks up kappa1 (H->V) or its
/// conjugate (V->H); likewise kappa2 for the second letter.
/// Throws std::invalid_argument if |kappa| > 1 beyond 1e-12.
Matrix4 apply_dephasing(const Matrix4& rho, Complex kappa1, Complex kappa2);

/// One-qubit dephasing: rho_HV *= kappa, rho_VH *= conj(kappa).
Matrix2 apply_local_dephasing(const Matrix2& rho, Complex kappa);

/// 1 - H2((1 + m) / 2) for a coherence magnitude m in [0, 1].
double capacity_single(double mag);

/// 2 - H2((1 + m1) / 2) - H2((1 + m2) / 2).
double capacity_two_qubit(double mag1, double mag2);

CapacityTrace capacity_trace(const DephasingPair& pair, const TimeGrid& grid);

}  // namespace qdeph
