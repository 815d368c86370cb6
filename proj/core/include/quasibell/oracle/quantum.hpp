// Copyright 2026 The quasibell Authors
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

#ifndef QUASIBELL_ORACLE_QUANTUM_HPP_
#define QUASIBELL_ORACLE_QUANTUM_HPP_

// Two-qubit reference behaviors from rank-1 projective measurements in the
// X-Z plane. Setting angle theta measures the observable
// cos(theta) Z + sin(theta) X; outcome y projects onto (I + y * that) / 2.
// Basis order is |00>, |01>, |10>, |11> with Alice's qubit first.

#include <span>

#include <Eigen/Core>

#include "quasibell/model.hpp"

namespace quasibell::oracle {

using DensityMatrix = Eigen::Matrix4cd;

// (|01> - |10>) / sqrt(2).
DensityMatrix singlet_state();

// |psi(theta_a)> (x) |psi(theta_b)> with
// |psi(theta)> = cos(theta/2)|0> + sin(theta/2)|1>.
DensityMatrix product_state(double theta_a, double theta_b);

DensityMatrix maximally_mixed_state();

// Throws DomainError unless rho is Hermitian, unit trace and PSD within
// tolerance.
void require_physical(const DensityMatrix& rho, double tolerance = 1e-9);

Behavior quantum_behavior(const DensityMatrix& rho,
                          std::span<const double> angles_a,
                          std::span<const double> angles_b,
                          double tolerance = 1e-9);

}  // namespace quasibell::oracle

#endif  // QUASIBELL_ORACLE_QUANTUM_HPP_
