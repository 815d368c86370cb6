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

#include "quasibell/oracle/quantum.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace quasibell::oracle {
namespace {

using Qubit = Eigen::Matrix2cd;

Qubit projector(double theta, int outcome) {
  Qubit z;
  z << 1.0, 0.0, 0.0, -1.0;
  Qubit x;
  x << 0.0, 1.0, 1.0, 0.0;
  const Qubit observable = std::cos(theta) * z + std::sin(theta) * x;
  return 0.5 * (Qubit::Identity() + static_cast<double>(outcome) * observable);
}

}  // namespace

DensityMatrix singlet_state() {
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

DensityMatrix product_state(double theta_a, double theta_b) {
  Eigen::Vector2cd a(std::cos(theta_a / 2.0), std::sin(theta_a / 2.0));
  Eigen::Vector2cd b(std::cos(theta_b / 2.0), std::sin(theta_b / 2.0));
  const Eigen::Vector4cd psi = Eigen::kroneckerProduct(a, b);
  return psi * psi.adjoint();
}

DensityMatrix maximally_mixed_state() { return DensityMatrix::Identity() / 4.0; }

void require_physical(const DensityMatrix& rho, double tolerance) {
  if (!rho.allFinite()) throw DomainError("density matrix has non-finite entries");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tolerance) {
    throw DomainError("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) > tolerance) {
    throw DomainError("density matrix trace is not 1");
  }
  const Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(rho);
  if (solver.eigenvalues().minCoeff() < -tolerance) {
    throw DomainError("density matrix is not positive semidefinite");
  }
}

Behavior quantum_behavior(const DensityMatrix& rho,
                          std::span<const double> angles_a,
                          std::span<const double> angles_b, double tolerance) {
  require_physical(rho, tolerance);
  if (angles_a.empty() || angles_b.empty()) {
    throw DomainError("need at least one measurement angle per party");
  }
  std::vector<OutcomeRow<double>> rows;
  rows.reserve(angles_a.size() * angles_b.size());
  for (double theta_a : angles_a) {
    for (double theta_b : angles_b) {
      OutcomeRow<double> row{};
      for (std::size_t ia = 0; ia < 2; ++ia) {
        for (std::size_t ib = 0; ib < 2; ++ib) {
          const DensityMatrix effect =
              Eigen::kroneckerProduct(projector(theta_a, outcome_value(ia)),
                                      projector(theta_b, outcome_value(ib)));
          row[cell_index(ia, ib)] = (effect * rho).trace().real();
        }
      }
      rows.push_back(row);
    }
  }
  return Behavior(angles_a.size(), angles_b.size(), std::move(rows), tolerance);
}

}  // namespace quasibell::oracle
