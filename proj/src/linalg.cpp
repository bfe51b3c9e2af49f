// Copyright 2026 The bosefid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bosefid/linalg.hpp"

#include <string>

#include "bosefid/errors.hpp"

namespace bosefid {

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix d = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

void validate_unitary(const ComplexMatrix& u, double tolerance) {
  if (u.rows() != u.cols() || u.rows() == 0) {
    throw DimensionError("network matrix must be square and non-empty");
  }
  const double defect = unitarity_defect(u);
  if (!(defect <= tolerance)) {
    throw ValidationError("network matrix is not unitary (defect " + std::to_string(defect) + ")");
  }
}

double hermiticity_defect(const ComplexMatrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double min_hermitian_eigenvalue(const ComplexMatrix& a) {
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double hermitian_trace_norm(const ComplexMatrix& a) {
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace bosefid
