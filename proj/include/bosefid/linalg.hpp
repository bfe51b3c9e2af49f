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

#ifndef BOSEFID_LINALG_HPP
#define BOSEFID_LINALG_HPP

#include <complex>

#include <Eigen/Dense>

namespace bosefid {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

/// Largest |(U^dagger U - I)_{ij}|.
double unitarity_defect(const ComplexMatrix& u);

/// Throws ValidationError unless `u` is square and unitary to `tolerance`.
void validate_unitary(const ComplexMatrix& u, double tolerance = 1e-10);

/// Largest |A_{ij} - conj(A_{ji})|.
double hermiticity_defect(const ComplexMatrix& a);

/// Smallest eigenvalue of the Hermitian part of `a`.
double min_hermitian_eigenvalue(const ComplexMatrix& a);

/// Sum of absolute eigenvalues of the Hermitian part of `a`.
double hermitian_trace_norm(const ComplexMatrix& a);

}  // namespace bosefid

#endif  // BOSEFID_LINALG_HPP
