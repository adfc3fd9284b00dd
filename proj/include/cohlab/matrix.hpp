// Copyright 2026 The cohlab Authors
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

#ifndef COHLAB_MATRIX_HPP
#define COHLAB_MATRIX_HPP

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cohlab/error.hpp"

namespace cohlab {

using Complex = std::complex<double>;

/// Dense square complex matrix; the representation for every operator in the
/// library (ladder operators, number operators, Stokes operators, coherence
/// operators, density matrices).
using ComplexMatrix = Eigen::MatrixXcd;

/// Result of a Hermiticity test: max |A - A^dagger| entrywise against the
/// tolerance it was tested at.
struct HermitianCheck {
    double max_asymmetry = 0.0;
    double tolerance = 0.0;

    bool passes() const { return max_asymmetry <= tolerance; }
};

/// Relative Hermiticity tolerance: 1e-12 x (max entry magnitude). Products of
/// sqrt(n) ladder factors accumulate rounding proportional to entry size.
inline constexpr double kHermitianRelTol = 1e-12;

void require_square(const ComplexMatrix& a, const char* who);
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* who);
bool all_finite(const ComplexMatrix& a);

double max_abs(const ComplexMatrix& a);

/// Tests A against its adjoint at kHermitianRelTol x max|entry|.
HermitianCheck check_hermitian(const ComplexMatrix& a);

/// Kronecker product. Convention everywhere in this library: the first factor
/// is the h mode and carries the slow (most significant) index, the second is
/// the v mode.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Splits op into Hermitian components (H', H'') with op = H' + i H'':
/// H' = (op + op^dagger)/2, H'' = (op - op^dagger)/(2i).
std::pair<ComplexMatrix, ComplexMatrix> hermitian_parts(const ComplexMatrix& op);

/// Basis indices of the two-mode product space whose occupations stay at or
/// below max_occupation in every mode (h-slow index ordering).
std::vector<Eigen::Index> occupation_bounded_indices(int dim_per_mode, int n_modes,
                                                     int max_occupation);

/// Max |entry| of a over the rows/columns listed in idx.
double max_abs_on_block(const ComplexMatrix& a, const std::vector<Eigen::Index>& idx);

}  // namespace cohlab

#endif  // COHLAB_MATRIX_HPP
