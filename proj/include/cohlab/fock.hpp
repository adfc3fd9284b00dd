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

#ifndef COHLAB_FOCK_HPP
#define COHLAB_FOCK_HPP

#include "cohlab/matrix.hpp"

namespace cohlab {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 256;
inline constexpr int kDefaultDim = 32;

/// States must keep this many top Fock levels unpopulated so that operators
/// quadratic in the ladder operators act exactly in the truncated space.
inline constexpr int kSafeMargin = 3;

/// Population allowed above the safe level before an operation that relies on
/// canonical commutators refuses the state.
inline constexpr double kTruncationEps = 1e-10;

/// Highest occupation a state may populate at the given truncation.
inline int safe_max_occupation(int dim) { return dim - kSafeMargin; }

void require_dim(int dim, const char* who);

/// Annihilation operator on the Fock basis |0>..|dim-1>: a|n> = sqrt(n)|n-1>.
ComplexMatrix annihilation(int dim);

/// Creation operator, adjoint of annihilation (truncated at the top level).
ComplexMatrix creation(int dim);

/// Number operator diag(0, 1, ..., dim-1).
ComplexMatrix number_operator(int dim);

}  // namespace cohlab

#endif  // COHLAB_FOCK_HPP
