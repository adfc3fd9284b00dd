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

#include "cohlab/fock.hpp"

#include <cmath>

namespace cohlab {

void require_dim(int dim, const char* who) {
    if (dim < kMinDim || dim > kMaxDim) {
        raise(ErrorCode::InvalidDimension,
              std::string(who) + ": dim must be in [" + std::to_string(kMinDim) + ", " +
                  std::to_string(kMaxDim) + "], got " + std::to_string(dim));
    }
}

ComplexMatrix annihilation(int dim) {
    require_dim(dim, "annihilation");
    ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

ComplexMatrix creation(int dim) {
    return annihilation(dim).adjoint();
}

ComplexMatrix number_operator(int dim) {
    require_dim(dim, "number_operator");
    ComplexMatrix n = ComplexMatrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        n(k, k) = static_cast<double>(k);
    }
    return n;
}

}  // namespace cohlab
