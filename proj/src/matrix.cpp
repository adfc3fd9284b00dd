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

#include "cohlab/matrix.hpp"

#include <cmath>

namespace cohlab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvalidDimension: return "InvalidDimension";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::Truncation: return "TruncationError";
        case ErrorCode::Parse: return "ParseError";
        case ErrorCode::InvalidStateSpec: return "InvalidStateSpec";
        case ErrorCode::Numerical: return "NumericalFailure";
        case ErrorCode::InvalidIndexPair: return "InvalidIndexPair";
        case ErrorCode::Io: return "IoError";
        case ErrorCode::Internal: return "InternalError";
    }
    return "UnknownError";
}

void require_square(const ComplexMatrix& a, const char* who) {
    if (a.rows() != a.cols()) {
        raise(ErrorCode::InvalidDimension,
              std::string(who) + ": matrix must be square, got " +
                  std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* who) {
    require_square(a, who);
    require_square(b, who);
    if (a.rows() != b.rows()) {
        raise(ErrorCode::DimensionMismatch,
              std::string(who) + ": dimensions differ (" + std::to_string(a.rows()) +
                  " vs " + std::to_string(b.rows()) + ")");
    }
}

bool all_finite(const ComplexMatrix& a) {
    return a.allFinite();
}

double max_abs(const ComplexMatrix& a) {
    if (a.size() == 0) return 0.0;
    return a.cwiseAbs().maxCoeff();
}

HermitianCheck check_hermitian(const ComplexMatrix& a) {
    require_square(a, "check_hermitian");
    HermitianCheck result;
    result.max_asymmetry = max_abs(a - a.adjoint());
    result.tolerance = kHermitianRelTol * std::max(1.0, max_abs(a));
    return result;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "tensor");
    require_square(b, "tensor");
    const Eigen::Index na = a.rows();
    const Eigen::Index nb = b.rows();
    ComplexMatrix out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; ++i) {
        for (Eigen::Index k = 0; k < na; ++k) {
            out.block(i * nb, k * nb, nb, nb) = a(i, k) * b;
        }
    }
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

std::pair<ComplexMatrix, ComplexMatrix> hermitian_parts(const ComplexMatrix& op) {
    require_square(op, "hermitian_parts");
    const ComplexMatrix adj = op.adjoint();
    ComplexMatrix real_part = 0.5 * (op + adj);
    // (op - adj)/(2i) written as -i/2 * (op - adj); the multiply by -i is an
    // exact component swap.
    ComplexMatrix imag_part = Complex(0.0, -0.5) * (op - adj);
    return {std::move(real_part), std::move(imag_part)};
}

std::vector<Eigen::Index> occupation_bounded_indices(int dim_per_mode, int n_modes,
                                                     int max_occupation) {
    std::vector<Eigen::Index> idx;
    if (max_occupation < 0) return idx;
    const int top = std::min(max_occupation, dim_per_mode - 1);
    if (n_modes == 1) {
        for (int n = 0; n <= top; ++n) idx.push_back(n);
    } else if (n_modes == 2) {
        for (int nh = 0; nh <= top; ++nh) {
            for (int nv = 0; nv <= top; ++nv) {
                idx.push_back(static_cast<Eigen::Index>(nh) * dim_per_mode + nv);
            }
        }
    } else {
        raise(ErrorCode::InvalidArgument, "occupation_bounded_indices: n_modes must be 1 or 2");
    }
    return idx;
}

double max_abs_on_block(const ComplexMatrix& a, const std::vector<Eigen::Index>& idx) {
    double worst = 0.0;
    for (Eigen::Index r : idx) {
        for (Eigen::Index c : idx) {
            worst = std::max(worst, std::abs(a(r, c)));
        }
    }
    return worst;
}

}  // namespace cohlab
