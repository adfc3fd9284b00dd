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

#include "cohlab/random.hpp"

#include <cmath>
#include <numbers>

namespace cohlab {

double StateSampler::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double StateSampler::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_normal_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_normal_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

Complex StateSampler::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

double StateSampler::theta() {
    return 2.0 * std::numbers::pi * uniform();
}

Complex StateSampler::amplitude_constant() {
    const double mag = 0.5 + 1.5 * uniform();
    const double phase = 2.0 * std::numbers::pi * uniform();
    return std::polar(mag, phase);
}

int StateSampler::dim_in(int lo, int hi) {
    // Rejection-free enough for small ranges; bias is < 2^-53 per draw.
    return lo + static_cast<int>(uniform() * (hi - lo + 1));
}

Eigen::VectorXcd StateSampler::safe_ket(int dim, int n_modes) {
    const int levels = safe_max_occupation(dim) + 1;
    const Eigen::Index total = n_modes == 1 ? dim : static_cast<Eigen::Index>(dim) * dim;
    Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(total);
    if (n_modes == 1) {
        for (int n = 0; n < levels; ++n) ket(n) = complex_normal();
    } else {
        for (int nh = 0; nh < levels; ++nh) {
            for (int nv = 0; nv < levels; ++nv) {
                ket(static_cast<Eigen::Index>(nh) * dim + nv) = complex_normal();
            }
        }
    }
    ket.normalize();
    return ket;
}

QuantumState StateSampler::pure_state(int dim, int n_modes) {
    QuantumState state;
    state.dim_per_mode = dim;
    state.n_modes = n_modes;
    Eigen::VectorXcd ket = safe_ket(dim, n_modes);
    state.rho = ket * ket.adjoint();
    state.label = "random-pure";
    state.ensemble.push_back({1.0, std::move(ket)});
    return state;
}

QuantumState StateSampler::mixed_state(int dim, int n_modes) {
    constexpr int kComponents = 3;
    double raw[kComponents];
    double sum = 0.0;
    for (double& w : raw) {
        w = -std::log(1.0 - uniform());
        sum += w;
    }
    QuantumState state;
    state.dim_per_mode = dim;
    state.n_modes = n_modes;
    state.label = "random-mixed";
    const Eigen::Index total = n_modes == 1 ? dim : static_cast<Eigen::Index>(dim) * dim;
    state.rho = ComplexMatrix::Zero(total, total);
    for (double w : raw) {
        Eigen::VectorXcd ket = safe_ket(dim, n_modes);
        const double weight = w / sum;
        state.rho += weight * (ket * ket.adjoint());
        state.ensemble.push_back({weight, std::move(ket)});
    }
    return state;
}

}  // namespace cohlab
