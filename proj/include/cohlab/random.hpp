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

#ifndef COHLAB_RANDOM_HPP
#define COHLAB_RANDOM_HPP

#include <cstdint>
#include <random>

#include "cohlab/field.hpp"
#include "cohlab/state.hpp"

namespace cohlab {

/// Reproducible state/parameter sampler, "cohlab-prng-v1".
///
/// Everything flows from one 64-bit seed through std::mt19937_64 (fully
/// specified by the standard). Derived draws avoid the implementation-defined
/// standard-library distributions:
///   uniform [0,1):      (engine() >> 11) * 2^-53
///   standard normals:   Box-Muller on (1-u1, u2), pairs consumed in order
///   complex normal:     (z0 + i z1) / sqrt(2)
///   pure state:         i.i.d. complex normal amplitudes on the safe
///                       occupations (0..dim-3 per mode), then normalized,
///                       embedded at full truncation
///   mixed state:        3 pure states with Dirichlet(1,1,1) weights
///                       (w_i = e_i / sum e, e_i = -ln u_i)
///   theta:              2 pi u
///   amplitude constant: |C| = 0.5 + 1.5 u, phase 2 pi u'
class StateSampler {
  public:
    explicit StateSampler(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for a named sub-task; keeps check suites decoupled
    /// from each other's consumption order.
    static StateSampler substream(std::uint64_t seed, std::uint64_t stream_index) {
        return StateSampler(seed ^ (0x9E3779B97F4A7C15ull * (stream_index + 1)));
    }

    double uniform();                  // [0, 1)
    double normal();                   // N(0, 1)
    Complex complex_normal();          // E|z|^2 = 1
    double theta();                    // [0, 2 pi)
    Complex amplitude_constant();      // |C| in [0.5, 2], random phase
    int dim_in(int lo, int hi);        // uniform integer in [lo, hi]

    QuantumState pure_state(int dim, int n_modes);
    QuantumState mixed_state(int dim, int n_modes);

  private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool have_spare_ = false;

    Eigen::VectorXcd safe_ket(int dim, int n_modes);
};

}  // namespace cohlab

#endif  // COHLAB_RANDOM_HPP
