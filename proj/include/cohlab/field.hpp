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

#ifndef COHLAB_FIELD_HPP
#define COHLAB_FIELD_HPP

#include <array>
#include <complex>
#include <numbers>
#include <optional>

#include "cohlab/error.hpp"

namespace cohlab {

/// Monochromatic plane-wave parameters. The amplitude constant is
/// dimensionless with default 1; wave vector and angular frequency default to
/// a unit-wavelength, unit-period wave and only matter when a phase is
/// resolved from explicit space-time points.
struct FieldConfig {
    std::complex<double> amplitude{1.0, 0.0};
    std::array<double, 3> wave_vector{2.0 * std::numbers::pi, 0.0, 0.0};
    double omega = 2.0 * std::numbers::pi;

    double intensity_scale() const { return std::norm(amplitude); }  // |C|^2
    void validate() const;
};

struct SpaceTimePoint {
    std::array<double, 3> r{0.0, 0.0, 0.0};
    double t = 0.0;
};

/// Two space-time points, or a directly supplied phase angle. Everything a
/// pair of points contributes to plane-wave coherence reduces to the single
/// angle theta = k.(r2 - r1) - omega (t2 - t1).
struct PhasePair {
    std::optional<double> direct_theta;
    SpaceTimePoint x1;
    SpaceTimePoint x2;

    static PhasePair direct(double theta) {
        PhasePair p;
        p.direct_theta = theta;
        return p;
    }
    static PhasePair points(const SpaceTimePoint& x1, const SpaceTimePoint& x2) {
        PhasePair p;
        p.x1 = x1;
        p.x2 = x2;
        return p;
    }
};

/// Plane-wave phase k.r - omega t at one point.
double field_phase(const FieldConfig& cfg, const SpaceTimePoint& x);

double resolve_theta(const PhasePair& pair, const FieldConfig& cfg);

/// Canonical representative of theta in (-pi, pi]; reporting only, the
/// computation always uses the unreduced angle.
double reduce_theta(double theta);

}  // namespace cohlab

#endif  // COHLAB_FIELD_HPP
