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

#include "cohlab/field.hpp"

#include <cmath>

namespace cohlab {

void FieldConfig::validate() const {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        raise(ErrorCode::InvalidArgument, "FieldConfig: omega must be positive and finite");
    }
    if (!(std::abs(amplitude) > 0.0) || !std::isfinite(std::abs(amplitude))) {
        raise(ErrorCode::InvalidArgument, "FieldConfig: |C| must be positive and finite");
    }
    for (double k : wave_vector) {
        if (!std::isfinite(k)) {
            raise(ErrorCode::InvalidArgument, "FieldConfig: wave vector must be finite");
        }
    }
}

double field_phase(const FieldConfig& cfg, const SpaceTimePoint& x) {
    return cfg.wave_vector[0] * x.r[0] + cfg.wave_vector[1] * x.r[1] +
           cfg.wave_vector[2] * x.r[2] - cfg.omega * x.t;
}

double resolve_theta(const PhasePair& pair, const FieldConfig& cfg) {
    cfg.validate();
    double theta;
    if (pair.direct_theta) {
        theta = *pair.direct_theta;
    } else {
        theta = field_phase(cfg, pair.x2) - field_phase(cfg, pair.x1);
    }
    if (!std::isfinite(theta)) {
        raise(ErrorCode::InvalidArgument, "resolve_theta: theta is not finite");
    }
    return theta;
}

double reduce_theta(double theta) {
    const double two_pi = 2.0 * std::numbers::pi;
    double t = std::remainder(theta, two_pi);  // (-pi, pi] up to the boundary
    if (t <= -std::numbers::pi) t += two_pi;
    return t;
}

}  // namespace cohlab
