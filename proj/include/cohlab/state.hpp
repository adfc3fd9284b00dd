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

#ifndef COHLAB_STATE_HPP
#define COHLAB_STATE_HPP

#include <memory>
#include <string>
#include <vector>

#include "cohlab/fock.hpp"
#include "cohlab/matrix.hpp"

namespace cohlab {

/// Density matrix on a truncated Fock space: a single mode of dimension
/// dim_per_mode, or two modes on the h(x)v product space (h slow index).
///
/// States constructed from kets also carry the pure-state ensemble that
/// realizes rho; expectation values and variances then run in O(dim^2)
/// without forming matrix products. rho stays the source of truth and both
/// routes are pinned equal by tests.
struct QuantumState {
    int dim_per_mode = 0;
    int n_modes = 1;
    ComplexMatrix rho;
    std::string label;

    struct EnsembleTerm {
        double weight;
        Eigen::VectorXcd ket;
    };
    std::vector<EnsembleTerm> ensemble;  // empty for raw density input

    Eigen::Index total_dim() const { return rho.rows(); }
    bool is_pure_ket() const { return ensemble.size() == 1; }

    /// Hermiticity (1e-12), unit trace (1e-10), positive semidefiniteness
    /// (eigenvalues >= -1e-10). Throws InvalidStateSpec on violation.
    void validate() const;

    /// tr(rho^2).
    double purity() const;

    /// Total population at occupations above safe_max_occupation(dim) in any
    /// mode.
    double unsafe_population() const;

    /// Largest total photon number carried by basis states with population
    /// above 1e-12.
    int max_supported_photons() const;
};

/// Throws TruncationError if the state populates the guard levels near the
/// truncation edge beyond kTruncationEps. Operations whose results rely on
/// canonical commutation call this first.
void require_safe_support(const QuantumState& state, const char* who);

// -- constructors ----------------------------------------------------------

QuantumState number_state(int n, int dim);
QuantumState coherent_state(Complex alpha, int dim);
QuantumState thermal_state(double nbar, int dim);

struct SuperpositionTerm {
    Complex amplitude;
    std::vector<int> occupation;  // one entry per mode
};

QuantumState superposition(const std::vector<SuperpositionTerm>& terms, int dim, int n_modes);

/// Validated mixed-state entry point for raw density matrices.
QuantumState state_from_density(const ComplexMatrix& rho, int dim_per_mode, int n_modes,
                                const std::string& label = "density");

// -- parsed state descriptions ----------------------------------------------

/// Parsed description of a state, decoupled from any truncation dimension.
struct StateSpec {
    enum class Kind { Number, Coherent, Thermal, Superposition, Product, Density };

    Kind kind = Kind::Number;
    int modes = 1;

    int n = 0;                           // Number
    Complex alpha{0.0, 0.0};             // Coherent
    double nbar = 0.0;                   // Thermal
    std::vector<SuperpositionTerm> terms;  // Superposition
    std::vector<StateSpec> factors;      // Product: [h, v]
    ComplexMatrix rho;                   // Density

    /// Structural checks that need no dimension (amplitudes not all zero,
    /// occupation arity, single-mode factors, ...).
    void validate_shape() const;
};

/// Builds the state a spec describes at the given truncation.
QuantumState realize(const StateSpec& spec, int dim_per_mode);

QuantumState product_state(const StateSpec& spec_h, const StateSpec& spec_v, int dim);

// -- moments ----------------------------------------------------------------

/// tr(rho op).
Complex expectation(const QuantumState& state, const ComplexMatrix& op);

/// sqrt(<op^2> - <op>^2) for Hermitian op. Tiny negative variances from
/// cancellation are clamped to zero; anything beyond the rounding scale is a
/// NumericalFailure.
double std_dev(const QuantumState& state, const ComplexMatrix& op);

}  // namespace cohlab

#endif  // COHLAB_STATE_HPP
