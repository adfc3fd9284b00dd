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

#include "cohlab/state.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace cohlab {

namespace {

constexpr double kStateHermTol = 1e-12;
constexpr double kTraceTol = 1e-10;
constexpr double kEigTol = 1e-10;
constexpr double kSupportEps = 1e-12;

void require_state_dim(int dim, const char* who) {
    // States need the full safe margin below the truncation edge.
    require_dim(dim, who);
    if (safe_max_occupation(dim) < 0) {
        raise(ErrorCode::InvalidDimension,
              std::string(who) + ": dim " + std::to_string(dim) +
                  " leaves no room below the truncation guard levels");
    }
}

QuantumState from_ket(Eigen::VectorXcd ket, int dim_per_mode, int n_modes, std::string label) {
    QuantumState state;
    state.dim_per_mode = dim_per_mode;
    state.n_modes = n_modes;
    state.rho = ket * ket.adjoint();
    state.label = std::move(label);
    state.ensemble.push_back({1.0, std::move(ket)});
    return state;
}

int occupation_of_index(const QuantumState& state, Eigen::Index i, int mode) {
    if (state.n_modes == 1) return static_cast<int>(i);
    return mode == 0 ? static_cast<int>(i / state.dim_per_mode)
                     : static_cast<int>(i % state.dim_per_mode);
}

std::string fmt_complex(Complex z) {
    std::ostringstream out;
    out << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return out.str();
}

}  // namespace

void QuantumState::validate() const {
    if (n_modes != 1 && n_modes != 2) {
        raise(ErrorCode::InvalidStateSpec, "state: n_modes must be 1 or 2");
    }
    Eigen::Index expected = dim_per_mode;
    if (n_modes == 2) expected *= dim_per_mode;
    if (rho.rows() != expected || rho.cols() != expected) {
        raise(ErrorCode::InvalidStateSpec, "state: rho dimension does not match modes");
    }
    if (!all_finite(rho)) {
        raise(ErrorCode::InvalidStateSpec, "state: rho has non-finite entries");
    }
    if (max_abs(rho - rho.adjoint()) > kStateHermTol * std::max(1.0, max_abs(rho))) {
        raise(ErrorCode::InvalidStateSpec, "state: rho is not Hermitian");
    }
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        raise(ErrorCode::InvalidStateSpec,
              "state: tr(rho) = " + std::to_string(tr) + ", expected 1");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (rho + rho.adjoint()),
                                                        Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kEigTol) {
        raise(ErrorCode::InvalidStateSpec,
              "state: rho has eigenvalue " + std::to_string(solver.eigenvalues().minCoeff()));
    }
}

double QuantumState::purity() const {
    return (rho * rho).trace().real();
}

double QuantumState::unsafe_population() const {
    const int top = safe_max_occupation(dim_per_mode);
    double pop = 0.0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        const bool unsafe = n_modes == 1
                                ? occupation_of_index(*this, i, 0) > top
                                : occupation_of_index(*this, i, 0) > top ||
                                      occupation_of_index(*this, i, 1) > top;
        if (unsafe) pop += rho(i, i).real();
    }
    return pop;
}

int QuantumState::max_supported_photons() const {
    int best = 0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        if (rho(i, i).real() > kSupportEps) {
            int total = n_modes == 1 ? occupation_of_index(*this, i, 0)
                                     : occupation_of_index(*this, i, 0) +
                                           occupation_of_index(*this, i, 1);
            best = std::max(best, total);
        }
    }
    return best;
}

void require_safe_support(const QuantumState& state, const char* who) {
    const double pop = state.unsafe_population();
    if (pop >= kTruncationEps) {
        std::ostringstream msg;
        msg << who << ": state '" << state.label << "' has population " << pop
            << " above Fock level " << safe_max_occupation(state.dim_per_mode)
            << " (truncation guard)";
        raise(ErrorCode::Truncation, msg.str());
    }
}

QuantumState number_state(int n, int dim) {
    require_state_dim(dim, "number_state");
    if (n < 0) raise(ErrorCode::InvalidStateSpec, "number_state: n must be nonnegative");
    if (n > safe_max_occupation(dim)) {
        raise(ErrorCode::Truncation,
              "number_state: n = " + std::to_string(n) + " exceeds safe occupation " +
                  std::to_string(safe_max_occupation(dim)) + " at dim " + std::to_string(dim));
    }
    Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(dim);
    ket(n) = 1.0;
    return from_ket(std::move(ket), dim, 1, "number(" + std::to_string(n) + ")");
}

QuantumState coherent_state(Complex alpha, int dim) {
    require_state_dim(dim, "coherent_state");
    const int top = safe_max_occupation(dim);
    const double mean = std::norm(alpha);
    if (mean > 0.25 * top) {
        raise(ErrorCode::Truncation,
              "coherent_state: |alpha|^2 = " + std::to_string(mean) +
                  " exceeds the (dim-3)/4 guard at dim " + std::to_string(dim));
    }
    // c_n = e^{-|a|^2/2} a^n / sqrt(n!) via the stable recurrence.
    Eigen::VectorXcd ket(dim);
    Complex c = std::exp(-0.5 * mean);
    ket(0) = c;
    double safe_mass = std::norm(c);
    for (int n = 1; n < dim; ++n) {
        c *= alpha / std::sqrt(static_cast<double>(n));
        ket(n) = c;
        if (n <= top) safe_mass += std::norm(c);
    }
    // The full series sums to one, so 1 - safe mass is everything living at
    // the guard levels or beyond the truncation.
    const double tail = 1.0 - safe_mass;
    if (tail >= kTruncationEps) {
        std::ostringstream msg;
        msg << "coherent_state: tail population " << tail << " above safe level " << top
            << " at dim " << dim;
        raise(ErrorCode::Truncation, msg.str());
    }
    ket.normalize();
    return from_ket(std::move(ket), dim, 1, "coherent(" + fmt_complex(alpha) + ")");
}

QuantumState thermal_state(double nbar, int dim) {
    require_state_dim(dim, "thermal_state");
    if (!(nbar > 0.0) || !std::isfinite(nbar)) {
        raise(ErrorCode::InvalidStateSpec, "thermal_state: nbar must be positive");
    }
    const int top = safe_max_occupation(dim);
    const double r = nbar / (1.0 + nbar);
    // Geometric distribution p_n = (1-r) r^n; mass above the safe level is
    // r^{top+1} exactly.
    const double tail = std::pow(r, top + 1);
    if (tail >= kTruncationEps) {
        std::ostringstream msg;
        msg << "thermal_state: tail population " << tail << " above safe level " << top
            << " at dim " << dim << " (nbar = " << nbar << ")";
        raise(ErrorCode::Truncation, msg.str());
    }
    Eigen::VectorXd p(dim);
    double w = 1.0 - r;
    for (int n = 0; n < dim; ++n) {
        p(n) = w;
        w *= r;
    }
    p /= p.sum();

    QuantumState state;
    state.dim_per_mode = dim;
    state.n_modes = 1;
    state.rho = ComplexMatrix::Zero(dim, dim);
    state.label = "thermal(" + std::to_string(nbar) + ")";
    for (int n = 0; n < dim; ++n) {
        state.rho(n, n) = p(n);
        Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(dim);
        ket(n) = 1.0;
        state.ensemble.push_back({p(n), std::move(ket)});
    }
    return state;
}

QuantumState superposition(const std::vector<SuperpositionTerm>& terms, int dim, int n_modes) {
    require_state_dim(dim, "superposition");
    if (n_modes != 1 && n_modes != 2) {
        raise(ErrorCode::InvalidStateSpec, "superposition: n_modes must be 1 or 2");
    }
    if (terms.empty()) {
        raise(ErrorCode::InvalidStateSpec, "superposition: no terms given");
    }
    const int top = safe_max_occupation(dim);
    const Eigen::Index total = n_modes == 1 ? dim : static_cast<Eigen::Index>(dim) * dim;
    Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(total);
    for (const auto& term : terms) {
        if (static_cast<int>(term.occupation.size()) != n_modes) {
            raise(ErrorCode::InvalidStateSpec,
                  "superposition: occupation arity does not match mode count");
        }
        Eigen::Index index = 0;
        for (int m = 0; m < n_modes; ++m) {
            const int occ = term.occupation[m];
            if (occ < 0 || occ >= dim) {
                raise(ErrorCode::Truncation,
                      "superposition: occupation " + std::to_string(occ) +
                          " outside the truncated space (dim " + std::to_string(dim) + ")");
            }
            if (occ > top) {
                raise(ErrorCode::Truncation,
                      "superposition: occupation " + std::to_string(occ) +
                          " exceeds safe occupation " + std::to_string(top));
            }
            index = index * dim + occ;
        }
        ket(index) += term.amplitude;
    }
    const double norm = ket.norm();
    if (!(norm > 0.0)) {
        raise(ErrorCode::InvalidStateSpec, "superposition: amplitudes sum to the zero vector");
    }
    ket /= norm;
    return from_ket(std::move(ket), dim, n_modes, "superposition");
}

QuantumState state_from_density(const ComplexMatrix& rho, int dim_per_mode, int n_modes,
                                const std::string& label) {
    QuantumState state;
    state.dim_per_mode = dim_per_mode;
    state.n_modes = n_modes;
    state.rho = rho;
    state.label = label;
    require_state_dim(dim_per_mode, "state_from_density");
    state.validate();
    return state;
}

void StateSpec::validate_shape() const {
    if (modes != 1 && modes != 2) {
        raise(ErrorCode::InvalidStateSpec, "state spec: modes must be 1 or 2");
    }
    switch (kind) {
        case Kind::Number:
            if (n < 0) raise(ErrorCode::InvalidStateSpec, "state spec: number n < 0");
            break;
        case Kind::Coherent:
        case Kind::Thermal:
            if (modes != 1) {
                raise(ErrorCode::InvalidStateSpec,
                      "state spec: coherent/thermal are single-mode kinds; combine them "
                      "with a two-mode product spec");
            }
            break;
        case Kind::Superposition: {
            if (terms.empty()) {
                raise(ErrorCode::InvalidStateSpec, "state spec: superposition without terms");
            }
            double mass = 0.0;
            for (const auto& term : terms) {
                if (static_cast<int>(term.occupation.size()) != modes) {
                    raise(ErrorCode::InvalidStateSpec,
                          "state spec: superposition term arity does not match modes");
                }
                mass += std::norm(term.amplitude);
            }
            if (!(mass > 0.0)) {
                raise(ErrorCode::InvalidStateSpec,
                      "state spec: superposition amplitudes are all zero");
            }
            break;
        }
        case Kind::Product:
            if (modes != 2 || factors.size() != 2) {
                raise(ErrorCode::InvalidStateSpec, "state spec: product needs h and v factors");
            }
            for (const auto& f : factors) {
                if (f.modes != 1) {
                    raise(ErrorCode::InvalidStateSpec,
                          "state spec: product factors must be single-mode");
                }
                f.validate_shape();
            }
            break;
        case Kind::Density:
            if (rho.rows() == 0 || rho.rows() != rho.cols()) {
                raise(ErrorCode::InvalidStateSpec, "state spec: density matrix must be square");
            }
            break;
    }
}

QuantumState realize(const StateSpec& spec, int dim_per_mode) {
    spec.validate_shape();
    switch (spec.kind) {
        case StateSpec::Kind::Number: {
            if (spec.modes == 1) return number_state(spec.n, dim_per_mode);
            raise(ErrorCode::InvalidStateSpec,
                  "state spec: two-mode number states go through a product spec");
        }
        case StateSpec::Kind::Coherent:
            return coherent_state(spec.alpha, dim_per_mode);
        case StateSpec::Kind::Thermal:
            return thermal_state(spec.nbar, dim_per_mode);
        case StateSpec::Kind::Superposition:
            return superposition(spec.terms, dim_per_mode, spec.modes);
        case StateSpec::Kind::Product:
            return product_state(spec.factors[0], spec.factors[1], dim_per_mode);
        case StateSpec::Kind::Density: {
            const Eigen::Index expected = spec.modes == 1
                                              ? dim_per_mode
                                              : static_cast<Eigen::Index>(dim_per_mode) * dim_per_mode;
            if (spec.rho.rows() != expected) {
                raise(ErrorCode::DimensionMismatch,
                      "state spec: density matrix is " + std::to_string(spec.rho.rows()) +
                          "-dimensional, expected " + std::to_string(expected));
            }
            return state_from_density(spec.rho, dim_per_mode, spec.modes);
        }
    }
    raise(ErrorCode::Internal, "realize: unhandled spec kind");
}

QuantumState product_state(const StateSpec& spec_h, const StateSpec& spec_v, int dim) {
    if (spec_h.modes != 1 || spec_v.modes != 1) {
        raise(ErrorCode::InvalidStateSpec, "product_state: factors must be single-mode");
    }
    QuantumState h = realize(spec_h, dim);
    QuantumState v = realize(spec_v, dim);

    QuantumState state;
    state.dim_per_mode = dim;
    state.n_modes = 2;
    state.rho = tensor(h.rho, v.rho);
    state.label = h.label + " (x) " + v.label;
    if (!h.ensemble.empty() && !v.ensemble.empty()) {
        for (const auto& th : h.ensemble) {
            for (const auto& tv : v.ensemble) {
                Eigen::VectorXcd ket(static_cast<Eigen::Index>(dim) * dim);
                for (int i = 0; i < dim; ++i) {
                    ket.segment(static_cast<Eigen::Index>(i) * dim, dim) = th.ket(i) * tv.ket;
                }
                state.ensemble.push_back({th.weight * tv.weight, std::move(ket)});
            }
        }
    }
    return state;
}

Complex expectation(const QuantumState& state, const ComplexMatrix& op) {
    require_square(op, "expectation");
    if (op.rows() != state.total_dim()) {
        raise(ErrorCode::DimensionMismatch,
              "expectation: operator dim " + std::to_string(op.rows()) +
                  " vs state dim " + std::to_string(state.total_dim()));
    }
    if (!state.ensemble.empty()) {
        Complex acc = 0.0;
        for (const auto& term : state.ensemble) {
            acc += term.weight * term.ket.dot(op * term.ket);
        }
        return acc;
    }
    // tr(rho op) without forming the product.
    return (state.rho.transpose().cwiseProduct(op)).sum();
}

double std_dev(const QuantumState& state, const ComplexMatrix& op) {
    const HermitianCheck herm = check_hermitian(op);
    if (!herm.passes()) {
        raise(ErrorCode::NotHermitian,
              "std_dev: operator fails Hermiticity (asymmetry " +
                  std::to_string(herm.max_asymmetry) + ")");
    }
    if (op.rows() != state.total_dim()) {
        raise(ErrorCode::DimensionMismatch, "std_dev: operator/state dimensions differ");
    }
    double mean = 0.0;
    double second = 0.0;
    if (!state.ensemble.empty()) {
        for (const auto& term : state.ensemble) {
            const Eigen::VectorXcd applied = op * term.ket;
            mean += term.weight * term.ket.dot(applied).real();
            second += term.weight * applied.squaredNorm();
        }
    } else {
        const ComplexMatrix rho_op = state.rho * op;
        mean = rho_op.trace().real();
        second = (rho_op.transpose().cwiseProduct(op)).sum().real();
    }
    double variance = second - mean * mean;
    const double floor = -1e-12 * std::max(1.0, std::abs(second));
    if (variance < floor) {
        raise(ErrorCode::Numerical,
              "std_dev: variance " + std::to_string(variance) + " below rounding floor");
    }
    if (variance < 0.0) variance = 0.0;
    return std::sqrt(variance);
}

}  // namespace cohlab
