// raman.hpp — Second-order stimulated Raman amplitudes and rates for a chain
// of three-level atoms.
//
// One scattering event absorbs a photon at omega_plus (driving initial ->
// intermediate with the laser phase at each atom) and emits into the
// stimulated mode at omega_minus (intermediate -> final). The amplitude is
//
//   <fin| V_minus G V_plus |init>,   G = sum_m |m><m| / (E_init - E_m + omega_plus)
//
// with m running over the product eigenstates of the free atomic Hamiltonian.
// Only this time ordering is kept; counter-rotating terms are dropped.
// Energies are per-atom and additive across the chain, hbar = 1. Rates are
// reported as squared amplitudes summed over the degenerate final manifold,
// with the emitted frequency fixed on shell: omega_minus = omega_plus -
// (energy_f - energy_i).

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "ramanchain/hilbert.hpp"
#include "ramanchain/states.hpp"

namespace ramanchain {
namespace raman {

using hilbert::StateVector;
using hilbert::TransitionSum;

// --------------------------- Configuration ----------------------------------

struct RamanConfig {
    double energy_i = 0.0;   // level energies, units of the default detuning
    double energy_l = 2.0;
    double energy_f = 0.0;
    double omega_plus = 1.0; // absorbed photon frequency
    double field_plus = 1.0; // field amplitudes E+ and E-
    double field_minus = 1.0;
    cplx dipole_il{1.0, 0.0}; // dipole matrix elements of the two legs
    cplx dipole_fl{1.0, 0.0};
    states::LevelLabels labels{};

    double detuning() const { return energy_l - energy_i - omega_plus; }
    double omega_minus() const { return omega_plus - (energy_f - energy_i); }

    double level_energy(int level) const {
        if (level == labels.initial) return energy_i;
        if (level == labels.intermediate) return energy_l;
        if (level == labels.final_) return energy_f;
        throw std::invalid_argument("RamanConfig: level carries no energy assignment");
    }

    void validate() const {
        labels.validate();
        if (!(field_plus > 0.0) || !(field_minus > 0.0))
            throw std::invalid_argument("RamanConfig: field amplitudes must be positive");
        if (!(omega_minus() > 0.0))
            throw std::invalid_argument("RamanConfig: omega_minus must be positive on shell");
        if (detuning() == 0.0)
            throw singular_denominator_error("RamanConfig: zero detuning");
    }

    // Same level scheme, detuning moved to `delta` by placing the
    // intermediate level.
    static RamanConfig with_detuning(double delta) {
        RamanConfig cfg;
        cfg.energy_l = cfg.energy_i + cfg.omega_plus + delta;
        return cfg;
    }
};

// --------------------------- Geometry ----------------------------------------

struct Geometry {
    std::vector<Eigen::Vector3d> positions;
    Eigen::Vector3d k_laser = Eigen::Vector3d::UnitX();
    Eigen::Vector3d k_scattered = Eigen::Vector3d::UnitY();

    int num_atoms() const { return static_cast<int>(positions.size()); }

    // All atoms at the origin: every geometric phase is trivially equal.
    static Geometry uniform(int num_atoms) {
        Geometry g;
        g.positions.assign(static_cast<std::size_t>(num_atoms), Eigen::Vector3d::Zero());
        return g;
    }

    Geometry translated(const Eigen::Vector3d& shift) const {
        Geometry g = *this;
        for (auto& r : g.positions) r += shift;
        return g;
    }
};

// e^{i phi_a}, phi_a = (k_laser - k_scattered) . R_a.
inline std::vector<cplx> phase_factors(const Geometry& g) {
    const Eigen::Vector3d q = g.k_laser - g.k_scattered;
    std::vector<cplx> out;
    out.reserve(g.positions.size());
    for (const auto& r : g.positions)
        out.push_back(std::polar(1.0, q.dot(r)));
    return out;
}

// --------------------------- Interaction operators ---------------------------

// V+ = E+ d_il sum_a e^{i k_laser . R_a} (|l><i|)_a
inline TransitionSum absorption_operator(const RamanConfig& cfg, const Geometry& g) {
    cfg.validate();
    std::vector<cplx> weights;
    weights.reserve(g.positions.size());
    for (const auto& r : g.positions)
        weights.push_back(std::polar(1.0, g.k_laser.dot(r)));
    return TransitionSum(g.num_atoms(), 3, cfg.labels.intermediate, cfg.labels.initial,
                         cfg.field_plus * cfg.dipole_il, std::move(weights));
}

// V- = E- d_fl sum_a e^{-i k_scattered . R_a} (|f><l|)_a
inline TransitionSum emission_operator(const RamanConfig& cfg, const Geometry& g) {
    cfg.validate();
    std::vector<cplx> weights;
    weights.reserve(g.positions.size());
    for (const auto& r : g.positions)
        weights.push_back(std::polar(1.0, -g.k_scattered.dot(r)));
    return TransitionSum(g.num_atoms(), 3, cfg.labels.final_, cfg.labels.intermediate,
                         cfg.field_minus * cfg.dipole_fl, std::move(weights));
}

// --------------------------- Free-Hamiltonian bookkeeping --------------------

// Energy of one product basis state: sum of per-atom level energies.
inline double basis_energy(std::size_t index, int num_atoms, const RamanConfig& cfg) {
    double e = 0.0;
    for (int a = 0; a < num_atoms; ++a)
        e += cfg.level_energy(hilbert::level_at(index, a, num_atoms, 3));
    return e;
}

// Sharp energy of an eigenstate of the free Hamiltonian. Every basis state in
// the support must carry the same energy.
inline double eigenstate_energy(const StateVector& v, const RamanConfig& cfg) {
    double max_amp = 0.0;
    for (std::size_t idx = 0; idx < v.dim(); ++idx)
        max_amp = std::max(max_amp, std::abs(v[idx]));
    if (max_amp == 0.0) throw std::domain_error("eigenstate_energy: zero vector");

    bool found = false;
    double energy = 0.0;
    for (std::size_t idx = 0; idx < v.dim(); ++idx) {
        if (std::abs(v[idx]) <= 1e-12 * max_amp) continue;
        const double e = basis_energy(idx, v.num_atoms(), cfg);
        if (!found) {
            energy = e;
            found = true;
        } else if (std::abs(e - energy) > 1e-9 * std::max(1.0, std::abs(energy))) {
            throw std::invalid_argument(
                "eigenstate_energy: state is not an eigenstate of the free Hamiltonian");
        }
    }
    return energy;
}

// G v: divide each component by E_initial - E_m + omega_plus.
inline StateVector apply_resolvent(const StateVector& v, double initial_energy,
                                   const RamanConfig& cfg) {
    StateVector out = v;
    for (std::size_t idx = 0; idx < v.dim(); ++idx) {
        if (v[idx] == cplx{0.0, 0.0}) continue;
        const double denom = initial_energy - basis_energy(idx, v.num_atoms(), cfg) +
                             cfg.omega_plus;
        if (std::abs(denom) < 1e-12)
            throw singular_denominator_error("apply_resolvent: vanishing energy denominator");
        out[idx] = v[idx] / denom;
    }
    return out;
}

// --------------------------- Amplitudes and rates ----------------------------

// V- G V+ |initial>, unnormalized.
inline StateVector scattering_image(const StateVector& initial, const RamanConfig& cfg,
                                    const Geometry& g) {
    cfg.validate();
    if (g.num_atoms() != initial.num_atoms())
        throw std::invalid_argument("scattering_image: geometry/state atom number mismatch");
    const double e_init = eigenstate_energy(initial, cfg);
    const StateVector raised = absorption_operator(cfg, g).apply(initial);
    const StateVector propagated = apply_resolvent(raised, e_init, cfg);
    return emission_operator(cfg, g).apply(propagated);
}

// <final| V- G V+ |initial>
inline cplx raman_amplitude(const StateVector& initial, const StateVector& final_state,
                            const RamanConfig& cfg, const Geometry& g) {
    return hilbert::inner_product(final_state, scattering_image(initial, cfg, g));
}

struct ScatteredState {
    StateVector state;    // normalized image of one scattering event
    double squared_norm;  // |V- G V+ |initial>|^2 before normalization
};

inline ScatteredState scattered_state(const StateVector& initial, const RamanConfig& cfg,
                                      const Geometry& g) {
    StateVector image = scattering_image(initial, cfg, g);
    const double n = hilbert::norm(image);
    if (!(n > 0.0)) throw std::domain_error("scattered_state: scattering image vanishes");
    return ScatteredState{hilbert::normalize(image), n * n};
}

// Rate summed over the degenerate final manifold: |V- G V+ |initial>|^2,
// basis independent.
inline double total_rate(const StateVector& initial, const RamanConfig& cfg,
                         const Geometry& g) {
    const double n = hilbert::norm(scattering_image(initial, cfg, g));
    return n * n;
}

// Rate of one atom sitting in the initial level, same configuration.
inline double single_atom_rate(const RamanConfig& cfg) {
    cfg.validate();
    const StateVector one = StateVector::basis(
        hilbert::ProductBasisState{{cfg.labels.initial}, 3});
    return total_rate(one, cfg, Geometry::uniform(1));
}

} // namespace raman
} // namespace ramanchain
