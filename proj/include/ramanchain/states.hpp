// states.hpp — Constructors for the collective states driven through the
// Raman chain: factorized states, W states, two-level Dicke states, and the
// general symmetrized occupation state. Plus fidelity.
//
// Convention: every symmetric state carries the uniform positive-real
// amplitude 1/sqrt(multinomial(N; counts)) on each matching product basis
// state. Phases enter only through the scattering operators.

#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ramanchain/hilbert.hpp"

namespace ramanchain {
namespace states {

using hilbert::StateVector;

// Roles of the three levels of one atom in the scattering scheme.
// Defaults: 0 = initial |i>, 1 = intermediate |l>, 2 = final |f>.
struct LevelLabels {
    int initial = 0;
    int intermediate = 1;
    int final_ = 2;

    void validate() const {
        const bool in_range = initial >= 0 && initial < 3 && intermediate >= 0 &&
                              intermediate < 3 && final_ >= 0 && final_ < 3;
        const bool distinct =
            initial != intermediate && intermediate != final_ && initial != final_;
        if (!in_range || !distinct)
            throw std::invalid_argument("LevelLabels: need three distinct indices in [0,3)");
    }
};

// N! / (counts_0! counts_1! ...), exact in 64-bit for every N in scope.
inline std::uint64_t multinomial(const std::vector<int>& counts) {
    std::uint64_t result = 1;
    std::uint64_t n = 0;
    for (int c : counts) {
        if (c < 0) throw std::invalid_argument("multinomial: negative count");
        for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(c); ++k) {
            ++n;
            result = result * n / k;  // running product of binomials, exact
        }
    }
    return result;
}

// Equal-weight superposition of every product basis state whose per-level
// occupations match `counts`.
inline StateVector symmetric_state(const std::vector<int>& counts, int num_levels,
                                   int num_atoms) {
    if (static_cast<int>(counts.size()) != num_levels)
        throw std::invalid_argument("symmetric_state: need one count per level");
    for (int c : counts)
        if (c < 0) throw std::invalid_argument("symmetric_state: negative count");
    if (std::accumulate(counts.begin(), counts.end(), 0) != num_atoms)
        throw std::invalid_argument("symmetric_state: counts must sum to the atom number");

    StateVector v(num_atoms, num_levels);
    const double amp = 1.0 / std::sqrt(static_cast<double>(multinomial(counts)));
    std::vector<int> occ(static_cast<std::size_t>(num_levels));
    for (std::size_t idx = 0; idx < v.dim(); ++idx) {
        std::fill(occ.begin(), occ.end(), 0);
        std::size_t rest = idx;
        for (int a = 0; a < num_atoms; ++a) {
            ++occ[rest % static_cast<std::size_t>(num_levels)];
            rest /= static_cast<std::size_t>(num_levels);
        }
        bool match = true;
        for (int level = 0; level < num_levels; ++level)
            if (occ[static_cast<std::size_t>(level)] != counts[static_cast<std::size_t>(level)]) {
                match = false;
                break;
            }
        if (match) v[idx] = cplx{amp, 0.0};
    }
    return v;
}

// W-type state: n_excited atoms in excited_level, the rest in base_level.
// n_excited in {0, N} degenerates to a product state.
inline StateVector w_state(int num_atoms, int base_level, int excited_level, int n_excited,
                           int num_levels = 3) {
    if (base_level == excited_level)
        throw std::invalid_argument("w_state: base and excited level must differ");
    if (base_level < 0 || base_level >= num_levels || excited_level < 0 ||
        excited_level >= num_levels)
        throw std::invalid_argument("w_state: level index out of range");
    if (n_excited < 0 || n_excited > num_atoms)
        throw std::invalid_argument("w_state: n_excited must lie in [0, N]");
    std::vector<int> counts(static_cast<std::size_t>(num_levels), 0);
    counts[static_cast<std::size_t>(base_level)] = num_atoms - n_excited;
    counts[static_cast<std::size_t>(excited_level)] = n_excited;
    return symmetric_state(counts, num_levels, num_atoms);
}

// Two-level Dicke state |N/2, M>, M = -N/2 ... +N/2 in integer steps, with
// N/2 + M atoms excited. Level 1 is |e>, level 0 is |g>.
inline StateVector dicke_two_level(int num_atoms, double m) {
    const double n_excited_real = static_cast<double>(num_atoms) / 2.0 + m;
    const double rounded = std::round(n_excited_real);
    if (std::abs(n_excited_real - rounded) > 1e-9 || rounded < 0.0 ||
        rounded > static_cast<double>(num_atoms))
        throw std::invalid_argument("dicke_two_level: N/2 + M must be an integer in [0, N]");
    const int n_excited = static_cast<int>(rounded);
    return symmetric_state({num_atoms - n_excited, n_excited}, 2, num_atoms);
}

// |<a|b>|^2 for normalized a, b.
inline double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(hilbert::inner_product(a, b));
}

} // namespace states
} // namespace ramanchain
