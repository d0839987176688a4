// helpers.hpp — Shared test utilities: basis shorthands, atom permutations,
// seeded random states and matrices.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <vector>

#include "ramanchain/hilbert.hpp"

namespace test_helpers {

using ramanchain::cplx;
using ramanchain::hilbert::ProductBasisState;
using ramanchain::hilbert::StateVector;

inline StateVector basis(std::vector<int> levels, int num_levels) {
    return StateVector::basis(ProductBasisState{std::move(levels), num_levels});
}

// |v'> with atom a relabeled to position perm[a].
inline StateVector permute_atoms(const StateVector& v, const std::vector<int>& perm) {
    const int n = v.num_atoms();
    const int d = v.num_levels();
    StateVector out(n, d);
    for (std::size_t idx = 0; idx < v.dim(); ++idx) {
        const auto s = ramanchain::hilbert::basis_from_index(idx, n, d);
        std::vector<int> moved(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a)
            moved[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])] =
                s.levels[static_cast<std::size_t>(a)];
        out[ramanchain::hilbert::basis_index(ProductBasisState{moved, d})] = v[idx];
    }
    return out;
}

inline StateVector random_state(std::mt19937& rng, int num_atoms, int num_levels) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector v(num_atoms, num_levels);
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] = cplx{gauss(rng), gauss(rng)};
    return v;
}

inline Eigen::MatrixXcd random_matrix(std::mt19937& rng, int d) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd m(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m(r, c) = cplx{gauss(rng), gauss(rng)};
    return m;
}

inline double max_abs_diff(const StateVector& a, const StateVector& b) {
    return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

} // namespace test_helpers
