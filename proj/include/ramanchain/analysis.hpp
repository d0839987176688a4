// analysis.hpp — Enhancement factors: the collective-operator formula
// n_i (n_f + 1) (n_l + 1)^2 / N, its brute-force counterpart from the full
// perturbation sum, partition scans, and the Dicke pair correlation.
//
// Enhancement is defined relative to N independent atoms: the chain rate
// divided by N times the single-atom rate, in uniform-phase geometry.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramanchain/collective.hpp"
#include "ramanchain/hilbert.hpp"
#include "ramanchain/raman.hpp"
#include "ramanchain/states.hpp"

namespace ramanchain {
namespace analysis {

using hilbert::StateVector;

inline constexpr int kScanAtomCap = 8;  // brute force cap 3^8

// One scan row: occupations, formula value, brute-force value, residual.
struct EnhancementRecord {
    int num_atoms = 0;
    int n_i = 0;
    int n_l = 0;
    int n_f = 0;
    double formula_value = 0.0;
    double bruteforce_value = 0.0;
    double residual = 0.0;
};

// n_i (n_f + 1) (n_l + 1)^2 / N
inline double enhancement_formula(int n_i, int n_l, int n_f) {
    if (n_i < 0 || n_l < 0 || n_f < 0)
        throw std::invalid_argument("enhancement_formula: occupations must be nonnegative");
    const int num_atoms = n_i + n_l + n_f;
    if (num_atoms < 1) throw std::invalid_argument("enhancement_formula: need N >= 1");
    if (n_i == 0)
        throw std::domain_error("enhancement_formula: no transition from n_i = 0");
    return static_cast<double>(n_i) * static_cast<double>(n_f + 1) *
           static_cast<double>(n_l + 1) * static_cast<double>(n_l + 1) /
           static_cast<double>(num_atoms);
}

// total_rate(|n_i, n_l, n_f>) / (N * single-atom rate), uniform-phase
// geometry, identical configuration on both sides.
inline double enhancement_bruteforce(int n_i, int n_l, int n_f,
                                     const raman::RamanConfig& cfg = {}) {
    if (n_i < 0 || n_l < 0 || n_f < 0)
        throw std::invalid_argument("enhancement_bruteforce: occupations must be nonnegative");
    const int num_atoms = n_i + n_l + n_f;
    if (num_atoms < 1) throw std::invalid_argument("enhancement_bruteforce: need N >= 1");
    if (n_i == 0)
        throw std::domain_error("enhancement_bruteforce: no transition from n_i = 0");

    const StateVector initial = collective::embed_collective({n_i, n_l, n_f});
    const double rate = raman::total_rate(initial, cfg, raman::Geometry::uniform(num_atoms));
    return rate / (static_cast<double>(num_atoms) * raman::single_atom_rate(cfg));
}

// One record per partition (n_i >= 1, n_l, n_f) of every N = 1..n_max;
// N ascending, then lexicographic occupations.
inline std::vector<EnhancementRecord> scan_partitions(int n_max,
                                                      const raman::RamanConfig& cfg = {}) {
    if (n_max < 1) throw std::invalid_argument("scan_partitions: need n_max >= 1");
    if (n_max > kScanAtomCap)
        throw resource_limit_error("scan_partitions: n_max = " + std::to_string(n_max) +
                                   " exceeds cap " + std::to_string(kScanAtomCap));
    std::vector<EnhancementRecord> out;
    for (int num_atoms = 1; num_atoms <= n_max; ++num_atoms) {
        for (int n_i = 1; n_i <= num_atoms; ++n_i) {
            for (int n_l = 0; n_l + n_i <= num_atoms; ++n_l) {
                const int n_f = num_atoms - n_i - n_l;
                EnhancementRecord rec;
                rec.num_atoms = num_atoms;
                rec.n_i = n_i;
                rec.n_l = n_l;
                rec.n_f = n_f;
                rec.formula_value = enhancement_formula(n_i, n_l, n_f);
                rec.bruteforce_value = enhancement_bruteforce(n_i, n_l, n_f, cfg);
                rec.residual = std::abs(rec.formula_value - rec.bruteforce_value);
                out.push_back(rec);
            }
        }
    }
    return out;
}

// <s1+ s2-> - <s1+><s2-> on the two-level Dicke state |N/2, M>, brute-force
// expectation values; by permutation symmetry the pair (1,2) stands for all.
inline double dicke_pair_correlation(int num_atoms, double m) {
    if (num_atoms < 2)
        throw std::invalid_argument("dicke_pair_correlation: need at least two atoms");
    const StateVector psi = states::dicke_two_level(num_atoms, m);

    Eigen::MatrixXcd raise = Eigen::MatrixXcd::Zero(2, 2);  // s+ = |e><g|
    raise(1, 0) = 1.0;
    const Eigen::MatrixXcd lower = raise.adjoint();         // s- = |g><e|

    const StateVector lowered = hilbert::apply_single_atom_operator(psi, 1, lower);
    const StateVector pair = hilbert::apply_single_atom_operator(lowered, 0, raise);
    const cplx corr = hilbert::inner_product(psi, pair);

    const cplx mean_raise =
        hilbert::inner_product(psi, hilbert::apply_single_atom_operator(psi, 0, raise));
    const cplx mean_lower =
        hilbert::inner_product(psi, hilbert::apply_single_atom_operator(psi, 1, lower));

    return (corr - mean_raise * mean_lower).real();
}

} // namespace analysis
} // namespace ramanchain
