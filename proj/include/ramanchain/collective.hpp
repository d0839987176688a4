// collective.hpp — SU(3) collective operators S_ij = sum_a (|i><j|)_a, their
// exact ladder action on the symmetric sector, and the embedding that ties
// occupation triples to concrete symmetric product-space states.
//
// Symmetric-sector states are labeled by occupations (n_i, n_l, n_f) of the
// three levels, n_i + n_l + n_f = N. Levels are indexed 0 = initial,
// 1 = intermediate, 2 = final throughout this module.
//
// Ladder rules (i != j):
//   S_ij |..., n_j, ..., n_i, ...> = sqrt(n_j (n_i + 1)) |..., n_j - 1, ..., n_i + 1, ...>
//   S_ii |...> = n_i |...>
// realizing S_ij = a_i^dag a_j on the fixed-N boson sector.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramanchain/hilbert.hpp"
#include "ramanchain/states.hpp"

namespace ramanchain {
namespace collective {

using hilbert::StateVector;
using hilbert::TransitionSum;

// Occupations of the three levels; n_i + n_l + n_f = N.
struct CollectiveState {
    int n_i = 0;
    int n_l = 0;
    int n_f = 0;

    int total() const { return n_i + n_l + n_f; }

    int occupation(int level) const {
        switch (level) {
            case 0: return n_i;
            case 1: return n_l;
            case 2: return n_f;
            default: throw std::invalid_argument("CollectiveState: level index out of range");
        }
    }

    CollectiveState with_occupation(int level, int value) const {
        CollectiveState out = *this;
        switch (level) {
            case 0: out.n_i = value; break;
            case 1: out.n_l = value; break;
            case 2: out.n_f = value; break;
            default: throw std::invalid_argument("CollectiveState: level index out of range");
        }
        return out;
    }

    void validate() const {
        if (n_i < 0 || n_l < 0 || n_f < 0)
            throw std::invalid_argument("CollectiveState: occupations must be nonnegative");
        if (total() < 1) throw std::invalid_argument("CollectiveState: need at least one atom");
    }

    friend bool operator==(const CollectiveState& a, const CollectiveState& b) {
        return a.n_i == b.n_i && a.n_l == b.n_l && a.n_f == b.n_f;
    }
    friend bool operator<(const CollectiveState& a, const CollectiveState& b) {
        return std::array<int, 3>{a.n_i, a.n_l, a.n_f} < std::array<int, 3>{b.n_i, b.n_l, b.n_f};
    }
};

// Finite combination of occupation states, all sharing the same N. Terms are
// kept canonical: sorted by occupations, like terms combined, zeros dropped.
class CollectiveKet {
public:
    using Term = std::pair<cplx, CollectiveState>;

    CollectiveKet() = default;

    explicit CollectiveKet(const CollectiveState& s, cplx coefficient = cplx{1.0, 0.0}) {
        s.validate();
        if (coefficient != cplx{0.0, 0.0}) terms_.emplace_back(coefficient, s);
    }

    static CollectiveKet empty() { return CollectiveKet{}; }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_empty() const { return terms_.empty(); }

    void add_term(cplx coefficient, const CollectiveState& s) {
        s.validate();
        if (!terms_.empty() && s.total() != terms_.front().second.total())
            throw std::invalid_argument("CollectiveKet: mixed atom numbers");
        terms_.emplace_back(coefficient, s);
        canonicalize();
    }

private:
    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.second < b.second; });
        std::vector<Term> merged;
        for (const Term& t : terms_) {
            if (!merged.empty() && merged.back().second == t.second)
                merged.back().first += t.first;
            else
                merged.push_back(t);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const Term& t) { return std::abs(t.first) == 0.0; }),
                     merged.end());
        terms_ = std::move(merged);
    }

    std::vector<Term> terms_;
};

// Operator index pair: S_{to,from} moves one atom from `from` to `to`.
struct LevelPair {
    int to = 0;
    int from = 0;

    void validate() const {
        if (to < 0 || to >= 3 || from < 0 || from >= 3)
            throw std::invalid_argument("LevelPair: level index out of range");
    }
};

// --------------------------- Ladder action ----------------------------------

// S_{to,from} acting on occupation labels. Annihilated terms drop out; the
// all-annihilated case is the empty ket.
inline CollectiveKet ladder_apply(const LevelPair& op, const CollectiveKet& ket) {
    op.validate();
    CollectiveKet out;
    for (const auto& [coeff, state] : ket.terms()) {
        if (op.to == op.from) {
            const int n = state.occupation(op.to);
            if (n > 0) out.add_term(coeff * static_cast<double>(n), state);
            continue;
        }
        const int n_from = state.occupation(op.from);
        if (n_from == 0) continue;
        const int n_to = state.occupation(op.to);
        const double factor = std::sqrt(static_cast<double>(n_from) *
                                        static_cast<double>(n_to + 1));
        const CollectiveState image =
            state.with_occupation(op.from, n_from - 1).with_occupation(op.to, n_to + 1);
        out.add_term(coeff * factor, image);
    }
    return out;
}

// --------------------------- Full-space realization --------------------------

// S_{to,from} = sum_a (|to><from|)_a on the 3^N product space.
inline TransitionSum collective_operator_full(int to_level, int from_level, int num_atoms) {
    return TransitionSum(num_atoms, 3, to_level, from_level);
}

// |n_i, n_l, n_f> as the normalized symmetric product-space state.
inline StateVector embed_collective(const CollectiveState& s) {
    s.validate();
    return states::symmetric_state({s.n_i, s.n_l, s.n_f}, 3, s.total());
}

// Embed a whole ket; zero vector for the empty ket.
inline StateVector embed_collective(const CollectiveKet& ket, int num_atoms) {
    StateVector out(num_atoms, 3);
    for (const auto& [coeff, state] : ket.terms()) {
        if (state.total() != num_atoms)
            throw std::invalid_argument("embed_collective: atom number mismatch");
        out = out + coeff * embed_collective(state);
    }
    return out;
}

// --------------------------- Algebra check ----------------------------------

inline constexpr int kCommutatorAtomCap = 4;

// Max |entry| of [S_il, S_fj] - (S_ij d_lf - S_fl d_ij) realized on the full
// space; the exact algebra gives zero.
inline double commutator_residual(int i, int l, int f, int j, int num_atoms,
                                  int atom_cap = kCommutatorAtomCap) {
    for (int idx : {i, l, f, j})
        if (idx < 0 || idx >= 3)
            throw std::invalid_argument("commutator_residual: level index out of range");
    if (num_atoms > atom_cap)
        throw resource_limit_error("commutator_residual: N = " + std::to_string(num_atoms) +
                                   " exceeds cap " + std::to_string(atom_cap));

    const Eigen::MatrixXcd s_il = collective_operator_full(i, l, num_atoms).dense();
    const Eigen::MatrixXcd s_fj = collective_operator_full(f, j, num_atoms).dense();
    Eigen::MatrixXcd expected =
        Eigen::MatrixXcd::Zero(s_il.rows(), s_il.cols());
    if (l == f) expected += collective_operator_full(i, j, num_atoms).dense();
    if (i == j) expected -= collective_operator_full(f, l, num_atoms).dense();

    const Eigen::MatrixXcd residual = s_il * s_fj - s_fj * s_il - expected;
    return residual.cwiseAbs().maxCoeff();
}

// All collective states with n_i + n_l + n_f = N, lexicographic in
// (n_i, n_l, n_f).
inline std::vector<CollectiveState> all_collective_states(int num_atoms) {
    if (num_atoms < 1) throw std::invalid_argument("all_collective_states: need N >= 1");
    std::vector<CollectiveState> out;
    for (int n_i = 0; n_i <= num_atoms; ++n_i)
        for (int n_l = 0; n_l + n_i <= num_atoms; ++n_l)
            out.push_back(CollectiveState{n_i, n_l, num_atoms - n_i - n_l});
    return out;
}

} // namespace collective
} // namespace ramanchain
