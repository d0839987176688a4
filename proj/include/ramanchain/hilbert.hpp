// hilbert.hpp — Dense state vectors and single-atom operator algebra on the
// d^N product space of N d-level atoms (d = 2 or 3).
//
// Basis convention: lexicographic, atom 0 most significant, i.e. the product
// basis state |l_0, l_1, ..., l_{N-1}> has flat index
//     sum_a l_a * d^(N-1-a).

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramanchain/errors.hpp"

namespace ramanchain {

using cplx = std::complex<double>;

namespace hilbert {

// Largest dense dimension we allow (3^10); enough for every scan in scope.
inline constexpr std::size_t kMaxDimension = 59049;

inline std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

inline std::size_t checked_dimension(int num_atoms, int num_levels) {
    if (num_atoms < 1) throw std::invalid_argument("hilbert: need at least one atom");
    if (num_levels != 2 && num_levels != 3)
        throw std::invalid_argument("hilbert: num_levels must be 2 or 3");
    const std::size_t dim = ipow(static_cast<std::size_t>(num_levels), num_atoms);
    if (dim > kMaxDimension)
        throw resource_limit_error("hilbert: dimension " + std::to_string(dim) +
                                   " exceeds dense cap " + std::to_string(kMaxDimension));
    return dim;
}

// --------------------------- Product basis states ---------------------------

// One product basis state |l_0, ..., l_{N-1}>, each l_a in [0, d).
struct ProductBasisState {
    std::vector<int> levels;
    int num_levels = 3;

    int num_atoms() const { return static_cast<int>(levels.size()); }
};

inline std::size_t basis_index(const ProductBasisState& s) {
    checked_dimension(s.num_atoms(), s.num_levels);
    std::size_t idx = 0;
    for (int level : s.levels) {
        if (level < 0 || level >= s.num_levels)
            throw std::invalid_argument("basis_index: level out of range");
        idx = idx * static_cast<std::size_t>(s.num_levels) + static_cast<std::size_t>(level);
    }
    return idx;
}

inline ProductBasisState basis_from_index(std::size_t index, int num_atoms, int num_levels) {
    const std::size_t dim = checked_dimension(num_atoms, num_levels);
    if (index >= dim) throw std::invalid_argument("basis_from_index: index out of range");
    ProductBasisState s;
    s.num_levels = num_levels;
    s.levels.assign(static_cast<std::size_t>(num_atoms), 0);
    for (int a = num_atoms - 1; a >= 0; --a) {
        s.levels[static_cast<std::size_t>(a)] = static_cast<int>(index % num_levels);
        index /= static_cast<std::size_t>(num_levels);
    }
    return s;
}

// Level of atom `atom` inside flat index `index`.
inline int level_at(std::size_t index, int atom, int num_atoms, int num_levels) {
    const std::size_t stride = ipow(static_cast<std::size_t>(num_levels), num_atoms - 1 - atom);
    return static_cast<int>((index / stride) % static_cast<std::size_t>(num_levels));
}

// --------------------------- State vectors ----------------------------------

class StateVector {
public:
    StateVector(int num_atoms, int num_levels)
        : num_atoms_(num_atoms),
          num_levels_(num_levels),
          amp_(Eigen::VectorXcd::Zero(
              static_cast<Eigen::Index>(checked_dimension(num_atoms, num_levels)))) {}

    static StateVector basis(int num_atoms, int num_levels, std::size_t index) {
        StateVector v(num_atoms, num_levels);
        if (index >= v.dim()) throw std::invalid_argument("StateVector::basis: index out of range");
        v.amp_[static_cast<Eigen::Index>(index)] = cplx{1.0, 0.0};
        return v;
    }

    static StateVector basis(const ProductBasisState& s) {
        return basis(s.num_atoms(), s.num_levels, basis_index(s));
    }

    int num_atoms() const { return num_atoms_; }
    int num_levels() const { return num_levels_; }
    std::size_t dim() const { return static_cast<std::size_t>(amp_.size()); }

    const cplx& operator[](std::size_t i) const { return amp_[static_cast<Eigen::Index>(i)]; }
    cplx& operator[](std::size_t i) { return amp_[static_cast<Eigen::Index>(i)]; }

    const Eigen::VectorXcd& amplitudes() const { return amp_; }
    Eigen::VectorXcd& amplitudes() { return amp_; }

    bool same_space(const StateVector& other) const {
        return num_atoms_ == other.num_atoms_ && num_levels_ == other.num_levels_;
    }

private:
    int num_atoms_;
    int num_levels_;
    Eigen::VectorXcd amp_;
};

// <a|b>, conjugate-linear in the first argument.
inline cplx inner_product(const StateVector& a, const StateVector& b) {
    if (!a.same_space(b)) throw std::invalid_argument("inner_product: dimension mismatch");
    return a.amplitudes().dot(b.amplitudes());
}

inline double norm(const StateVector& v) { return v.amplitudes().norm(); }

inline StateVector normalize(const StateVector& v) {
    const double n = norm(v);
    if (!(n > 0.0)) throw std::domain_error("normalize: zero (or non-finite) vector");
    StateVector out = v;
    out.amplitudes() /= n;
    return out;
}

inline StateVector operator+(const StateVector& a, const StateVector& b) {
    if (!a.same_space(b)) throw std::invalid_argument("StateVector: dimension mismatch");
    StateVector out = a;
    out.amplitudes() += b.amplitudes();
    return out;
}

inline StateVector operator-(const StateVector& a, const StateVector& b) {
    if (!a.same_space(b)) throw std::invalid_argument("StateVector: dimension mismatch");
    StateVector out = a;
    out.amplitudes() -= b.amplitudes();
    return out;
}

inline StateVector operator*(const cplx& c, const StateVector& v) {
    StateVector out = v;
    out.amplitudes() *= c;
    return out;
}

// --------------------------- Single-atom operators --------------------------

// Apply a d x d matrix to one atom, identity on the rest.
inline StateVector apply_single_atom_operator(const StateVector& v, int atom,
                                              const Eigen::MatrixXcd& op) {
    const int d = v.num_levels();
    const int n = v.num_atoms();
    if (atom < 0 || atom >= n)
        throw std::invalid_argument("apply_single_atom_operator: atom index out of range");
    if (op.rows() != d || op.cols() != d)
        throw std::invalid_argument("apply_single_atom_operator: operator must be d x d");

    StateVector out(n, d);
    const std::size_t stride = ipow(static_cast<std::size_t>(d), n - 1 - atom);
    const std::size_t block = stride * static_cast<std::size_t>(d);
    for (std::size_t base = 0; base < v.dim(); base += block) {
        for (std::size_t inner = 0; inner < stride; ++inner) {
            const std::size_t idx0 = base + inner;
            for (int to = 0; to < d; ++to) {
                cplx acc{0.0, 0.0};
                for (int from = 0; from < d; ++from)
                    acc += op(to, from) * v[idx0 + static_cast<std::size_t>(from) * stride];
                out[idx0 + static_cast<std::size_t>(to) * stride] = acc;
            }
        }
    }
    return out;
}

// coefficient * sum_a weight_a (|to><from|)_a  — the one operator shape every
// chain interaction in this library takes. Applied matrix-free; dense() is
// for small-N algebra checks only.
class TransitionSum {
public:
    TransitionSum(int num_atoms, int num_levels, int to_level, int from_level,
                  cplx coefficient = cplx{1.0, 0.0}, std::vector<cplx> weights = {})
        : num_atoms_(num_atoms),
          num_levels_(num_levels),
          to_(to_level),
          from_(from_level),
          coeff_(coefficient),
          weights_(std::move(weights)) {
        checked_dimension(num_atoms_, num_levels_);
        if (to_ < 0 || to_ >= num_levels_ || from_ < 0 || from_ >= num_levels_)
            throw std::invalid_argument("TransitionSum: level index out of range");
        if (weights_.empty()) weights_.assign(static_cast<std::size_t>(num_atoms_), cplx{1.0, 0.0});
        if (weights_.size() != static_cast<std::size_t>(num_atoms_))
            throw std::invalid_argument("TransitionSum: one weight per atom required");
    }

    int num_atoms() const { return num_atoms_; }
    int num_levels() const { return num_levels_; }
    int to_level() const { return to_; }
    int from_level() const { return from_; }

    StateVector apply(const StateVector& v) const {
        if (v.num_atoms() != num_atoms_ || v.num_levels() != num_levels_)
            throw std::invalid_argument("TransitionSum: state lives in a different space");
        const int d = num_levels_;
        StateVector out(num_atoms_, d);
        for (int atom = 0; atom < num_atoms_; ++atom) {
            const cplx w = coeff_ * weights_[static_cast<std::size_t>(atom)];
            const std::size_t stride = ipow(static_cast<std::size_t>(d), num_atoms_ - 1 - atom);
            const std::size_t block = stride * static_cast<std::size_t>(d);
            const std::size_t src_off = static_cast<std::size_t>(from_) * stride;
            const std::size_t dst_off = static_cast<std::size_t>(to_) * stride;
            for (std::size_t base = 0; base < out.dim(); base += block)
                for (std::size_t inner = 0; inner < stride; ++inner)
                    out[base + inner + dst_off] += w * v[base + inner + src_off];
        }
        return out;
    }

    Eigen::MatrixXcd dense() const {
        const std::size_t dim = ipow(static_cast<std::size_t>(num_levels_), num_atoms_);
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                    static_cast<Eigen::Index>(dim));
        for (std::size_t col = 0; col < dim; ++col) {
            const StateVector image = apply(StateVector::basis(num_atoms_, num_levels_, col));
            m.col(static_cast<Eigen::Index>(col)) = image.amplitudes();
        }
        return m;
    }

private:
    int num_atoms_;
    int num_levels_;
    int to_;
    int from_;
    cplx coeff_;
    std::vector<cplx> weights_;
};

} // namespace hilbert
} // namespace ramanchain
