#pragma once

/*
 * Finite-dimensional g-modules with exact generator matrices and integer
 * weight labels.  Irreducibles are built as cyclic submodules: for rank 1
 * directly in the standard f-power basis, otherwise inside a tensor product
 * of fundamental (wedge-power) modules.  Each irreducible remembers the
 * lowering words that generate its basis from the highest-weight vector;
 * equivariant injections out of it are linear extensions along those words.
 */

#include <memory>
#include <string>
#include <vector>

#include "dyntwist/linalg.hpp"
#include "dyntwist/pbw.hpp"
#include "dyntwist/rootdata.hpp"

namespace dyntwist {

struct Rep {
    const LieAlgebra* g = nullptr;
    int dim = 0;
    std::vector<Matrix<Rational>> action;   // per g basis index
    std::vector<std::vector<int>> weights;  // h-eigenvalue vector per basis vector
    std::vector<int> highest;               // dominant weight (irreducibles only)
    std::vector<Word> words;                // lowering words from the h.w. vector (irreducibles only)
    std::string name;

    const Matrix<Rational>& act(int basis_idx) const { return action[static_cast<size_t>(basis_idx)]; }

    /// Apply a PBW word (rightmost factor first) to a vector.
    Vec<Rational> act_word(const Word& w, Vec<Rational> v) const {
        for (auto it = w.rbegin(); it != w.rend(); ++it) v = action[static_cast<size_t>(*it)].apply(v);
        return v;
    }

    Vec<Rational> basis_vector(int i) const {
        Vec<Rational> v(static_cast<size_t>(dim), Rational(0));
        v[static_cast<size_t>(i)] = Rational(1);
        return v;
    }
};

Rep defining_rep(const LieAlgebra& g);
Rep trivial_rep(const LieAlgebra& g);
Rep wedge_rep(const LieAlgebra& g, int k);
Rep dual_rep(const Rep& v);
Rep tensor_rep(const Rep& a, const Rep& b);

/// Irreducible module of dominant integral highest weight; dimension is
/// validated against the Weyl dimension formula.
Rep irrep(const LieAlgebra& g, const std::vector<int>& highest);

long long weyl_dimension(const LieAlgebra& g, const std::vector<int>& highest);

/// Basis (as columns) of {v in V : l_0 v = 0, c-weight of v = nu}.
std::vector<Vec<Rational>> weight_component(const Rep& v, const Levi& levi, const std::vector<int>& nu);

struct CGTerm {
    Rep summand;
    Matrix<Rational> injection;   // dim(V tensor W) x dim(summand)
    Matrix<Rational> projection;  // dim(summand) x dim(V tensor W)
};

/// Complete decomposition of a tensor product into irreducibles with
/// mutually inverse injection/projection blocks: sum inj*proj = id.
std::vector<CGTerm> cg_decompose(const Rep& a, const Rep& b);

/// Flip operator V tensor W -> W tensor V in the product bases.
Matrix<Rational> flip_matrix(int dim_a, int dim_b);

/// Permutation operator on a triple product sending slot i of the source to
/// slot perm[i] of the target.
Matrix<Rational> perm3_matrix(const std::vector<int>& dims, const std::vector<int>& perm);

template <class F>
Matrix<F> promote_matrix(const Matrix<Rational>& m) {
    Matrix<F> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) r.at(i, j) = field_from_rational<F>(m.at(i, j));
    return r;
}

}  // namespace dyntwist
