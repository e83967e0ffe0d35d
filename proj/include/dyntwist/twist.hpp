#pragma once

/*
 * Dynamical twists from composites of canonical intertwiners.
 *
 * For finite-dimensional g-modules A, B the composite
 *
 *     (Phi_A (x) id_B) . Phi_B : M_{C_lam (x) A (x) B|_l} -> M_{C_lam} (x) A (x) B
 *
 * has a well-defined degree-zero coefficient F_raw(A,B)(lam) in End(A (x) B):
 * a solver term (u, x', b') of Phi_B contributes pi_A(u) x' (x) b', because
 * the leading coefficient of Phi_A is the identity and every lowering factor
 * of u must land in the A slot to stay at Verma depth zero.
 *
 * The exported convention conjugates by the flip:
 *
 *     F*_{V,W}(lam) = P . F_raw(W,V)(lam) . P .
 *
 * Uniqueness of leading-coefficient intertwiners at generic lam gives the
 * shifted two-cocycle identity
 *
 *     F*_{V,W(x)U}(lam) . (id_V (x) F*_{W,U}(lam))
 *         = F*_{V(x)W,U}(lam) . Based^{(3)}[F*_{V,W}](lam),
 *
 * where the based factor is the reversal conjugate of the leading coefficient
 * of (Phi^{Y0}_W (x) id) . Phi_V over the base Y0 = C_lam (x) U|_l.  When the
 * Levi is the full Cartan the based factor is blockwise F*_{V,W}(lam + mu)
 * over the weight mu of the U slot; both forms are computed here so they can
 * be checked against each other.
 *
 * The dynamical R-matrix is Rbar = (F*_{21})^{-1} F*, a matrix solution of the
 * dynamical Yang-Baxter equation with weight shifts; its t-linear coefficient
 * under lam -> lam/t is a classical dynamical r-matrix.
 */

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "dyntwist/intertwine.hpp"
#include "dyntwist/linalg.hpp"
#include "dyntwist/rep.hpp"
#include "dyntwist/series.hpp"
#include "dyntwist/verma.hpp"

namespace dyntwist {

/// Degree-zero coefficient of (Phi_A (x) id) . Phi_B on A (x) B.
template <class F>
Matrix<F> flatten_full(const Intertwiner<F>& phi, const Rep& a) {
    const Rep& b = *phi.b;
    if (phi.xdim != a.dim) throw std::invalid_argument("flatten_full: fiber dimension mismatch");
    const int n = a.dim * b.dim;
    Matrix<F> m(n, n);
    for (int z = 0; z < n; ++z)
        for (const auto& t : phi.terms[static_cast<size_t>(z)]) {
            Vec<Rational> av = a.act_word(t.word, a.basis_vector(t.xcomp));
            for (int r = 0; r < a.dim; ++r) {
                if (av[static_cast<size_t>(r)].is_zero()) continue;
                int row = r * b.dim + t.bcomp;
                m.at(row, z) = m.at(row, z) + t.coeff * field_from_rational<F>(av[static_cast<size_t>(r)]);
            }
        }
    return m;
}

/// Same composite over a base: the fiber is Y0 (x) A and the lowering words
/// act on the A factor only.  Result lives on Y0 (x) A (x) B.
template <class F>
Matrix<F> flatten_based(const Intertwiner<F>& phi, int y0dim, const Rep& a) {
    const Rep& b = *phi.b;
    if (phi.xdim != y0dim * a.dim) throw std::invalid_argument("flatten_based: fiber dimension mismatch");
    const int n = phi.xdim * b.dim;
    Matrix<F> m(n, n);
    for (int z = 0; z < n; ++z)
        for (const auto& t : phi.terms[static_cast<size_t>(z)]) {
            int p = t.xcomp / a.dim, q = t.xcomp % a.dim;
            Vec<Rational> av = a.act_word(t.word, a.basis_vector(q));
            for (int r = 0; r < a.dim; ++r) {
                if (av[static_cast<size_t>(r)].is_zero()) continue;
                int row = (p * a.dim + r) * b.dim + t.bcomp;
                m.at(row, z) = m.at(row, z) + t.coeff * field_from_rational<F>(av[static_cast<size_t>(r)]);
            }
        }
    return m;
}

template <class F>
struct TwistResult {
    Matrix<F> matrix;
    int max_block = 0;  // largest linear-block size met while solving (degree witness)
};

template <class F>
TwistResult<F> twist_raw_info(const PbwOrder& ord, const std::vector<F>& lambda, const Rep& a, const Rep& b) {
    InducingModule<F> x = rep_inducing(ord.levi(), lambda, a);
    Intertwiner<F> phi = solve_intertwiner(ord, x, b);
    return {flatten_full(phi, a), phi.max_block};
}

template <class F>
Matrix<F> twist_raw(const PbwOrder& ord, const std::vector<F>& lambda, const Rep& a, const Rep& b) {
    return twist_raw_info(ord, lambda, a, b).matrix;
}

/// F*_{V,W}(lam) = P . F_raw(W,V)(lam) . P on V (x) W.
template <class F>
TwistResult<F> twist_star_info(const PbwOrder& ord, const std::vector<F>& lambda, const Rep& v, const Rep& w) {
    TwistResult<F> raw = twist_raw_info(ord, lambda, w, v);
    Matrix<F> pvw = promote_matrix<F>(flip_matrix(v.dim, w.dim));
    Matrix<F> pwv = promote_matrix<F>(flip_matrix(w.dim, v.dim));
    return {pwv * raw.matrix * pvw, raw.max_block};
}

template <class F>
Matrix<F> twist_star(const PbwOrder& ord, const std::vector<F>& lambda, const Rep& v, const Rep& w) {
    return twist_star_info(ord, lambda, v, w).matrix;
}

template <class F>
std::vector<F> shifted_lambda(const std::vector<F>& lambda, const std::vector<int>& mu_c) {
    if (lambda.size() != mu_c.size()) throw std::invalid_argument("shifted_lambda: arity mismatch");
    std::vector<F> out = lambda;
    for (size_t i = 0; i < out.size(); ++i) out[i] = out[i] + field_from_rational<F>(Rational(mu_c[i]));
    return out;
}

/// Based factor of the cocycle on V (x) W (x) U: reversal conjugate of the
/// base-Y0 composite with Y0 = C_lam (x) U|_l.
template <class F>
Matrix<F> based_star_factor(const PbwOrder& ord, const std::vector<F>& lambda,
                            const Rep& v, const Rep& w, const Rep& u) {
    Rep uw = tensor_rep(u, w);
    InducingModule<F> x = rep_inducing(ord.levi(), lambda, uw);
    Intertwiner<F> phi = solve_intertwiner(ord, x, v);
    Matrix<F> m = flatten_based(phi, u.dim, w);  // on U (x) W (x) V
    Matrix<F> rho = promote_matrix<F>(perm3_matrix({v.dim, w.dim, u.dim}, {2, 1, 0}));
    Matrix<F> rho_inv = promote_matrix<F>(perm3_matrix({u.dim, w.dim, v.dim}, {2, 1, 0}));
    return rho_inv * m * rho;
}

/// Cartan-Levi form of the based factor: blockwise F*_{V,W}(lam + mu) over
/// the weight mu of the U slot.  Valid as the cocycle factor when l = h.
template <class F>
Matrix<F> based_star_blockwise(const PbwOrder& ord, const std::vector<F>& lambda,
                               const Rep& v, const Rep& w, const Rep& u) {
    const Levi& levi = ord.levi();
    const int dvw = v.dim * w.dim;
    Matrix<F> out(dvw * u.dim, dvw * u.dim);
    std::map<std::vector<int>, Matrix<F>> cache;
    for (int k = 0; k < u.dim; ++k) {
        std::vector<int> muc = levi.c_weight(u.weights[static_cast<size_t>(k)]);
        auto it = cache.find(muc);
        if (it == cache.end()) it = cache.emplace(muc, twist_star(ord, shifted_lambda(lambda, muc), v, w)).first;
        const Matrix<F>& f = it->second;
        for (int r = 0; r < dvw; ++r)
            for (int c = 0; c < dvw; ++c) {
                if (field_is_zero(f.at(r, c))) continue;
                out.at(r * u.dim + k, c * u.dim + k) = f.at(r, c);
            }
    }
    return out;
}

template <class F>
struct IdentitySides {
    Matrix<F> lhs, rhs;
    bool holds() const { return lhs == rhs; }
};

/// Both sides of the shifted two-cocycle identity on V (x) W (x) U.  With
/// blockwise_based the right side uses the l = h blockwise shift instead of
/// the based composite.
template <class F>
IdentitySides<F> cocycle_sides(const PbwOrder& ord, const std::vector<F>& lambda,
                               const Rep& v, const Rep& w, const Rep& u,
                               bool blockwise_based = false) {
    Rep wu = tensor_rep(w, u);
    Rep vw = tensor_rep(v, w);
    Matrix<F> lhs = twist_star(ord, lambda, v, wu) *
                    kron(Matrix<F>::identity(v.dim), twist_star(ord, lambda, w, u));
    Matrix<F> based = blockwise_based ? based_star_blockwise(ord, lambda, v, w, u)
                                      : based_star_factor(ord, lambda, v, w, u);
    Matrix<F> rhs = twist_star(ord, lambda, vw, u) * based;
    return {std::move(lhs), std::move(rhs)};
}

/// Rbar(lam) = (F*_{21})^{-1}(lam) . F*(lam) on V (x) W.
template <class F>
Matrix<F> dynamical_r(const PbwOrder& ord, const std::vector<F>& lambda, const Rep& v, const Rep& w) {
    Matrix<F> f = twist_star(ord, lambda, v, w);
    Matrix<F> f21 = promote_matrix<F>(flip_matrix(w.dim, v.dim)) *
                    twist_star(ord, lambda, w, v) *
                    promote_matrix<F>(flip_matrix(v.dim, w.dim));
    return inverse(f21) * f;
}

/// Place a two-slot operator family on slots (s1, s2) of a triple product;
/// the family may depend on the c-weight of the spectator basis vector.
template <class F>
Matrix<F> on_slots(const std::array<const Rep*, 3>& reps, int s1, int s2, const Levi& levi,
                   const std::function<Matrix<F>(const std::vector<int>&)>& op) {
    const int s3 = 3 - s1 - s2;
    const std::array<int, 3> d{reps[0]->dim, reps[1]->dim, reps[2]->dim};
    const int n = d[0] * d[1] * d[2];
    auto flat = [&](int i0, int i1, int i2) { return (i0 * d[1] + i1) * d[2] + i2; };
    Matrix<F> out(n, n);
    std::map<std::vector<int>, Matrix<F>> cache;
    for (int k = 0; k < d[static_cast<size_t>(s3)]; ++k) {
        std::vector<int> muc = levi.c_weight(reps[static_cast<size_t>(s3)]->weights[static_cast<size_t>(k)]);
        auto it = cache.find(muc);
        if (it == cache.end()) it = cache.emplace(muc, op(muc)).first;
        const Matrix<F>& m = it->second;
        const int d2 = d[static_cast<size_t>(s2)];
        for (int a = 0; a < d[static_cast<size_t>(s1)]; ++a)
            for (int bq = 0; bq < d2; ++bq)
                for (int a2 = 0; a2 < d[static_cast<size_t>(s1)]; ++a2)
                    for (int b2 = 0; b2 < d2; ++b2) {
                        const F& val = m.at(a2 * d2 + b2, a * d2 + bq);
                        if (field_is_zero(val)) continue;
                        std::array<int, 3> src{}, dst{};
                        src[static_cast<size_t>(s1)] = a;
                        src[static_cast<size_t>(s2)] = bq;
                        src[static_cast<size_t>(s3)] = k;
                        dst[static_cast<size_t>(s1)] = a2;
                        dst[static_cast<size_t>(s2)] = b2;
                        dst[static_cast<size_t>(s3)] = k;
                        out.at(flat(dst[0], dst[1], dst[2]), flat(src[0], src[1], src[2])) = val;
                    }
    }
    return out;
}

/// Both sides of the dynamical Yang-Baxter equation with weight shifts:
///   R12(lam) R13(lam + h2) R23(lam) = R23(lam + h1) R13(lam) R12(lam + h3).
template <class F>
IdentitySides<F> qdybe_sides(const PbwOrder& ord, const std::vector<F>& lambda,
                             const Rep& v, const Rep& w, const Rep& u) {
    const Levi& levi = ord.levi();
    std::array<const Rep*, 3> reps{&v, &w, &u};
    auto fixed = [&](const Rep& a, const Rep& b) {
        Matrix<F> m = dynamical_r(ord, lambda, a, b);
        return std::function<Matrix<F>(const std::vector<int>&)>(
            [m](const std::vector<int>&) { return m; });
    };
    auto moving = [&](const Rep& a, const Rep& b) {
        return std::function<Matrix<F>(const std::vector<int>&)>(
            [&ord, &lambda, &a, &b](const std::vector<int>& muc) {
                return dynamical_r(ord, shifted_lambda(lambda, muc), a, b);
            });
    };
    Matrix<F> lhs = on_slots(reps, 0, 1, levi, fixed(v, w)) *
                    on_slots(reps, 0, 2, levi, moving(v, u)) *
                    on_slots(reps, 1, 2, levi, fixed(w, u));
    Matrix<F> rhs = on_slots(reps, 1, 2, levi, moving(w, u)) *
                    on_slots(reps, 0, 2, levi, fixed(v, u)) *
                    on_slots(reps, 0, 1, levi, moving(v, w));
    return {std::move(lhs), std::move(rhs)};
}

/// Rbar over a base: the twist factors are based on Y (slot 3), so the
/// result is an operator on A (x) B (x) Y.  Over a Cartan Levi this is
/// blockwise Rbar(lam + mu) over the weight mu of the Y slot.
template <class F>
Matrix<F> based_r_matrix(const PbwOrder& ord, const std::vector<F>& lambda,
                         const Rep& a, const Rep& b, const Rep& y) {
    Matrix<F> f = based_star_factor(ord, lambda, a, b, y);
    Matrix<F> pab = kron(promote_matrix<F>(flip_matrix(a.dim, b.dim)), Matrix<F>::identity(y.dim));
    Matrix<F> pba = kron(promote_matrix<F>(flip_matrix(b.dim, a.dim)), Matrix<F>::identity(y.dim));
    Matrix<F> f21 = pba * based_star_factor(ord, lambda, b, a, y) * pab;
    return inverse(f21) * f;
}

/// Both sides of the Yang-Baxter equation in the general-base form: the
/// dynamical shift of each two-slot factor is the basing over the spectator
/// slot.  Over a Cartan Levi this coincides with qdybe_sides.
template <class F>
IdentitySides<F> qdybe_based_sides(const PbwOrder& ord, const std::vector<F>& lambda,
                                   const Rep& v, const Rep& w, const Rep& u) {
    Matrix<F> r12_plain = kron(dynamical_r(ord, lambda, v, w), Matrix<F>::identity(u.dim));
    Matrix<F> r23_plain = kron(Matrix<F>::identity(v.dim), dynamical_r(ord, lambda, w, u));
    Matrix<F> r12_based = based_r_matrix(ord, lambda, v, w, u);
    Matrix<F> p23 = promote_matrix<F>(perm3_matrix({v.dim, w.dim, u.dim}, {0, 2, 1}));
    Matrix<F> p23_inv = promote_matrix<F>(perm3_matrix({v.dim, u.dim, w.dim}, {0, 2, 1}));
    Matrix<F> r13_plain = p23_inv * kron(dynamical_r(ord, lambda, v, u), Matrix<F>::identity(w.dim)) * p23;
    Matrix<F> r13_based = p23_inv * based_r_matrix(ord, lambda, v, u, w) * p23;
    Matrix<F> rho = promote_matrix<F>(perm3_matrix({v.dim, w.dim, u.dim}, {2, 0, 1}));
    Matrix<F> rho_inv = promote_matrix<F>(perm3_matrix({w.dim, u.dim, v.dim}, {1, 2, 0}));
    Matrix<F> r23_based = rho_inv * based_r_matrix(ord, lambda, w, u, v) * rho;
    Matrix<F> lhs = r12_plain * r13_based * r23_plain;
    Matrix<F> rhs = r23_based * r13_plain * r12_based;
    return {std::move(lhs), std::move(rhs)};
}

/// Does m commute with Delta(x) on V (x) W for every listed g basis index?
template <class F>
bool commutes_with_generators(const Matrix<F>& m, const Rep& v, const Rep& w,
                              const std::vector<int>& gens) {
    for (int gidx : gens) {
        Matrix<F> d = kron(promote_matrix<F>(v.act(gidx)), Matrix<F>::identity(w.dim)) +
                      kron(Matrix<F>::identity(v.dim), promote_matrix<F>(w.act(gidx)));
        if (!(d * m == m * d)) return false;
    }
    return true;
}

/// Levi equivariance of a twist: commutation with every Levi generator and
/// every Cartan generator.
template <class F>
bool levi_equivariant(const Matrix<F>& m, const Levi& levi, const Rep& v, const Rep& w) {
    const LieAlgebra& g = levi.algebra();
    std::vector<int> gens = levi.levi_generators();
    for (int i = 0; i < g.rank(); ++i) gens.push_back(g.h_index(i));
    return commutes_with_generators(m, v, w, gens);
}

/// Smallest k with (m - id)^k = 0, or -1 if m - id is not nilpotent.
template <class F>
int unipotence_index(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("unipotence_index: matrix not square");
    Matrix<F> n = m - Matrix<F>::identity(m.rows());
    Matrix<F> p = Matrix<F>::identity(m.rows());
    for (int k = 0; k <= m.rows(); ++k) {
        if (p.is_zero()) return k;
        p = p * n;
    }
    return -1;
}

/// Every nonzero entry connects basis vectors of equal total weight.
template <class F>
bool preserves_weights(const Matrix<F>& m, const Rep& v, const Rep& w) {
    auto total = [&](int idx) {
        int i = idx / w.dim, j = idx % w.dim;
        std::vector<int> t = v.weights[static_cast<size_t>(i)];
        for (size_t q = 0; q < t.size(); ++q) t[q] += w.weights[static_cast<size_t>(j)][q];
        return t;
    };
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!field_is_zero(m.at(r, c)) && total(r) != total(c)) return false;
    return true;
}

/// Coefficient of t^k in m(lam / t), entrywise.  Throws PoleAtOriginError if
/// some entry has a pole along the scaled ray, std::domain_error if an entry
/// has a genuine pole at t = 0.
Matrix<RatFunc> scale_coefficient(const Matrix<RatFunc>& m, int k);

/// Classical dynamical r-matrix: t-linear coefficient of Rbar(lam / t).
/// Requires the t^0 coefficient to be the identity.
Matrix<RatFunc> classical_r(const Matrix<RatFunc>& rbar);

/// Residual of the classical dynamical Yang-Baxter equation with zero
/// coupling on V (x) W (x) U:
///   sum_i [ d_i r23 h_i^(1) - d_i r13 h_i^(2) + d_i r12 h_i^(3) ]
///     - ( [r12, r13] + [r12, r23] + [r13, r23] ),
/// where i runs over the excluded coroots and d_i is d/d lam_i.
Matrix<RatFunc> cdybe_residual(const Levi& levi, const Rep& v, const Rep& w, const Rep& u,
                               const Matrix<RatFunc>& r_vw, const Matrix<RatFunc>& r_vu,
                               const Matrix<RatFunc>& r_wu);

/// r + flip . r . flip on V (x) V.
Matrix<RatFunc> symmetrized(const Matrix<RatFunc>& r, int d);

}  // namespace dyntwist
