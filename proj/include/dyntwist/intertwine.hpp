#pragma once

/*
 * Canonical intertwining operators between induced modules.
 *
 * For an inducing l-module X and a finite-dimensional g-module B the
 * canonical intertwiner is the g-map
 *
 *     Phi : M_{X (x) B|_l}  ->  M_X (x) B
 *
 * whose degree-zero coefficient is the identity of X (x) B.  By the
 * universal property of induction such a map is the same thing as a p-map
 * X (x) B -> M_X (x) B (with the nilradical acting by zero on the source),
 * so the solver imposes, on the images Phi_z of the generators z:
 *
 *   - annihilation by every excluded simple raising generator, and
 *   - equivariance under the semisimple Levi generators,
 *
 * with Cartan equivariance enforced structurally by matching integer weight
 * offsets.  Weight matching also bounds the depth of the true solution, so
 * the computed map is exact, not a truncation.  The system splits into
 * blocks indexed by the excluded-root content of the weight of z.  A
 * non-unique or unsolvable block means the character point fails to be
 * generic for this pair; that is reported by NonGenericError.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dyntwist/linalg.hpp"
#include "dyntwist/rep.hpp"
#include "dyntwist/verma.hpp"

namespace dyntwist {

struct NonGenericError : std::domain_error {
    using std::domain_error::domain_error;
};

template <class F>
struct IntertwinerTerm {
    Word word;   // negative-nilradical monomial
    int xcomp;   // X component
    int bcomp;   // B component
    F coeff;
};

template <class F>
struct Intertwiner {
    const Rep* b = nullptr;
    int xdim = 0;
    int depth = 0;
    int max_block = 0;  // largest unknown count over weight blocks (degree witness)
    // terms[z] for the generator z = x_j (x) b_k at flat index j*b->dim + k;
    // the degree-zero term (empty word, j, k, 1) is included
    std::vector<std::vector<IntertwinerTerm<F>>> terms;
};

/// Depth of the deepest possible term of a canonical intertwiner for (X, B):
/// the spread of the excluded-root content across the weights of X (x) B.
template <class F>
int intertwiner_depth(const InducingModule<F>& x, const Rep& b) {
    const Levi& levi = *x.levi;
    const LieAlgebra& g = levi.algebra();
    const int rank = g.rank();

    Matrix<Rational> cartan(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            int v = (i == j) ? 2 : ((i - j == 1 || j - i == 1) ? -1 : 0);
            cartan.at(i, j) = Rational(v);
        }

    std::vector<std::vector<int>> offs;
    for (int j = 0; j < x.dim; ++j)
        for (int k = 0; k < b.dim; ++k) {
            std::vector<int> off = x.offsets[static_cast<size_t>(j)];
            for (int i = 0; i < rank; ++i) off[static_cast<size_t>(i)] += b.weights[static_cast<size_t>(k)][static_cast<size_t>(i)];
            offs.push_back(std::move(off));
        }
    if (offs.empty()) return 0;

    int lo = 0, hi = 0;
    for (const auto& off : offs) {
        Vec<Rational> delta(static_cast<size_t>(rank));
        for (int i = 0; i < rank; ++i) delta[static_cast<size_t>(i)] = Rational(off[static_cast<size_t>(i)] - offs[0][static_cast<size_t>(i)]);
        SolveResult<Rational> sol = solve_linear(cartan, delta);
        if (sol.status != SolveStatus::Unique)
            throw std::logic_error("intertwiner_depth: Cartan matrix must be invertible");
        Rational height(0);
        for (int e : levi.excluded()) height = height + sol.particular[static_cast<size_t>(e)];
        if (!height.is_integer()) throw std::invalid_argument("intertwiner_depth: weights not in a common root-lattice coset");
        int h = static_cast<int>(height.num().convert_to<long long>());
        lo = std::min(lo, h);
        hi = std::max(hi, h);
    }
    return hi - lo;
}

namespace detail {

template <class F>
struct UnknownKey {
    int z;       // generator index
    int vbasis;  // Verma basis index (depth >= 1)
    int bcomp;
};

}  // namespace detail

/// Solve for the canonical intertwiner.  Throws NonGenericError if any
/// weight block fails to determine it uniquely.
template <class F>
Intertwiner<F> solve_intertwiner(const PbwOrder& ord, const InducingModule<F>& x, const Rep& b) {
    const Levi& levi = ord.levi();
    const LieAlgebra& g = levi.algebra();
    const int depth = intertwiner_depth(x, b);
    ParabolicVerma<F> verma(ord, x, depth, DepthPolicy::Strict);
    const int zn = x.dim * b.dim;

    Intertwiner<F> out;
    out.b = &b;
    out.xdim = x.dim;
    out.depth = depth;
    out.terms.assign(static_cast<size_t>(zn), {});

    // integer offsets
    std::vector<std::vector<int>> zoff(static_cast<size_t>(zn));
    for (int j = 0; j < x.dim; ++j)
        for (int k = 0; k < b.dim; ++k) {
            std::vector<int> off = x.offsets[static_cast<size_t>(j)];
            for (size_t i = 0; i < off.size(); ++i) off[i] += b.weights[static_cast<size_t>(k)][i];
            zoff[static_cast<size_t>(j * b.dim + k)] = std::move(off);
        }
    std::vector<std::vector<int>> moff(static_cast<size_t>(verma.dim()));
    for (int i = 0; i < verma.dim(); ++i) moff[static_cast<size_t>(i)] = verma.offset(i);

    // Block generators by the excluded-root content of their weight: the
    // coordinates of off(z) - off(z0) on the excluded simple roots.  Those
    // are invariant under the semisimple Levi action (which only adds
    // retained roots), so the equations close within each block.
    std::vector<std::vector<int>> blocks;
    {
        const int rank = g.rank();
        Matrix<Rational> cartan(rank, rank);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                cartan.at(i, j) = Rational((i == j) ? 2 : ((i - j == 1 || j - i == 1) ? -1 : 0));
        std::vector<std::vector<Rational>> seen;
        for (int z = 0; z < zn; ++z) {
            Vec<Rational> delta(static_cast<size_t>(rank));
            for (int i = 0; i < rank; ++i)
                delta[static_cast<size_t>(i)] = Rational(zoff[static_cast<size_t>(z)][static_cast<size_t>(i)] - zoff[0][static_cast<size_t>(i)]);
            SolveResult<Rational> sol = solve_linear(cartan, delta);
            std::vector<Rational> key;
            for (int e : levi.excluded()) key.push_back(sol.particular[static_cast<size_t>(e)]);
            auto it = std::find(seen.begin(), seen.end(), key);
            if (it == seen.end()) {
                seen.push_back(key);
                blocks.push_back({z});
            } else {
                blocks[static_cast<size_t>(it - seen.begin())].push_back(z);
            }
        }
    }

    // the action of a Levi generator on X (x) B
    auto levi_on_z = [&](int gidx) {
        Matrix<F> m = kron(x.action(gidx), Matrix<F>::identity(b.dim)) +
                      kron(Matrix<F>::identity(x.dim), promote_matrix<F>(b.act(gidx)));
        return m;
    };
    std::map<int, Matrix<F>> zact;
    for (int gidx : levi.l0_generators()) zact.emplace(gidx, levi_on_z(gidx));

    for (const auto& block : blocks) {
        // unknown terms: weight-matched (vbasis, bcomp) pairs of depth >= 1 per z
        std::vector<detail::UnknownKey<F>> unknowns;
        for (int z : block)
            for (int i = 0; i < verma.dim(); ++i) {
                if (verma.depth(i) == 0) continue;
                for (int l = 0; l < b.dim; ++l) {
                    bool match = true;
                    for (size_t q = 0; q < zoff[static_cast<size_t>(z)].size(); ++q)
                        if (moff[static_cast<size_t>(i)][q] + b.weights[static_cast<size_t>(l)][q] !=
                            zoff[static_cast<size_t>(z)][q]) {
                            match = false;
                            break;
                        }
                    if (!match) continue;
                    unknowns.push_back({z, i, l});
                }
            }

        // rows: (equation tag, z or z-pair, M basis, B comp) assembled densely
        std::vector<Vec<F>> rows;
        std::vector<F> rhs;
        auto add_row = [&](const Matrix<F>& lhs_cols, const Vec<F>& constant) {
            for (int r = 0; r < lhs_cols.rows(); ++r) {
                bool any = !field_is_zero(constant[static_cast<size_t>(r)]);
                Vec<F> row(unknowns.size(), F{});
                for (size_t c = 0; c < unknowns.size(); ++c) {
                    row[c] = lhs_cols.at(r, static_cast<int>(c));
                    if (!any && !field_is_zero(row[c])) any = true;
                }
                if (!any) continue;
                rows.push_back(std::move(row));
                rhs.push_back(F{} - constant[static_cast<size_t>(r)]);
            }
        };

        const int mb = verma.dim() * b.dim;  // ambient component count of M_X (x) B

        // image of Phi_z under a generator acting by Delta: unknown-linear part
        // (columns) and pinned-term constant
        auto assemble_action = [&](int gidx, int z, Matrix<F>& cols, Vec<F>& constant) {
            cols = Matrix<F>(mb, static_cast<int>(unknowns.size()));
            constant.assign(static_cast<size_t>(mb), F{});
            const Matrix<F>& gm = verma.generator_matrix(gidx);
            const Matrix<Rational>& bm = b.act(gidx);
            // pinned term: (empty word, xcomp j) (x) b_k
            int j = z / b.dim, k = z % b.dim;
            int pin = verma.index(Word{}, j);
            for (int r = 0; r < verma.dim(); ++r)
                if (!field_is_zero(gm.at(r, pin))) constant[static_cast<size_t>(r * b.dim + k)] = constant[static_cast<size_t>(r * b.dim + k)] + gm.at(r, pin);
            for (int r = 0; r < b.dim; ++r)
                if (!bm.at(r, k).is_zero())
                    constant[static_cast<size_t>(pin * b.dim + r)] =
                        constant[static_cast<size_t>(pin * b.dim + r)] + field_from_rational<F>(bm.at(r, k));
            for (size_t c = 0; c < unknowns.size(); ++c) {
                if (unknowns[c].z != z) continue;
                int vi = unknowns[c].vbasis, l = unknowns[c].bcomp;
                for (int r = 0; r < verma.dim(); ++r)
                    if (!field_is_zero(gm.at(r, vi)))
                        cols.at(r * b.dim + l, static_cast<int>(c)) = cols.at(r * b.dim + l, static_cast<int>(c)) + gm.at(r, vi);
                for (int r = 0; r < b.dim; ++r)
                    if (!bm.at(r, l).is_zero())
                        cols.at(vi * b.dim + r, static_cast<int>(c)) =
                            cols.at(vi * b.dim + r, static_cast<int>(c)) + field_from_rational<F>(bm.at(r, l));
            }
        };

        for (int z : block) {
            // highest-weight equations: Delta(e_i) Phi_z = 0 for excluded i
            for (int exc : levi.excluded()) {
                int gidx = g.e_index(g.simple_root_index(exc));
                Matrix<F> cols;
                Vec<F> constant;
                assemble_action(gidx, z, cols, constant);
                add_row(cols, constant);
            }
            // Levi equivariance: Delta(a) Phi_z - Phi_{a z} = 0
            for (int gidx : levi.l0_generators()) {
                Matrix<F> cols;
                Vec<F> constant;
                assemble_action(gidx, z, cols, constant);
                const Matrix<F>& az = zact.at(gidx);
                for (int z2 : block) {
                    const F& c = az.at(z2, z);
                    if (field_is_zero(c)) continue;
                    // subtract c * Phi_{z2}
                    int j2 = z2 / b.dim, k2 = z2 % b.dim;
                    int pin2 = verma.index(Word{}, j2);
                    constant[static_cast<size_t>(pin2 * b.dim + k2)] = constant[static_cast<size_t>(pin2 * b.dim + k2)] - c;
                    for (size_t uc = 0; uc < unknowns.size(); ++uc) {
                        if (unknowns[uc].z != z2) continue;
                        cols.at(unknowns[uc].vbasis * b.dim + unknowns[uc].bcomp, static_cast<int>(uc)) =
                            cols.at(unknowns[uc].vbasis * b.dim + unknowns[uc].bcomp, static_cast<int>(uc)) - c;
                    }
                }
                add_row(cols, constant);
            }
        }

        out.max_block = std::max(out.max_block, static_cast<int>(unknowns.size()));
        Vec<F> solution(unknowns.size(), F{});
        if (!unknowns.empty()) {
            Matrix<F> sys(static_cast<int>(rows.size()), static_cast<int>(unknowns.size()));
            Vec<F> sysrhs(rows.size(), F{});
            for (size_t r = 0; r < rows.size(); ++r) {
                for (size_t c = 0; c < unknowns.size(); ++c) sys.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
                sysrhs[r] = rhs[r];
            }
            SolveResult<F> sol = solve_linear(sys, sysrhs);
            if (sol.status == SolveStatus::Inconsistent)
                throw NonGenericError("intertwiner: no solution with identity leading term at this character point");
            if (sol.status == SolveStatus::Family)
                throw NonGenericError("intertwiner: solution is not unique at this character point");
            solution = sol.particular;
        } else if (!rows.empty()) {
            for (const F& c : rhs)
                if (!field_is_zero(c))
                    throw NonGenericError("intertwiner: no solution with identity leading term at this character point");
        }

        for (int z : block) {
            int j = z / b.dim, k = z % b.dim;
            out.terms[static_cast<size_t>(z)].push_back({Word{}, j, k, field_unit<F>()});
        }
        for (size_t c = 0; c < unknowns.size(); ++c) {
            if (field_is_zero(solution[c])) continue;
            const auto& u = unknowns[c];
            out.terms[static_cast<size_t>(u.z)].push_back(
                {verma.word(u.vbasis), verma.xcomp(u.vbasis), u.bcomp, solution[c]});
        }
    }
    return out;
}

/// dim Hom_g(M_{C_mu}, M_{C_lambda} (x) V) computed by a homogeneous solve in
/// the depth window.  For generic lambda this equals the dimension of the
/// l_0-invariant subspace of V at c-weight mu - lambda.
int hom_dimension(const PbwOrder& ord, const std::vector<Rational>& lambda, const std::vector<Rational>& mu,
                  const Rep& v, int depth);

}  // namespace dyntwist
