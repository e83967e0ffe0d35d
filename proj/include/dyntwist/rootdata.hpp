#pragma once

/*
 * Type-A Lie algebra data in the Chevalley basis of elementary matrices.
 *
 * For sl_n the basis is indexed as follows: positive roots are the segments
 * [lo..hi] of simple-root indices (0-based), realized as e = E_{lo,hi+1} and
 * f = E_{hi+1,lo}; the Cartan basis is h_i = E_{ii} - E_{i+1,i+1}.  All
 * structure constants are computed from the defining representation, so
 * bracket relations hold by construction; nondegeneracy of the trace form
 * and the bracket table's closure are verified at build time.
 *
 * The invariant form used throughout is the defining-representation trace
 * form (x,y) = tr(xy).  For sl_n the Killing form is 2n times it; the
 * factor is exposed as killing_factor() so downstream consumers can convert.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "dyntwist/linalg.hpp"
#include "dyntwist/rational.hpp"

namespace dyntwist {

struct PosRoot {
    int lo, hi;  // inclusive range of simple-root indices
    int height() const { return hi - lo + 1; }
};

/// Sparse expansion of a Lie-algebra element in the Chevalley basis.
using BasisCombo = std::vector<std::pair<int, Rational>>;

class LieAlgebra {
public:
    static LieAlgebra sl(int n);

    int n() const { return n_; }
    int rank() const { return rank_; }
    int dim() const { return static_cast<int>(defrep_.size()); }
    int num_positive() const { return static_cast<int>(positive_.size()); }

    // Basis layout: [0, P) raising root vectors, [P, 2P) lowering root
    // vectors, [2P, 2P + rank) Cartan h_i.
    int e_index(int p) const { return p; }
    int f_index(int p) const { return num_positive() + p; }
    int h_index(int i) const { return 2 * num_positive() + i; }
    bool is_raising(int idx) const { return idx < num_positive(); }
    bool is_lowering(int idx) const { return idx >= num_positive() && idx < 2 * num_positive(); }
    bool is_cartan(int idx) const { return idx >= 2 * num_positive(); }

    const PosRoot& positive_root(int p) const { return positive_[p]; }
    /// The positive root attached to a root-vector basis index.
    const PosRoot& root_of(int idx) const {
        if (is_cartan(idx)) throw std::invalid_argument("root_of: Cartan element");
        return positive_[is_raising(idx) ? idx : idx - num_positive()];
    }
    int simple_root_index(int i) const;  // position of root [i..i] in the positive list

    const Matrix<Rational>& defining_matrix(int idx) const { return defrep_[idx]; }

    /// [x_a, x_b] expanded in the basis.
    const BasisCombo& bracket(int a, int b) const { return bracket_[a][b]; }

    /// Defining-representation trace form (x_a, x_b).
    Rational trace_form(int a, int b) const;
    /// Killing form = killing_factor() * trace form for sl_n.
    int killing_factor() const { return 2 * n_; }

    /// h_i-eigenvalue vector of the root vector at basis index idx
    /// (its weight under the adjoint Cartan action); zero for Cartan indices.
    std::vector<int> adjoint_weight(int idx) const;

    std::string generator_name(int idx) const;

private:
    LieAlgebra() = default;

    int n_ = 0, rank_ = 0;
    std::vector<PosRoot> positive_;
    std::vector<Matrix<Rational>> defrep_;
    std::vector<std::vector<BasisCombo>> bracket_;
};

enum class Genericity { Generic, NonGeneric, NotDecidable };

/// Levi subalgebra selection: S = retained simple-root indices.  The
/// character coordinates live on the coroots h_i of the excluded simple
/// roots, normalized so (e_i, f_i) = 1 under the trace form.
class Levi {
public:
    Levi(const LieAlgebra& g, std::vector<int> retained);

    const LieAlgebra& algebra() const { return *g_; }
    const std::vector<int>& retained() const { return retained_; }
    const std::vector<int>& excluded() const { return excluded_; }
    int r() const { return static_cast<int>(excluded_.size()); }

    /// Does the positive root at index p lie in the Levi part (support
    /// entirely inside the retained set)?
    bool root_in_levi(int p) const { return root_levi_[p]; }

    enum class Part { NegNilradical, LeviPart, PosNilradical };
    Part part(int basis_idx) const;

    /// Generators of l as basis indices: retained-support e's and f's plus
    /// the full Cartan.
    const std::vector<int>& levi_generators() const { return levi_gens_; }
    /// Semisimple-part generators (root vectors with retained support only).
    const std::vector<int>& l0_generators() const { return l0_gens_; }
    /// Basis indices of the negative nilradical n_l^- (lowering, excluded support).
    const std::vector<int>& neg_nilradical() const { return neg_nil_; }
    const std::vector<int>& pos_nilradical() const { return pos_nil_; }

    /// Number of excluded simple roots in the root at index p (with
    /// multiplicity 1 each in type A) — the depth grading unit.
    int excluded_height(int p) const;

    /// c-weight of an h-eigenvalue vector: its coordinates on the excluded
    /// coroots.
    std::vector<int> c_weight(const std::vector<int>& eigen) const;

    /// Is the eigenvalue vector zero on all retained coroots (the weight-level
    /// prerequisite for l_0-invariance)?
    bool retained_trivial(const std::vector<int>& eigen) const;

private:
    const LieAlgebra* g_;
    std::vector<int> retained_, excluded_;
    std::vector<bool> root_levi_;
    std::vector<int> levi_gens_, l0_gens_, neg_nil_, pos_nil_;
};

/// A point (or the symbolic tuple) of character coordinates λ_1..λ_r, the
/// values on the excluded coroots.
class CharacterPoint {
public:
    static CharacterPoint symbolic(int r) {
        CharacterPoint p;
        p.r_ = r;
        p.symbolic_ = true;
        return p;
    }
    static CharacterPoint numeric(std::vector<Rational> values) {
        CharacterPoint p;
        p.r_ = static_cast<int>(values.size());
        p.values_ = std::move(values);
        return p;
    }

    int r() const { return r_; }
    bool is_symbolic() const { return symbolic_; }
    const std::vector<Rational>& values() const {
        if (symbolic_) throw std::domain_error("CharacterPoint: symbolic point has no numeric values");
        return values_;
    }

private:
    int r_ = 0;
    bool symbolic_ = false;
    std::vector<Rational> values_;
};

/// Generic iff no coordinate is an integer; symbolic points are not decidable.
Genericity is_generic(const CharacterPoint& lambda, const Levi& levi);

}  // namespace dyntwist
