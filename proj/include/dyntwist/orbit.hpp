#pragma once

/*
 * Matrix-coefficient algebra of a reductive group.  Elements live in blocks
 * E (x) E* indexed by the dominant highest weight of E; rows carry the left
 * regular action ru1 (on E), columns the right regular action ru2 (on E*).
 * The classical product of two coefficients is the exact Clebsch-Gordan
 * decomposition of the tensor coefficient; the dynamical family
 *
 *     m_lam(a, b) = m( F(lam) (a (x) b) )
 *
 * applies the raw fusion twist of the ru2 slot pair before multiplying.
 * With this orientation the family obeys
 *
 *     (a *_lam b) *_lam c = a *_lam (b *_{lam + wt2(a)} c),
 *
 * where wt2(a) is the ru2 c-weight of a.  A section of the line bundle of
 * character alpha has wt2 = -alpha, so right actions shift the parameter by
 * -alpha while invariant functions (wt2 = 0) multiply associatively and act
 * on every bundle from the left without any shift.
 *
 * Substituting lam -> (l0 + t l1)/t and expanding in t yields the quantized
 * products on the coadjoint orbit through l0; order 0 is the classical
 * product and the order-t skew part of the invariant subalgebra is the
 * Kirillov bracket of the orbit.
 *
 * The declared highest-weight set only bounds which blocks may appear as
 * *inputs* of a twisted product (their twists have to be solved); outputs
 * are always kept exactly, so an undeclared input raises an error rather
 * than a term being dropped.
 */

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dyntwist/linalg.hpp"
#include "dyntwist/pbw.hpp"
#include "dyntwist/rep.hpp"
#include "dyntwist/rootdata.hpp"
#include "dyntwist/rational.hpp"
#include "dyntwist/series.hpp"
#include "dyntwist/twist.hpp"

namespace dyntwist {

template <class F>
struct AgElement {
    // highest weight of E -> coefficient matrix (rows index E, columns E*)
    std::map<std::vector<int>, Matrix<F>> blocks;

    void prune() {
        for (auto it = blocks.begin(); it != blocks.end();) {
            if (it->second.is_zero()) it = blocks.erase(it);
            else ++it;
        }
    }

    bool is_zero() const {
        for (const auto& [h, m] : blocks)
            if (!m.is_zero()) return false;
        return true;
    }

    AgElement operator+(const AgElement& o) const {
        AgElement out = *this;
        for (const auto& [h, m] : o.blocks) {
            auto it = out.blocks.find(h);
            if (it == out.blocks.end()) out.blocks.emplace(h, m);
            else it->second = it->second + m;
        }
        out.prune();
        return out;
    }

    AgElement operator-(const AgElement& o) const { return *this + o.scaled(field_from_rational<F>(Rational(-1))); }

    AgElement scaled(const F& c) const {
        AgElement out = *this;
        for (auto& [h, m] : out.blocks) m = m.scaled(c);
        out.prune();
        return out;
    }

    bool operator==(const AgElement& o) const { return (*this - o).is_zero(); }
    bool operator!=(const AgElement& o) const { return !(*this == o); }
};

class MatrixCoeffAlgebra {
public:
    MatrixCoeffAlgebra(const Levi& levi, std::vector<std::vector<int>> highest);

    const Levi& levi() const { return *levi_; }
    const LieAlgebra& algebra() const { return levi_->algebra(); }
    const PbwOrder& order() const { return order_; }
    const std::vector<std::vector<int>>& declared() const { return declared_; }
    bool is_declared(const std::vector<int>& hw) const;

    /// Block reps are constructed on demand for any dominant weight; only
    /// twisted-product inputs are restricted to the declared set.
    const Rep& block(const std::vector<int>& hw) const;
    const Rep& dual_block(const std::vector<int>& hw) const;

    const std::vector<CGTerm>& tensor_terms(const std::vector<int>& hw1, const std::vector<int>& hw2) const;

    /// Raw fusion twist on dual_block(hw1) (x) dual_block(hw2) in the symbolic
    /// parameter (one variable per central coordinate of the Levi).
    const Matrix<RatFunc>& symbolic_twist(const std::vector<int>& hw1, const std::vector<int>& hw2) const;

    std::vector<RatFunc> symbolic_lambda() const;

    struct ClosurePair {
        std::vector<int> left, right;
        std::vector<std::vector<int>> targets;
        bool closed;
    };
    struct ClosureReport {
        bool closed;
        std::vector<ClosurePair> pairs;
    };
    ClosureReport closure_report() const;

private:
    const Levi* levi_;
    PbwOrder order_;
    std::vector<std::vector<int>> declared_;
    mutable std::map<std::vector<int>, Rep> blocks_, duals_;
    mutable std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<CGTerm>> cg_;
    mutable std::map<std::pair<std::vector<int>, std::vector<int>>, Matrix<RatFunc>> twists_;
};

template <class F>
AgElement<F> unit_element(const MatrixCoeffAlgebra& alg) {
    AgElement<F> out;
    std::vector<int> hw(static_cast<size_t>(alg.algebra().rank()), 0);
    Matrix<F> m(1, 1);
    m.at(0, 0) = field_unit<F>();
    out.blocks.emplace(hw, m);
    return out;
}

template <class F>
AgElement<F> coeff_element(const MatrixCoeffAlgebra& alg, const std::vector<int>& hw, int i, int j) {
    const Rep& e = alg.block(hw);
    if (i < 0 || i >= e.dim || j < 0 || j >= e.dim) throw std::invalid_argument("coeff_element: index out of range");
    AgElement<F> out;
    Matrix<F> m(e.dim, e.dim);
    m.at(i, j) = field_unit<F>();
    out.blocks.emplace(hw, m);
    return out;
}

template <class F>
AgElement<F> promote_element(const AgElement<Rational>& a) {
    AgElement<F> out;
    for (const auto& [h, m] : a.blocks) out.blocks.emplace(h, promote_matrix<F>(m));
    return out;
}

namespace detail {

/// Split a tensor-block coefficient matrix into irreducible coefficient
/// blocks and accumulate them.
template <class F>
void accumulate_blocks(const MatrixCoeffAlgebra& alg, const std::vector<int>& h1, const std::vector<int>& h2,
                       const Matrix<F>& w, AgElement<F>& out) {
    for (const CGTerm& t : alg.tensor_terms(h1, h2)) {
        Matrix<F> blk = promote_matrix<F>(t.projection) * w * promote_matrix<F>(t.injection);
        auto it = out.blocks.find(t.summand.highest);
        if (it == out.blocks.end()) out.blocks.emplace(t.summand.highest, std::move(blk));
        else it->second = it->second + blk;
    }
}

}  // namespace detail

template <class F>
AgElement<F> classical_product(const MatrixCoeffAlgebra& alg, const AgElement<F>& a, const AgElement<F>& b) {
    AgElement<F> out;
    for (const auto& [h1, m1] : a.blocks)
        for (const auto& [h2, m2] : b.blocks) detail::accumulate_blocks(alg, h1, h2, kron(m1, m2), out);
    out.prune();
    return out;
}

/// Dynamical product m . F(lam) on the ru2 slots.  Throws if an input block
/// is outside the declared set (no silent truncation) or if lam is on the
/// non-generic locus of a needed twist.
template <class F>
AgElement<F> dyn_product(const MatrixCoeffAlgebra& alg, const std::vector<F>& lambda, const AgElement<F>& a,
                         const AgElement<F>& b) {
    AgElement<F> out;
    for (const auto& [h1, m1] : a.blocks)
        for (const auto& [h2, m2] : b.blocks) {
            if (!alg.is_declared(h1) || !alg.is_declared(h2))
                throw std::domain_error("dyn_product: input block outside the declared weight set");
            Matrix<F> tw = twist_raw(alg.order(), lambda, alg.dual_block(h1), alg.dual_block(h2));
            detail::accumulate_blocks(alg, h1, h2, Matrix<F>(kron(m1, m2) * tw.transposed()), out);
        }
    out.prune();
    return out;
}

template <class F>
AgElement<F> ru1_act(const MatrixCoeffAlgebra& alg, int gen_idx, const AgElement<F>& a) {
    AgElement<F> out;
    for (const auto& [h, m] : a.blocks) out.blocks.emplace(h, promote_matrix<F>(alg.block(h).act(gen_idx)) * m);
    out.prune();
    return out;
}

template <class F>
AgElement<F> ru2_act(const MatrixCoeffAlgebra& alg, int gen_idx, const AgElement<F>& a) {
    AgElement<F> out;
    for (const auto& [h, m] : a.blocks)
        out.blocks.emplace(h, m * promote_matrix<F>(alg.dual_block(h).act(gen_idx)).transposed());
    out.prune();
    return out;
}

/// The ru2 c-weight of a homogeneous l0-invariant element (the negative of
/// its bundle character).  Throws std::invalid_argument if the element is
/// not homogeneous or not l0-invariant.
template <class F>
std::vector<int> ru2_character(const MatrixCoeffAlgebra& alg, const AgElement<F>& a) {
    if (a.is_zero()) throw std::invalid_argument("ru2_character: zero element");
    bool found = false;
    std::vector<int> cw;
    for (const auto& [h, m] : a.blocks) {
        const Rep& dual = alg.dual_block(h);
        for (int j = 0; j < m.cols(); ++j) {
            bool nonzero = false;
            for (int i = 0; i < m.rows(); ++i)
                if (!field_is_zero(m.at(i, j))) nonzero = true;
            if (!nonzero) continue;
            std::vector<int> w = alg.levi().c_weight(dual.weights[static_cast<size_t>(j)]);
            if (!found) { cw = w; found = true; }
            else if (w != cw) throw std::invalid_argument("ru2_character: element is not ru2-homogeneous");
        }
    }
    for (int gen : alg.levi().l0_generators())
        if (!ru2_act(alg, gen, a).is_zero()) throw std::invalid_argument("ru2_character: element is not l0-invariant");
    return cw;
}

/// Basis of the [nu] ru2-weight component of one block: every E-basis vector
/// against every basis covector of the l0-invariant nu-weight space of E*.
std::vector<AgElement<Rational>> weight_sections(const MatrixCoeffAlgebra& alg, const std::vector<int>& hw,
                                                 const std::vector<int>& nu);

/// (a *_lam b) *_lam c  ==  a *_lam (b *_{lam+shift} c) with shift = wt2(a)
/// (or an explicit override, used by negative controls).
template <class F>
bool check_shifted_associativity(const MatrixCoeffAlgebra& alg, const std::vector<F>& lambda, const AgElement<F>& a,
                                 const AgElement<F>& b, const AgElement<F>& c,
                                 const std::vector<int>* shift_override = nullptr) {
    std::vector<int> shift = shift_override ? *shift_override : ru2_character(alg, a);
    AgElement<F> lhs = dyn_product(alg, lambda, dyn_product(alg, lambda, a, b), c);
    AgElement<F> rhs = dyn_product(alg, lambda, a, dyn_product(alg, shifted_lambda(lambda, shift), b, c));
    return lhs == rhs;
}

/// Coefficients 0..N of the t-expansion of the product along the parameter
/// path lam(t) = (l0 + t l1)/t, applied to series-valued elements.  Checks
/// that order 0 of every needed twist is the identity (the classical limit)
/// and throws std::domain_error otherwise.
using AgSeries = std::vector<AgElement<Rational>>;

AgSeries star_series(const MatrixCoeffAlgebra& alg, const std::vector<Rational>& l0, const std::vector<Rational>& l1,
                     int N, const AgSeries& a, const AgSeries& b);

inline AgSeries as_series(const AgElement<Rational>& a, int N) {
    AgSeries s(static_cast<size_t>(N) + 1);
    s[0] = a;
    return s;
}

inline bool series_equal(const AgSeries& a, const AgSeries& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t k = 0; k < n; ++k) {
        AgElement<Rational> x = k < a.size() ? a[k] : AgElement<Rational>{};
        AgElement<Rational> y = k < b.size() ? b[k] : AgElement<Rational>{};
        if (x != y) return false;
    }
    return true;
}

/// Module laws of the orbit quantization at each t-order up to N, for
/// invariant functions a, b and bundle sections s, t:
///   left law    a * (s * t) == (a * s) * t          (no shift),
///   right law   (s * a) * b == s * (a *' b)         with the inner product
/// on the path l1 + wt2(s), i.e. shifted by -alpha for a section of
/// character alpha.
struct BundleReport {
    bool left_law = false;
    bool right_law = false;
    int orders = 0;
};

BundleReport bundle_module_check(const MatrixCoeffAlgebra& alg, const std::vector<Rational>& l0,
                                 const std::vector<Rational>& l1, int N, const AgElement<Rational>& a,
                                 const AgElement<Rational>& b, const AgElement<Rational>& s,
                                 const AgElement<Rational>& t);

}  // namespace dyntwist
