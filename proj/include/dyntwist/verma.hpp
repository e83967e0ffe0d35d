#pragma once

/*
 * Parabolically induced modules M_X = U(g) (x)_{U(p)} X truncated at a
 * chosen depth, where p = l + n_l^+ and X is a finite-dimensional l-module
 * on which n_l^+ acts by zero.  X is described by exact Cartan eigenvalues
 * (a character base point plus integer offsets) and matrices for the
 * semisimple Levi generators.  The module basis is (normal-ordered
 * nilradical monomial, X component); the depth of a basis vector counts
 * excluded simple roots in its monomial with multiplicity.
 *
 * The scalar field F is Rational for numeric character points and RatFunc
 * for symbolic ones.
 */

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dyntwist/linalg.hpp"
#include "dyntwist/pbw.hpp"
#include "dyntwist/rep.hpp"
#include "dyntwist/rootdata.hpp"

namespace dyntwist {

/// Cartan eigenvalue vector (one entry per h_i) of the character that is
/// lambda on the excluded coroots and zero on the retained ones.
template <class F>
Vec<F> character_eigen(const Levi& levi, const std::vector<F>& lambda) {
    if (static_cast<int>(lambda.size()) != levi.r())
        throw std::invalid_argument("character_eigen: coordinate arity mismatch");
    const LieAlgebra& g = levi.algebra();
    Vec<F> eig(static_cast<size_t>(g.rank()), F{});
    for (size_t j = 0; j < levi.excluded().size(); ++j)
        eig[static_cast<size_t>(levi.excluded()[j])] = lambda[j];
    return eig;
}

template <class F>
struct InducingModule {
    const Levi* levi = nullptr;
    int dim = 0;
    std::vector<Vec<F>> cartan_eig;          // [k][i] = eigenvalue of h_i on x_k
    std::vector<std::vector<int>> offsets;   // integer part of the weight, per basis vector
    std::map<int, Matrix<F>> l0_action;      // semisimple Levi generators
    std::string name;

    Matrix<F> action(int idx) const {
        const LieAlgebra& g = levi->algebra();
        if (g.is_cartan(idx)) {
            int i = idx - 2 * g.num_positive();
            Matrix<F> m(dim, dim);
            for (int k = 0; k < dim; ++k) m.at(k, k) = cartan_eig[static_cast<size_t>(k)][static_cast<size_t>(i)];
            return m;
        }
        auto it = l0_action.find(idx);
        if (it == l0_action.end()) throw std::invalid_argument("InducingModule::action: index not in the Levi");
        return it->second;
    }

    std::vector<int> c_offset(int k) const { return levi->c_weight(offsets[static_cast<size_t>(k)]); }
};

template <class F>
InducingModule<F> rep_inducing(const Levi& levi, const std::vector<F>& lambda, const Rep& v) {
    InducingModule<F> x;
    x.levi = &levi;
    x.dim = v.dim;
    Vec<F> base = character_eigen(levi, lambda);
    for (int k = 0; k < v.dim; ++k) {
        Vec<F> eig = base;
        for (size_t i = 0; i < eig.size(); ++i)
            eig[i] = eig[i] + field_from_rational<F>(Rational(v.weights[static_cast<size_t>(k)][i]));
        x.cartan_eig.push_back(std::move(eig));
        x.offsets.push_back(v.weights[static_cast<size_t>(k)]);
    }
    for (int idx : levi.l0_generators()) x.l0_action.emplace(idx, promote_matrix<F>(v.act(idx)));
    x.name = "C_lambda (x) " + v.name;
    return x;
}

template <class F>
InducingModule<F> scalar_inducing(const Levi& levi, const std::vector<F>& lambda) {
    InducingModule<F> x = rep_inducing(levi, lambda, trivial_rep(levi.algebra()));
    x.name = "C_lambda";
    return x;
}

template <class F>
InducingModule<F> tensor_inducing(const InducingModule<F>& x, const Rep& v) {
    InducingModule<F> t;
    t.levi = x.levi;
    t.dim = x.dim * v.dim;
    for (int k = 0; k < x.dim; ++k)
        for (int m = 0; m < v.dim; ++m) {
            Vec<F> eig = x.cartan_eig[static_cast<size_t>(k)];
            std::vector<int> off = x.offsets[static_cast<size_t>(k)];
            for (size_t i = 0; i < eig.size(); ++i) {
                eig[i] = eig[i] + field_from_rational<F>(Rational(v.weights[static_cast<size_t>(m)][i]));
                off[i] += v.weights[static_cast<size_t>(m)][i];
            }
            t.cartan_eig.push_back(std::move(eig));
            t.offsets.push_back(std::move(off));
        }
    Matrix<F> ix = Matrix<F>::identity(x.dim);
    Matrix<F> iv = Matrix<F>::identity(v.dim);
    for (const auto& [idx, mat] : x.l0_action)
        t.l0_action.emplace(idx, kron(mat, iv) + kron(ix, promote_matrix<F>(v.act(idx))));
    t.name = x.name + " (x) " + v.name;
    return t;
}

/// Normal-ordered monomials in the negative nilradical up to the given
/// depth, in deterministic order (depth, then lexicographic word).
std::vector<Word> nilradical_words(const PbwOrder& ord, int max_depth);

int word_depth(const Levi& levi, const Word& w);

enum class DepthPolicy { Truncate, Strict };

struct DepthExceeded : std::domain_error {
    using std::domain_error::domain_error;
};

template <class F>
class ParabolicVerma {
public:
    ParabolicVerma(const PbwOrder& ord, InducingModule<F> x, int depth, DepthPolicy policy = DepthPolicy::Truncate)
        : ord_(&ord), x_(std::move(x)), depth_(depth), policy_(policy) {
        const Levi& levi = ord.levi();
        std::vector<Word> words = nilradical_words(ord, depth);
        std::vector<std::pair<int, Word>> keyed;
        for (auto& w : words) keyed.emplace_back(word_depth(levi, w), std::move(w));
        std::sort(keyed.begin(), keyed.end());
        for (auto& [d, w] : keyed)
            for (int k = 0; k < x_.dim; ++k) {
                index_[{w, k}] = static_cast<int>(words_.size());
                words_.push_back(w);
                xcomps_.push_back(k);
                depths_.push_back(d);
            }
        for (int idx : levi.levi_generators()) xact_.emplace(idx, x_.action(idx));
    }

    const PbwOrder& order() const { return *ord_; }
    const InducingModule<F>& inducing() const { return x_; }
    int dim() const { return static_cast<int>(words_.size()); }
    int depth_bound() const { return depth_; }
    const Word& word(int i) const { return words_[static_cast<size_t>(i)]; }
    int xcomp(int i) const { return xcomps_[static_cast<size_t>(i)]; }
    int depth(int i) const { return depths_[static_cast<size_t>(i)]; }

    int index(const Word& w, int k) const {
        auto it = index_.find({w, k});
        return it == index_.end() ? -1 : it->second;
    }

    /// Integer weight offset of basis vector i (word weight + X offset).
    std::vector<int> offset(int i) const {
        const LieAlgebra& g = ord_->algebra();
        std::vector<int> off = x_.offsets[static_cast<size_t>(xcomps_[static_cast<size_t>(i)])];
        for (int idx : words_[static_cast<size_t>(i)]) {
            std::vector<int> aw = g.adjoint_weight(idx);
            for (size_t j = 0; j < off.size(); ++j) off[j] += aw[j];
        }
        return off;
    }

    /// Apply a single free word of generators (leftmost factor acts last).
    Vec<F> apply_word(const Word& w, const Vec<F>& v) const {
        Vec<F> out(static_cast<size_t>(dim()), F{});
        for (int i = 0; i < dim(); ++i) {
            if (field_is_zero(v[static_cast<size_t>(i)])) continue;
            accumulate_word_on_basis(w, i, v[static_cast<size_t>(i)], out);
        }
        return out;
    }

    Vec<F> apply(const PbwCombo<F>& u, const Vec<F>& v) const {
        Vec<F> out(static_cast<size_t>(dim()), F{});
        for (const auto& [w, c] : u) {
            Vec<F> part = apply_word(w, v);
            for (size_t i = 0; i < part.size(); ++i)
                if (!field_is_zero(part[i])) out[i] = out[i] + part[i] * c;
        }
        return out;
    }

    /// Matrix of a single generator (memoized).
    const Matrix<F>& generator_matrix(int gidx) const {
        auto it = genmat_.find(gidx);
        if (it != genmat_.end()) return it->second;
        Matrix<F> m(dim(), dim());
        for (int i = 0; i < dim(); ++i) {
            Vec<F> col(static_cast<size_t>(dim()), F{});
            accumulate_word_on_basis({gidx}, i, field_unit<F>(), col);
            for (int r = 0; r < dim(); ++r) m.at(r, i) = col[static_cast<size_t>(r)];
        }
        return genmat_.emplace(gidx, std::move(m)).first->second;
    }

    Vec<F> basis_vector(int i) const {
        Vec<F> v(static_cast<size_t>(dim()), F{});
        v[static_cast<size_t>(i)] = field_unit<F>();
        return v;
    }

    /// Index of the cyclic vector over X component k.
    int cyclic_index(int k = 0) const { return index(Word{}, k); }

private:
    void accumulate_word_on_basis(const Word& w, int i, const F& coeff, Vec<F>& out) const {
        const Levi& levi = ord_->levi();
        Word full = w;
        const Word& base = words_[static_cast<size_t>(i)];
        full.insert(full.end(), base.begin(), base.end());
        PbwCombo<F> nf = normal_order_word(*ord_, full, coeff);
        for (const auto& [nw, c] : nf) {
            // split the normal word into nilradical / Levi / nilradical parts
            size_t p = 0;
            Word neg;
            while (p < nw.size() && levi.part(nw[p]) == Levi::Part::NegNilradical) neg.push_back(nw[p++]);
            size_t levi_begin = p;
            while (p < nw.size() && levi.part(nw[p]) == Levi::Part::LeviPart) ++p;
            size_t levi_end = p;
            while (p < nw.size() && levi.part(nw[p]) == Levi::Part::PosNilradical) ++p;
            if (p != nw.size()) throw std::logic_error("ParabolicVerma: normal word is not block-sorted");
            if (levi_end != nw.size()) continue;  // positive nilradical kills X

            if (word_depth(levi, neg) > depth_) {
                if (policy_ == DepthPolicy::Strict)
                    throw DepthExceeded("ParabolicVerma: action leaves the truncated window");
                continue;
            }

            // Levi factors act on the X component, rightmost first
            Vec<F> xv(static_cast<size_t>(x_.dim), F{});
            xv[static_cast<size_t>(xcomps_[static_cast<size_t>(i)])] = field_unit<F>();
            for (size_t q = levi_end; q > levi_begin; --q) xv = xact_.at(nw[q - 1]).apply(xv);

            for (int k = 0; k < x_.dim; ++k) {
                if (field_is_zero(xv[static_cast<size_t>(k)])) continue;
                int j = index(neg, k);
                if (j < 0) throw std::logic_error("ParabolicVerma: missing basis slot");
                out[static_cast<size_t>(j)] = out[static_cast<size_t>(j)] + c * xv[static_cast<size_t>(k)];
            }
        }
    }

    const PbwOrder* ord_;
    InducingModule<F> x_;
    int depth_;
    DepthPolicy policy_;
    std::vector<Word> words_;
    std::vector<int> xcomps_, depths_;
    std::map<std::pair<Word, int>, int> index_;
    std::map<int, Matrix<F>> xact_;
    mutable std::map<int, Matrix<F>> genmat_;
};

/// Value of an element of U(l) on the scalar highest-weight line C_lambda:
/// only pure-Cartan monomials survive; each h_i evaluates to the character.
template <class F>
F evaluate_on_highest(const Levi& levi, const std::vector<F>& lambda, const PbwCombo<F>& u) {
    const LieAlgebra& g = levi.algebra();
    Vec<F> eig = character_eigen(levi, lambda);
    F out{};
    for (const auto& [w, c] : u) {
        F val = c;
        bool alive = true;
        for (int idx : w) {
            if (!g.is_cartan(idx)) {
                alive = false;  // semisimple Levi generators act by zero
                break;
            }
            val = val * eig[static_cast<size_t>(idx - 2 * g.num_positive())];
        }
        if (alive) out = out + val;
    }
    return out;
}

/// Contravariant pairing <a, b> of two negative-nilradical monomials on the
/// scalar module: transpose a (f's to e's, reversed), multiply and evaluate.
template <class F>
F shapovalov_pairing(const PbwOrder& ord, const std::vector<F>& lambda, const Word& a, const Word& b) {
    const LieAlgebra& g = ord.algebra();
    Word at(a.rbegin(), a.rend());
    for (int& idx : at) {
        if (!g.is_lowering(idx)) throw std::invalid_argument("shapovalov_pairing: expected lowering monomials");
        idx = g.e_index(idx - g.num_positive());
    }
    Word full = at;
    full.insert(full.end(), b.begin(), b.end());
    PbwCombo<F> nf = normal_order_word(ord, full, field_unit<F>());
    return evaluate_on_highest(ord.levi(), lambda, project_to_levi(ord.levi(), nf));
}

/// Gram matrix of the contravariant pairing on the depth-d slice of M_lambda.
template <class F>
Matrix<F> shapovalov_gram(const PbwOrder& ord, const std::vector<F>& lambda, int d) {
    std::vector<Word> slice;
    for (const Word& w : nilradical_words(ord, d))
        if (word_depth(ord.levi(), w) == d) slice.push_back(w);
    Matrix<F> m(static_cast<int>(slice.size()), static_cast<int>(slice.size()));
    for (size_t i = 0; i < slice.size(); ++i)
        for (size_t j = 0; j < slice.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = shapovalov_pairing(ord, lambda, slice[i], slice[j]);
    return m;
}

/// All contravariant Gram determinants up to the given depth are nonzero.
/// Reports the first degenerate depth if not.
inline bool verma_generic_at(const PbwOrder& ord, const std::vector<Rational>& lambda, int max_depth,
                             int* bad_depth = nullptr) {
    for (int d = 1; d <= max_depth; ++d) {
        Matrix<Rational> gram = shapovalov_gram<Rational>(ord, lambda, d);
        if (det(gram).is_zero()) {
            if (bad_depth) *bad_depth = d;
            return false;
        }
    }
    return true;
}

}  // namespace dyntwist
