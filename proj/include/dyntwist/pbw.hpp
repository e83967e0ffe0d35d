#pragma once

/*
 * PBW machinery for U(g) relative to a Levi choice.
 *
 * Monomials are weakly increasing words of generator (basis) indices in a
 * fixed global order: negative nilradical first (decreasing root height),
 * then the Levi's own lowering part, the Cartan, the Levi raising part, and
 * the positive nilradical last (increasing height).  With that order a
 * normal form always looks like
 *
 *     [n_l^- factors][Levi factors][n_l^+ factors]
 *
 * so the projection onto U(l) along the triangular decomposition is a plain
 * monomial filter.
 */

#include <map>
#include <vector>

#include "dyntwist/polynomial.hpp"
#include "dyntwist/rational.hpp"
#include "dyntwist/rootdata.hpp"

namespace dyntwist {

template <class F>
F field_from_rational(const Rational& x);
template <>
inline Rational field_from_rational<Rational>(const Rational& x) {
    return x;
}
template <>
inline RatFunc field_from_rational<RatFunc>(const Rational& x) {
    return RatFunc(0, x);
}

using Word = std::vector<int>;

template <class F>
using PbwCombo = std::map<Word, F>;

class PbwOrder {
public:
    explicit PbwOrder(const Levi& levi);

    const Levi& levi() const { return *levi_; }
    const LieAlgebra& algebra() const { return levi_->algebra(); }
    int key(int basis_idx) const { return key_[static_cast<size_t>(basis_idx)]; }

private:
    const Levi* levi_;
    std::vector<int> key_;
};

template <class F>
void combo_add(PbwCombo<F>& acc, const Word& w, const F& c) {
    if (field_is_zero(c)) return;
    auto [it, fresh] = acc.emplace(w, c);
    if (!fresh) {
        it->second = it->second + c;
        if (field_is_zero(it->second)) acc.erase(it);
    }
}

/// Rewrite a free word (times a coefficient) into PBW normal form.
template <class F>
PbwCombo<F> normal_order_word(const PbwOrder& ord, const Word& word, const F& coeff) {
    const LieAlgebra& g = ord.algebra();
    PbwCombo<F> out;
    std::vector<std::pair<Word, F>> stack;
    stack.emplace_back(word, coeff);
    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        size_t i = 0;
        bool sorted = true;
        for (; i + 1 < w.size(); ++i)
            if (ord.key(w[i]) > ord.key(w[i + 1])) {
                sorted = false;
                break;
            }
        if (sorted) {
            combo_add(out, w, c);
            continue;
        }
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        stack.emplace_back(std::move(swapped), c);
        for (const auto& [k, bc] : g.bracket(w[i], w[i + 1])) {
            Word shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(i));
            shorter.push_back(k);
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
            stack.emplace_back(std::move(shorter), c * field_from_rational<F>(bc));
        }
    }
    return out;
}

template <class F>
PbwCombo<F> normal_order(const PbwOrder& ord, const PbwCombo<F>& x) {
    PbwCombo<F> out;
    for (const auto& [w, c] : x)
        for (const auto& [w2, c2] : normal_order_word(ord, w, c)) combo_add(out, w2, c2);
    return out;
}

/// Product in U(g): concatenate and normal-order.
template <class F>
PbwCombo<F> pbw_multiply(const PbwOrder& ord, const PbwCombo<F>& a, const PbwCombo<F>& b) {
    PbwCombo<F> out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            for (const auto& [wn, cn] : normal_order_word(ord, w, ca * cb)) combo_add(out, wn, cn);
        }
    return out;
}

/// Antipode: anti-homomorphism with x -> -x on g; reverse the word, apply
/// the length sign, re-normal-order.
template <class F>
PbwCombo<F> antipode(const PbwOrder& ord, const PbwCombo<F>& x) {
    PbwCombo<F> out;
    for (const auto& [w, c] : x) {
        Word rev(w.rbegin(), w.rend());
        F sign = field_from_rational<F>(Rational(w.size() % 2 == 0 ? 1 : -1));
        for (const auto& [wn, cn] : normal_order_word(ord, rev, c * sign)) combo_add(out, wn, cn);
    }
    return out;
}

/// Projection U(g) -> U(l) along  n_l^- U(g) + U(g) n_l^+ : on normal forms,
/// keep exactly the monomials whose factors all lie in l.
template <class F>
PbwCombo<F> project_to_levi(const Levi& levi, const PbwCombo<F>& x) {
    PbwCombo<F> out;
    for (const auto& [w, c] : x) {
        bool keep = true;
        for (int idx : w)
            if (levi.part(idx) != Levi::Part::LeviPart) {
                keep = false;
                break;
            }
        if (keep) combo_add(out, w, c);
    }
    return out;
}

}  // namespace dyntwist
