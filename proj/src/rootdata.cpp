#include "dyntwist/rootdata.hpp"

#include <algorithm>
#include <sstream>

namespace dyntwist {

namespace {

Matrix<Rational> elementary(int n, int i, int j) {
    Matrix<Rational> m(n, n);
    m.at(i, j) = Rational(1);
    return m;
}

Matrix<Rational> commutator(const Matrix<Rational>& a, const Matrix<Rational>& b) {
    return a * b - b * a;
}

}  // namespace

LieAlgebra LieAlgebra::sl(int n) {
    if (n < 2) throw std::invalid_argument("LieAlgebra::sl: n must be >= 2");
    LieAlgebra g;
    g.n_ = n;
    g.rank_ = n - 1;
    // Positive roots sorted by height then by starting index: a deterministic
    // order with all simple roots first.
    for (int h = 1; h <= g.rank_; ++h)
        for (int lo = 0; lo + h - 1 < g.rank_; ++lo) g.positive_.push_back({lo, lo + h - 1});
    int P = static_cast<int>(g.positive_.size());
    g.defrep_.reserve(2 * P + g.rank_);
    for (int p = 0; p < P; ++p) g.defrep_.push_back(elementary(n, g.positive_[p].lo, g.positive_[p].hi + 1));
    for (int p = 0; p < P; ++p) g.defrep_.push_back(elementary(n, g.positive_[p].hi + 1, g.positive_[p].lo));
    for (int i = 0; i < g.rank_; ++i)
        g.defrep_.push_back(elementary(n, i, i) - elementary(n, i + 1, i + 1));

    int dim = 2 * P + g.rank_;
    // Expand an arbitrary traceless matrix in the basis: off-diagonal entries
    // are root-vector coefficients; the diagonal d_1..d_n (sum zero) expands
    // over h_i with coefficients c_i = d_1 + ... + d_i.
    auto expand = [&](const Matrix<Rational>& m) {
        BasisCombo combo;
        for (int p = 0; p < P; ++p) {
            const PosRoot& r = g.positive_[p];
            Rational ce = m.at(r.lo, r.hi + 1);
            if (!ce.is_zero()) combo.emplace_back(g.e_index(p), ce);
            Rational cf = m.at(r.hi + 1, r.lo);
            if (!cf.is_zero()) combo.emplace_back(g.f_index(p), cf);
        }
        Rational partial(0);
        for (int i = 0; i < g.rank_; ++i) {
            partial += m.at(i, i);
            if (!partial.is_zero()) combo.emplace_back(g.h_index(i), partial);
        }
        // Verify the expansion reproduces m exactly (this is the build-time
        // closure check: every bracket of basis elements lies in the span).
        Matrix<Rational> rebuilt(g.n_, g.n_);
        for (const auto& [idx, c] : combo) rebuilt = rebuilt + g.defrep_[idx].scaled(c);
        if (!(rebuilt == m)) throw std::logic_error("LieAlgebra::sl: bracket not in basis span");
        return combo;
    };

    g.bracket_.assign(dim, std::vector<BasisCombo>(dim));
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) g.bracket_[a][b] = expand(commutator(g.defrep_[a], g.defrep_[b]));

    // Trace-form nondegeneracy on the basis.
    Matrix<Rational> gram(dim, dim);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) gram.at(a, b) = g.trace_form(a, b);
    if (field_is_zero(det(gram))) throw std::logic_error("LieAlgebra::sl: degenerate trace form");
    return g;
}

int LieAlgebra::simple_root_index(int i) const {
    if (i < 0 || i >= rank_) throw std::invalid_argument("simple_root_index: out of range");
    return i;  // height-1 roots head the list in order
}

Rational LieAlgebra::trace_form(int a, int b) const {
    const Matrix<Rational>& x = defrep_[a];
    const Matrix<Rational>& y = defrep_[b];
    Rational t(0);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) t += x.at(i, k) * y.at(k, i);
    return t;
}

std::vector<int> LieAlgebra::adjoint_weight(int idx) const {
    std::vector<int> w(rank_, 0);
    if (is_cartan(idx)) return w;
    const PosRoot& r = root_of(idx);
    int sign = is_raising(idx) ? 1 : -1;
    // weight of e_[lo..hi] is alpha_lo + ... + alpha_hi; pairing with h_i is
    // the Cartan matrix column sum over the segment.
    for (int i = 0; i < rank_; ++i) {
        int v = 0;
        for (int j = r.lo; j <= r.hi; ++j) {
            if (j == i) v += 2;
            if (j == i - 1 || j == i + 1) v -= 1;
        }
        w[i] = sign * v;
    }
    return w;
}

std::string LieAlgebra::generator_name(int idx) const {
    std::ostringstream os;
    if (is_cartan(idx)) {
        os << "h" << (idx - 2 * num_positive() + 1);
        return os.str();
    }
    const PosRoot& r = root_of(idx);
    os << (is_raising(idx) ? "e" : "f") << "[" << (r.lo + 1);
    if (r.hi != r.lo) os << ".." << (r.hi + 1);
    os << "]";
    return os.str();
}

Levi::Levi(const LieAlgebra& g, std::vector<int> retained) : g_(&g), retained_(std::move(retained)) {
    std::sort(retained_.begin(), retained_.end());
    retained_.erase(std::unique(retained_.begin(), retained_.end()), retained_.end());
    for (int i : retained_)
        if (i < 0 || i >= g.rank()) throw std::invalid_argument("Levi: simple-root index out of range");
    for (int i = 0; i < g.rank(); ++i)
        if (!std::binary_search(retained_.begin(), retained_.end(), i)) excluded_.push_back(i);

    int P = g.num_positive();
    root_levi_.resize(P);
    for (int p = 0; p < P; ++p) root_levi_[p] = excluded_height(p) == 0;

    for (int i = 0; i < g.rank(); ++i) levi_gens_.push_back(g.h_index(i));
    for (int p = 0; p < P; ++p) {
        if (root_levi_[p]) {
            levi_gens_.push_back(g.e_index(p));
            levi_gens_.push_back(g.f_index(p));
            l0_gens_.push_back(g.e_index(p));
            l0_gens_.push_back(g.f_index(p));
            continue;
        }
        pos_nil_.push_back(g.e_index(p));
        neg_nil_.push_back(g.f_index(p));
    }
}

Levi::Part Levi::part(int idx) const {
    if (g_->is_cartan(idx)) return Part::LeviPart;
    int p = g_->is_raising(idx) ? idx : idx - g_->num_positive();
    if (root_levi_[p]) return Part::LeviPart;
    return g_->is_raising(idx) ? Part::PosNilradical : Part::NegNilradical;
}

int Levi::excluded_height(int p) const {
    const PosRoot& r = g_->positive_root(p);
    int h = 0;
    for (int i : excluded_)
        if (i >= r.lo && i <= r.hi) ++h;
    return h;
}

std::vector<int> Levi::c_weight(const std::vector<int>& eigen) const {
    std::vector<int> w;
    w.reserve(excluded_.size());
    for (int i : excluded_) w.push_back(eigen[i]);
    return w;
}

bool Levi::retained_trivial(const std::vector<int>& eigen) const {
    for (int i : retained_)
        if (eigen[i] != 0) return false;
    return true;
}

Genericity is_generic(const CharacterPoint& lambda, const Levi& levi) {
    if (lambda.r() != levi.r()) throw std::invalid_argument("is_generic: coordinate count mismatch");
    if (lambda.is_symbolic()) return Genericity::NotDecidable;
    for (const Rational& v : lambda.values())
        if (v.is_integer()) return Genericity::NonGeneric;
    return Genericity::Generic;
}

}  // namespace dyntwist
