#include "dyntwist/orbit.hpp"

#include <algorithm>
#include <string>

namespace dyntwist {

namespace {

std::string weight_string(const std::vector<int>& hw) {
    std::string s = "(";
    for (size_t i = 0; i < hw.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(hw[static_cast<size_t>(i)]);
    }
    return s + ")";
}

}  // namespace

MatrixCoeffAlgebra::MatrixCoeffAlgebra(const Levi& levi, std::vector<std::vector<int>> highest)
    : levi_(&levi), order_(levi), declared_(std::move(highest)) {
    std::sort(declared_.begin(), declared_.end());
    declared_.erase(std::unique(declared_.begin(), declared_.end()), declared_.end());
    for (const auto& hw : declared_) block(hw);  // validates dominance up front
}

bool MatrixCoeffAlgebra::is_declared(const std::vector<int>& hw) const {
    return std::binary_search(declared_.begin(), declared_.end(), hw);
}

const Rep& MatrixCoeffAlgebra::block(const std::vector<int>& hw) const {
    auto it = blocks_.find(hw);
    if (it == blocks_.end()) it = blocks_.emplace(hw, irrep(algebra(), hw)).first;
    return it->second;
}

const Rep& MatrixCoeffAlgebra::dual_block(const std::vector<int>& hw) const {
    auto it = duals_.find(hw);
    if (it == duals_.end()) it = duals_.emplace(hw, dual_rep(block(hw))).first;
    return it->second;
}

const std::vector<CGTerm>& MatrixCoeffAlgebra::tensor_terms(const std::vector<int>& hw1,
                                                            const std::vector<int>& hw2) const {
    auto key = std::make_pair(hw1, hw2);
    auto it = cg_.find(key);
    if (it == cg_.end()) it = cg_.emplace(key, cg_decompose(block(hw1), block(hw2))).first;
    return it->second;
}

const Matrix<RatFunc>& MatrixCoeffAlgebra::symbolic_twist(const std::vector<int>& hw1,
                                                          const std::vector<int>& hw2) const {
    auto key = std::make_pair(hw1, hw2);
    auto it = twists_.find(key);
    if (it == twists_.end()) {
        if (!is_declared(hw1) || !is_declared(hw2))
            throw std::domain_error("symbolic_twist: block " + weight_string(is_declared(hw1) ? hw2 : hw1) +
                                    " outside the declared weight set");
        it = twists_.emplace(key, twist_raw(order_, symbolic_lambda(), dual_block(hw1), dual_block(hw2))).first;
    }
    return it->second;
}

std::vector<RatFunc> MatrixCoeffAlgebra::symbolic_lambda() const {
    int r = levi_->r();
    std::vector<RatFunc> lam;
    lam.reserve(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) lam.push_back(RatFunc::variable(r, i));
    return lam;
}

MatrixCoeffAlgebra::ClosureReport MatrixCoeffAlgebra::closure_report() const {
    ClosureReport rep;
    rep.closed = true;
    for (const auto& h1 : declared_)
        for (const auto& h2 : declared_) {
            ClosurePair p;
            p.left = h1;
            p.right = h2;
            p.closed = true;
            for (const CGTerm& t : tensor_terms(h1, h2)) {
                p.targets.push_back(t.summand.highest);
                if (!is_declared(t.summand.highest)) p.closed = false;
            }
            rep.closed = rep.closed && p.closed;
            rep.pairs.push_back(std::move(p));
        }
    return rep;
}

std::vector<AgElement<Rational>> weight_sections(const MatrixCoeffAlgebra& alg, const std::vector<int>& hw,
                                                 const std::vector<int>& nu) {
    const Rep& e = alg.block(hw);
    const Rep& dual = alg.dual_block(hw);
    std::vector<AgElement<Rational>> out;
    for (const Vec<Rational>& w : weight_component(dual, alg.levi(), nu))
        for (int i = 0; i < e.dim; ++i) {
            AgElement<Rational> s;
            Matrix<Rational> m(e.dim, e.dim);
            for (int j = 0; j < e.dim; ++j) m.at(i, j) = w[static_cast<size_t>(j)];
            s.blocks.emplace(hw, std::move(m));
            out.push_back(std::move(s));
        }
    return out;
}

AgSeries star_series(const MatrixCoeffAlgebra& alg, const std::vector<Rational>& l0, const std::vector<Rational>& l1,
                     int N, const AgSeries& a, const AgSeries& b) {
    if (N < 0) throw std::invalid_argument("star_series: negative order");
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<Matrix<Rational>>> expanded;
    auto twist_orders = [&](const std::vector<int>& h1, const std::vector<int>& h2) -> const std::vector<Matrix<Rational>>& {
        auto key = std::make_pair(h1, h2);
        auto it = expanded.find(key);
        if (it != expanded.end()) return it->second;
        const Matrix<RatFunc>& tw = alg.symbolic_twist(h1, h2);
        std::vector<Matrix<Rational>> orders(static_cast<size_t>(N) + 1,
                                             Matrix<Rational>(tw.rows(), tw.cols()));
        int nv = static_cast<int>(l0.size());
        for (int i = 0; i < tw.rows(); ++i)
            for (int j = 0; j < tw.cols(); ++j) {
                if (tw.at(i, j).is_zero()) continue;
                RatFunc entry(tw.at(i, j).num().promoted(nv), tw.at(i, j).den().promoted(nv));
                TruncSeries<Rational> s = series_expand(entry, l0, l1, N);
                if (s.valuation() < 0)
                    throw PoleAtOriginError("star_series: twist entry has a pole on the parameter path");
                for (int k = 0; k <= N; ++k) orders[static_cast<size_t>(k)].at(i, j) = s.coeff(k);
            }
        if (!(orders[0] == Matrix<Rational>::identity(tw.rows())))
            throw std::domain_error("star_series: leading order is not the classical product");
        return expanded.emplace(key, std::move(orders)).first->second;
    };

    AgSeries out(static_cast<size_t>(N) + 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) {
            if (static_cast<int>(i + j) > N) continue;
            for (const auto& [h1, m1] : a[i].blocks)
                for (const auto& [h2, m2] : b[j].blocks) {
                    if (!alg.is_declared(h1) || !alg.is_declared(h2))
                        throw std::domain_error("star_series: input block outside the declared weight set");
                    const std::vector<Matrix<Rational>>& tws = twist_orders(h1, h2);
                    Matrix<Rational> base = kron(m1, m2);
                    for (int l = 0; static_cast<int>(i + j) + l <= N; ++l)
                        detail::accumulate_blocks(alg, h1, h2,
                                                  Matrix<Rational>(base * tws[static_cast<size_t>(l)].transposed()),
                                                  out[i + j + static_cast<size_t>(l)]);
                }
        }
    for (auto& e : out) e.prune();
    return out;
}

BundleReport bundle_module_check(const MatrixCoeffAlgebra& alg, const std::vector<Rational>& l0,
                                 const std::vector<Rational>& l1, int N, const AgElement<Rational>& a,
                                 const AgElement<Rational>& b, const AgElement<Rational>& s,
                                 const AgElement<Rational>& t) {
    auto zero = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    };
    if (!zero(ru2_character(alg, a)) || !zero(ru2_character(alg, b)))
        throw std::invalid_argument("bundle_module_check: a and b must be invariant functions");
    std::vector<int> wt_s = ru2_character(alg, s);
    ru2_character(alg, t);  // validates homogeneity

    BundleReport rep;
    rep.orders = N;
    AgSeries sa = as_series(a, N), sb = as_series(b, N), ss = as_series(s, N), st = as_series(t, N);

    AgSeries left_lhs = star_series(alg, l0, l1, N, sa, star_series(alg, l0, l1, N, ss, st));
    AgSeries left_rhs = star_series(alg, l0, l1, N, star_series(alg, l0, l1, N, sa, ss), st);
    rep.left_law = series_equal(left_lhs, left_rhs);

    std::vector<Rational> l1_shift = l1;
    for (size_t i = 0; i < l1_shift.size(); ++i) l1_shift[i] += Rational(wt_s[i]);
    AgSeries right_lhs = star_series(alg, l0, l1, N, star_series(alg, l0, l1, N, ss, sa), sb);
    AgSeries right_rhs = star_series(alg, l0, l1, N, ss, star_series(alg, l0, l1_shift, N, sa, sb));
    rep.right_law = series_equal(right_lhs, right_rhs);
    return rep;
}

}  // namespace dyntwist
