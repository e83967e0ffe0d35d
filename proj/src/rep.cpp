#include "dyntwist/rep.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dyntwist {

namespace {

std::string weight_name(const std::vector<int>& hw) {
    std::ostringstream os;
    os << "V[";
    for (size_t i = 0; i < hw.size(); ++i) {
        if (i) os << ",";
        os << hw[i];
    }
    os << "]";
    return os.str();
}

std::vector<int> add_weights(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Cartan matrix column of the simple root alpha_i as an h-eigenvalue vector.
std::vector<int> simple_root_eigen(const LieAlgebra& g, int i) {
    std::vector<int> v(static_cast<size_t>(g.rank()), 0);
    for (int j = 0; j < g.rank(); ++j) {
        if (j == i)
            v[static_cast<size_t>(j)] = 2;
        else if (j == i - 1 || j == i + 1)
            v[static_cast<size_t>(j)] = -1;
    }
    return v;
}

// Incremental exact row reduction used to detect linear independence while
// growing a spanning set one vector at a time.
class SpanTracker {
public:
    explicit SpanTracker(int dim) : dim_(dim) {}

    // Returns true (and absorbs the reduced image) iff v is independent.
    bool try_add(Vec<Rational> v) {
        for (const auto& row : rows_) {
            const Rational c = v[static_cast<size_t>(row.first)];  // by value: the loop below writes v
            if (!c.is_zero())
                for (int j = 0; j < dim_; ++j)
                    v[static_cast<size_t>(j)] = v[static_cast<size_t>(j)] - c * row.second[static_cast<size_t>(j)];
        }
        int pivot = -1;
        for (int j = 0; j < dim_; ++j)
            if (!v[static_cast<size_t>(j)].is_zero()) {
                pivot = j;
                break;
            }
        if (pivot < 0) return false;
        Rational inv = v[static_cast<size_t>(pivot)].inverse();
        for (int j = 0; j < dim_; ++j) v[static_cast<size_t>(j)] = v[static_cast<size_t>(j)] * inv;
        rows_.emplace_back(pivot, std::move(v));
        return true;
    }

private:
    int dim_;
    std::vector<std::pair<int, Vec<Rational>>> rows_;
};

}  // namespace

Rep defining_rep(const LieAlgebra& g) {
    Rep v;
    v.g = &g;
    v.dim = g.n();
    for (int idx = 0; idx < g.dim(); ++idx) v.action.push_back(g.defining_matrix(idx));
    for (int i = 0; i < g.n(); ++i) {
        std::vector<int> wt(static_cast<size_t>(g.rank()), 0);
        for (int j = 0; j < g.rank(); ++j) {
            if (i == j) wt[static_cast<size_t>(j)] += 1;
            if (i == j + 1) wt[static_cast<size_t>(j)] -= 1;
        }
        v.weights.push_back(std::move(wt));
    }
    v.name = "C^" + std::to_string(g.n());
    return v;
}

Rep trivial_rep(const LieAlgebra& g) {
    Rep v;
    v.g = &g;
    v.dim = 1;
    v.action.assign(static_cast<size_t>(g.dim()), Matrix<Rational>(1, 1));
    v.weights.push_back(std::vector<int>(static_cast<size_t>(g.rank()), 0));
    v.highest.assign(static_cast<size_t>(g.rank()), 0);
    v.words.push_back({});
    v.name = weight_name(v.highest);
    return v;
}

Rep wedge_rep(const LieAlgebra& g, int k) {
    if (k < 1 || k >= g.n()) throw std::invalid_argument("wedge_rep: k out of range");
    const Rep def = defining_rep(g);

    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    // lexicographic k-subsets of {0..n-1}
    std::function<void(int)> gen = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int i = start; i < g.n(); ++i) {
            cur.push_back(i);
            gen(i + 1);
            cur.pop_back();
        }
    };
    gen(0);
    std::map<std::vector<int>, int> index_of;
    for (size_t s = 0; s < subsets.size(); ++s) index_of[subsets[s]] = static_cast<int>(s);
    const int dim = static_cast<int>(subsets.size());

    Rep v;
    v.g = &g;
    v.dim = dim;
    for (int idx = 0; idx < g.dim(); ++idx) {
        const Matrix<Rational>& m = g.defining_matrix(idx);
        Matrix<Rational> w(dim, dim);
        for (int s = 0; s < dim; ++s) {
            const auto& S = subsets[static_cast<size_t>(s)];
            for (int j = 0; j < k; ++j) {
                for (int tgt = 0; tgt < g.n(); ++tgt) {
                    const Rational& c = m.at(tgt, S[static_cast<size_t>(j)]);
                    if (c.is_zero()) continue;
                    std::vector<int> T = S;
                    T[static_cast<size_t>(j)] = tgt;
                    // reorder with sign; repeated entries annihilate
                    bool zero = false;
                    int swaps = 0;
                    for (size_t a = 0; a + 1 < T.size() && !zero; ++a)
                        for (size_t b = 0; b + 1 < T.size() - a; ++b) {
                            if (T[b] == T[b + 1]) {
                                zero = true;
                                break;
                            }
                            if (T[b] > T[b + 1]) {
                                std::swap(T[b], T[b + 1]);
                                ++swaps;
                            }
                        }
                    if (zero) continue;
                    Rational term = (swaps % 2 == 0) ? c : -c;
                    int t = index_of.at(T);
                    w.at(t, s) = w.at(t, s) + term;
                }
            }
        }
        v.action.push_back(std::move(w));
    }
    for (int s = 0; s < dim; ++s) {
        std::vector<int> wt(static_cast<size_t>(g.rank()), 0);
        for (int el : subsets[static_cast<size_t>(s)]) wt = add_weights(wt, def.weights[static_cast<size_t>(el)]);
        v.weights.push_back(std::move(wt));
    }
    v.highest.assign(static_cast<size_t>(g.rank()), 0);
    v.highest[static_cast<size_t>(k - 1)] = 1;
    v.name = "Wedge^" + std::to_string(k) + "(C^" + std::to_string(g.n()) + ")";
    return v;
}

Rep dual_rep(const Rep& a) {
    Rep v;
    v.g = a.g;
    v.dim = a.dim;
    for (const auto& m : a.action) v.action.push_back(m.transposed().scaled(Rational(-1)));
    for (const auto& wt : a.weights) {
        std::vector<int> neg(wt.size());
        for (size_t i = 0; i < wt.size(); ++i) neg[i] = -wt[i];
        v.weights.push_back(std::move(neg));
    }
    v.name = a.name + "*";
    return v;
}

Rep tensor_rep(const Rep& a, const Rep& b) {
    if (a.g != b.g) throw std::invalid_argument("tensor_rep: mismatched algebras");
    Rep v;
    v.g = a.g;
    v.dim = a.dim * b.dim;
    Matrix<Rational> ia = Matrix<Rational>::identity(a.dim);
    Matrix<Rational> ib = Matrix<Rational>::identity(b.dim);
    for (size_t idx = 0; idx < a.action.size(); ++idx)
        v.action.push_back(kron(a.action[idx], ib) + kron(ia, b.action[idx]));
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            v.weights.push_back(add_weights(a.weights[static_cast<size_t>(i)], b.weights[static_cast<size_t>(j)]));
    v.name = a.name + " x " + b.name;
    return v;
}

long long weyl_dimension(const LieAlgebra& g, const std::vector<int>& highest) {
    long long num = 1, den = 1;
    for (int p = 0; p < g.num_positive(); ++p) {
        const PosRoot& beta = g.positive_root(p);
        long long term = 0;
        for (int i = beta.lo; i <= beta.hi; ++i) term += highest[static_cast<size_t>(i)] + 1;
        num *= term;
        den *= beta.height();
    }
    if (num % den != 0) throw std::logic_error("weyl_dimension: non-integral result");
    return num / den;
}

Rep irrep(const LieAlgebra& g, const std::vector<int>& highest) {
    if (static_cast<int>(highest.size()) != g.rank()) throw std::invalid_argument("irrep: weight arity mismatch");
    for (int c : highest)
        if (c < 0) throw std::invalid_argument("irrep: weight not dominant");

    const long long want_dim = weyl_dimension(g, highest);

    if (std::all_of(highest.begin(), highest.end(), [](int c) { return c == 0; })) {
        Rep v = trivial_rep(g);
        return v;
    }

    if (g.rank() == 1) {
        // standard basis w_k = f^k w_0
        const int m = highest[0];
        Rep v;
        v.g = &g;
        v.dim = m + 1;
        Matrix<Rational> e(m + 1, m + 1), f(m + 1, m + 1), h(m + 1, m + 1);
        for (int k = 0; k <= m; ++k) {
            if (k > 0) e.at(k - 1, k) = Rational(static_cast<long long>(k) * (m - k + 1));
            if (k < m) f.at(k + 1, k) = Rational(1);
            h.at(k, k) = Rational(m - 2 * k);
            v.weights.push_back({m - 2 * k});
            v.words.push_back(Word(static_cast<size_t>(k), g.f_index(0)));
        }
        v.action = {e, f, h};
        v.highest = highest;
        v.name = weight_name(highest);
        if (v.dim != want_dim) throw std::logic_error("irrep: dimension mismatch");
        return v;
    }

    // ambient: tensor product of wedge powers, one factor per unit of each
    // fundamental coordinate; its first basis vector is a highest-weight
    // vector of the wanted weight
    Rep ambient;
    bool have = false;
    for (int i = 0; i < g.rank(); ++i)
        for (int c = 0; c < highest[static_cast<size_t>(i)]; ++c) {
            Rep w = wedge_rep(g, i + 1);
            ambient = have ? tensor_rep(ambient, w) : std::move(w);
            have = true;
        }

    std::vector<Vec<Rational>> basis;
    std::vector<Word> words;
    std::vector<std::vector<int>> wts;
    SpanTracker tracker(ambient.dim);

    Vec<Rational> v0(static_cast<size_t>(ambient.dim), Rational(0));
    v0[0] = Rational(1);
    tracker.try_add(v0);
    basis.push_back(v0);
    words.push_back({});
    wts.push_back(highest);

    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        size_t at = queue.front();
        queue.pop_front();
        for (int i = 0; i < g.rank(); ++i) {
            const int fidx = g.f_index(g.simple_root_index(i));
            Vec<Rational> u = ambient.action[static_cast<size_t>(fidx)].apply(basis[at]);
            if (std::all_of(u.begin(), u.end(), [](const Rational& c) { return c.is_zero(); })) continue;
            if (!tracker.try_add(u)) continue;
            Word w;
            w.push_back(fidx);
            w.insert(w.end(), words[at].begin(), words[at].end());
            std::vector<int> wt = wts[at];
            std::vector<int> alpha = simple_root_eigen(g, i);
            for (size_t j = 0; j < wt.size(); ++j) wt[j] -= alpha[j];
            basis.push_back(std::move(u));
            words.push_back(std::move(w));
            wts.push_back(std::move(wt));
            queue.push_back(basis.size() - 1);
        }
    }

    const int d = static_cast<int>(basis.size());
    if (d != want_dim) throw std::logic_error("irrep: dimension mismatch");

    Matrix<Rational> bmat(ambient.dim, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < ambient.dim; ++i) bmat.at(i, j) = basis[static_cast<size_t>(j)][static_cast<size_t>(i)];

    Rep v;
    v.g = &g;
    v.dim = d;
    for (int idx = 0; idx < g.dim(); ++idx) {
        Matrix<Rational> img(ambient.dim, d);
        for (int j = 0; j < d; ++j) {
            Vec<Rational> col = ambient.action[static_cast<size_t>(idx)].apply(basis[static_cast<size_t>(j)]);
            for (int i = 0; i < ambient.dim; ++i) img.at(i, j) = col[static_cast<size_t>(i)];
        }
        Matrix<Rational> a = bmat;
        std::vector<int> pivots = row_reduce(a, &img);
        if (static_cast<int>(pivots.size()) != d) throw std::logic_error("irrep: basis columns are dependent");
        for (int r = d; r < ambient.dim; ++r)
            for (int j = 0; j < d; ++j)
                if (!img.at(r, j).is_zero()) throw std::logic_error("irrep: cyclic span is not invariant");
        Matrix<Rational> restr(d, d);
        for (int r = 0; r < d; ++r)
            for (int j = 0; j < d; ++j) restr.at(r, j) = img.at(r, j);
        v.action.push_back(std::move(restr));
    }
    v.weights = std::move(wts);
    v.words = std::move(words);
    v.highest = highest;
    v.name = weight_name(highest);

    for (int i = 0; i < g.rank(); ++i) {
        const Matrix<Rational>& h = v.action[static_cast<size_t>(g.h_index(i))];
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                Rational expect = (a == b) ? Rational(v.weights[static_cast<size_t>(a)][static_cast<size_t>(i)]) : Rational(0);
                if (!(h.at(a, b) == expect)) throw std::logic_error("irrep: Cartan action is not the recorded weight");
            }
    }
    return v;
}

std::vector<Vec<Rational>> weight_component(const Rep& v, const Levi& levi, const std::vector<int>& nu) {
    std::vector<int> idxs;
    for (int i = 0; i < v.dim; ++i)
        if (levi.c_weight(v.weights[static_cast<size_t>(i)]) == nu) idxs.push_back(i);
    if (idxs.empty()) return {};

    const auto& gens = levi.l0_generators();
    const int rows = static_cast<int>(gens.size()) * v.dim;
    Matrix<Rational> sys(rows == 0 ? 1 : rows, static_cast<int>(idxs.size()));
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        const Matrix<Rational>& m = v.action[static_cast<size_t>(gens[gi])];
        for (int r = 0; r < v.dim; ++r)
            for (size_t j = 0; j < idxs.size(); ++j)
                sys.at(static_cast<int>(gi) * v.dim + r, static_cast<int>(j)) = m.at(r, idxs[j]);
    }
    std::vector<Vec<Rational>> ker = kernel_basis(sys);
    std::vector<Vec<Rational>> out;
    for (const auto& k : ker) {
        Vec<Rational> full(static_cast<size_t>(v.dim), Rational(0));
        for (size_t j = 0; j < idxs.size(); ++j) full[static_cast<size_t>(idxs[j])] = k[j];
        out.push_back(std::move(full));
    }
    return out;
}

std::vector<CGTerm> cg_decompose(const Rep& a, const Rep& b) {
    const LieAlgebra& g = *a.g;
    Rep t = tensor_rep(a, b);

    std::vector<std::vector<int>> distinct;
    for (const auto& wt : t.weights)
        if (std::find(distinct.begin(), distinct.end(), wt) == distinct.end()) distinct.push_back(wt);
    std::sort(distinct.begin(), distinct.end(), [](const auto& x, const auto& y) { return x > y; });

    std::vector<CGTerm> terms;
    int total = 0;
    for (const auto& mu : distinct) {
        std::vector<int> idxs;
        for (int i = 0; i < t.dim; ++i)
            if (t.weights[static_cast<size_t>(i)] == mu) idxs.push_back(i);

        Matrix<Rational> sys(g.rank() * t.dim, static_cast<int>(idxs.size()));
        for (int s = 0; s < g.rank(); ++s) {
            const Matrix<Rational>& e = t.action[static_cast<size_t>(g.e_index(g.simple_root_index(s)))];
            for (int r = 0; r < t.dim; ++r)
                for (size_t j = 0; j < idxs.size(); ++j)
                    sys.at(s * t.dim + r, static_cast<int>(j)) = e.at(r, idxs[j]);
        }
        for (const Vec<Rational>& k : kernel_basis(sys)) {
            for (int c : mu)
                if (c < 0) throw std::logic_error("cg_decompose: non-dominant highest weight");
            Vec<Rational> hwv(static_cast<size_t>(t.dim), Rational(0));
            for (size_t j = 0; j < idxs.size(); ++j) hwv[static_cast<size_t>(idxs[j])] = k[j];

            CGTerm term;
            term.summand = irrep(g, mu);
            term.injection = Matrix<Rational>(t.dim, term.summand.dim);
            for (int col = 0; col < term.summand.dim; ++col) {
                Vec<Rational> img = t.act_word(term.summand.words[static_cast<size_t>(col)], hwv);
                for (int r = 0; r < t.dim; ++r) term.injection.at(r, col) = img[static_cast<size_t>(r)];
            }
            total += term.summand.dim;
            terms.push_back(std::move(term));
        }
    }
    if (total != t.dim) throw std::logic_error("cg_decompose: summand dimensions do not fill the product");

    Matrix<Rational> bmat(t.dim, t.dim);
    int off = 0;
    for (const auto& term : terms) {
        for (int c = 0; c < term.summand.dim; ++c)
            for (int r = 0; r < t.dim; ++r) bmat.at(r, off + c) = term.injection.at(r, c);
        off += term.summand.dim;
    }
    Matrix<Rational> pinv = inverse(bmat);
    off = 0;
    for (auto& term : terms) {
        term.projection = Matrix<Rational>(term.summand.dim, t.dim);
        for (int r = 0; r < term.summand.dim; ++r)
            for (int c = 0; c < t.dim; ++c) term.projection.at(r, c) = pinv.at(off + r, c);
        off += term.summand.dim;
    }
    return terms;
}

Matrix<Rational> flip_matrix(int dim_a, int dim_b) {
    Matrix<Rational> m(dim_a * dim_b, dim_a * dim_b);
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_b; ++j) m.at(j * dim_a + i, i * dim_b + j) = Rational(1);
    return m;
}

Matrix<Rational> perm3_matrix(const std::vector<int>& dims, const std::vector<int>& perm) {
    if (dims.size() != 3 || perm.size() != 3) throw std::invalid_argument("perm3_matrix: need 3 slots");
    std::vector<int> tdims(3);
    for (int k = 0; k < 3; ++k) tdims[static_cast<size_t>(perm[k])] = dims[static_cast<size_t>(k)];
    const int n = dims[0] * dims[1] * dims[2];
    Matrix<Rational> m(n, n);
    for (int i0 = 0; i0 < dims[0]; ++i0)
        for (int i1 = 0; i1 < dims[1]; ++i1)
            for (int i2 = 0; i2 < dims[2]; ++i2) {
                std::vector<int> t(3);
                t[static_cast<size_t>(perm[0])] = i0;
                t[static_cast<size_t>(perm[1])] = i1;
                t[static_cast<size_t>(perm[2])] = i2;
                int src = (i0 * dims[1] + i1) * dims[2] + i2;
                int dst = (t[0] * tdims[1] + t[1]) * tdims[2] + t[2];
                m.at(dst, src) = Rational(1);
            }
    return m;
}

}  // namespace dyntwist
