#include "dyntwist/hopfcheck.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace dyntwist {

namespace {

using Mat = Matrix<Rational>;

Vec<Rational> basis_vec(int d, int i) {
    Vec<Rational> v(d, Rational(0));
    v[i] = Rational(1);
    return v;
}

Vec<Rational> alg_mul(const std::vector<Mat>& mult, const Vec<Rational>& u, const Vec<Rational>& v) {
    const int d = static_cast<int>(mult.size());
    Vec<Rational> r(d, Rational(0));
    for (int i = 0; i < d; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (v[j].is_zero()) continue;
            Rational uv = u[i] * v[j];
            for (int k = 0; k < d; ++k) {
                const Rational& c = mult[k].at(i, j);
                if (!c.is_zero()) r[k] += uv * c;
            }
        }
    }
    return r;
}

bool vec_eq(const Vec<Rational>& a, const Vec<Rational>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Mat left_mult(const std::vector<Mat>& mult, int x) {
    const int d = static_cast<int>(mult.size());
    Mat m(d, d);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i) m.at(k, i) = mult[k].at(x, i);
    return m;
}

Mat right_mult_by(const std::vector<Mat>& mult, const Vec<Rational>& v) {
    const int d = static_cast<int>(mult.size());
    Mat m(d, d);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i) {
            Rational s(0);
            for (int j = 0; j < d; ++j)
                if (!v[j].is_zero()) s += mult[k].at(i, j) * v[j];
            m.at(k, i) = s;
        }
    return m;
}

Vec<Rational> antipode_of(const FinHopf& h, int i) {
    Vec<Rational> v(h.dim, Rational(0));
    for (int j = 0; j < h.dim; ++j) v[j] = h.antipode.at(j, i);
    return v;
}

}  // namespace

HopfReport check_hopf(const FinHopf& h) {
    const int d = h.dim;
    HopfReport rep;

    rep.associative = true;
    for (int i = 0; i < d && rep.associative; ++i)
        for (int j = 0; j < d && rep.associative; ++j) {
            Vec<Rational> ij = alg_mul(h.mult, basis_vec(d, i), basis_vec(d, j));
            for (int k = 0; k < d; ++k) {
                Vec<Rational> jk = alg_mul(h.mult, basis_vec(d, j), basis_vec(d, k));
                if (!vec_eq(alg_mul(h.mult, ij, basis_vec(d, k)),
                            alg_mul(h.mult, basis_vec(d, i), jk))) {
                    rep.associative = false;
                    break;
                }
            }
        }

    rep.unital = true;
    for (int j = 0; j < d; ++j) {
        Vec<Rational> e = basis_vec(d, j);
        if (!vec_eq(alg_mul(h.mult, h.unit, e), e) || !vec_eq(alg_mul(h.mult, e, h.unit), e))
            rep.unital = false;
    }

    rep.coassociative = true;
    for (int i = 0; i < d && rep.coassociative; ++i) {
        std::vector<Rational> t1(static_cast<size_t>(d) * d * d, Rational(0)), t2 = t1;
        for (int a = 0; a < d; ++a)
            for (int x = 0; x < d; ++x) {
                const Rational& c = h.comult[i].at(a, x);
                if (c.is_zero()) continue;
                for (int b = 0; b < d; ++b)
                    for (int cc = 0; cc < d; ++cc) {
                        const Rational& w = h.comult[x].at(b, cc);
                        if (!w.is_zero()) t1[(static_cast<size_t>(a) * d + b) * d + cc] += c * w;
                    }
            }
        for (int x = 0; x < d; ++x)
            for (int cc = 0; cc < d; ++cc) {
                const Rational& c = h.comult[i].at(x, cc);
                if (c.is_zero()) continue;
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b) {
                        const Rational& w = h.comult[x].at(a, b);
                        if (!w.is_zero()) t2[(static_cast<size_t>(a) * d + b) * d + cc] += c * w;
                    }
            }
        for (size_t n = 0; n < t1.size(); ++n)
            if (t1[n] != t2[n]) {
                rep.coassociative = false;
                break;
            }
    }

    rep.counital = true;
    for (int i = 0; i < d; ++i)
        for (int b = 0; b < d; ++b) {
            Rational sl(0), sr(0);
            for (int a = 0; a < d; ++a) {
                sl += h.counit[a] * h.comult[i].at(a, b);
                sr += h.comult[i].at(b, a) * h.counit[a];
            }
            Rational want(i == b ? 1 : 0);
            if (sl != want || sr != want) rep.counital = false;
        }

    rep.compatible = true;
    for (int i = 0; i < d && rep.compatible; ++i)
        for (int j = 0; j < d && rep.compatible; ++j) {
            Mat lhs(d, d), rhs(d, d);
            for (int k = 0; k < d; ++k) {
                const Rational& c = h.mult[k].at(i, j);
                if (c.is_zero()) continue;
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b) lhs.at(a, b) += c * h.comult[k].at(a, b);
            }
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q) {
                    const Rational& ci = h.comult[i].at(p, q);
                    if (ci.is_zero()) continue;
                    for (int r = 0; r < d; ++r)
                        for (int s = 0; s < d; ++s) {
                            const Rational& cj = h.comult[j].at(r, s);
                            if (cj.is_zero()) continue;
                            Vec<Rational> pr = alg_mul(h.mult, basis_vec(d, p), basis_vec(d, r));
                            Vec<Rational> qs = alg_mul(h.mult, basis_vec(d, q), basis_vec(d, s));
                            Rational cij = ci * cj;
                            for (int a = 0; a < d; ++a) {
                                if (pr[a].is_zero()) continue;
                                for (int b = 0; b < d; ++b)
                                    if (!qs[b].is_zero()) rhs.at(a, b) += cij * pr[a] * qs[b];
                            }
                        }
                }
            if (!(lhs == rhs)) rep.compatible = false;
            Rational el(0);
            for (int k = 0; k < d; ++k) el += h.mult[k].at(i, j) * h.counit[k];
            if (el != h.counit[i] * h.counit[j]) rep.compatible = false;
        }
    {
        Mat d1(d, d);
        for (int i = 0; i < d; ++i) {
            if (h.unit[i].is_zero()) continue;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) d1.at(a, b) += h.unit[i] * h.comult[i].at(a, b);
        }
        Mat want(d, d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) want.at(a, b) = h.unit[a] * h.unit[b];
        if (!(d1 == want)) rep.compatible = false;
        Rational e1(0);
        for (int i = 0; i < d; ++i) e1 += h.unit[i] * h.counit[i];
        if (e1 != Rational(1)) rep.compatible = false;
    }

    rep.antipode = true;
    for (int i = 0; i < d; ++i) {
        Vec<Rational> acc1(d, Rational(0)), acc2(d, Rational(0));
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                const Rational& c = h.comult[i].at(a, b);
                if (c.is_zero()) continue;
                Vec<Rational> p1 = alg_mul(h.mult, antipode_of(h, a), basis_vec(d, b));
                Vec<Rational> p2 = alg_mul(h.mult, basis_vec(d, a), antipode_of(h, b));
                for (int k = 0; k < d; ++k) {
                    acc1[k] += c * p1[k];
                    acc2[k] += c * p2[k];
                }
            }
        for (int k = 0; k < d; ++k) {
            Rational want = h.counit[i] * h.unit[k];
            if (acc1[k] != want || acc2[k] != want) rep.antipode = false;
        }
    }
    return rep;
}

FinHopf group_algebra(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("group_algebra: empty table");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw std::invalid_argument("group_algebra: table is not square");
        if (table[0][i] != i || table[i][0] != i)
            throw std::invalid_argument("group_algebra: element 0 is not the identity");
    }
    std::vector<int> inv(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (table[i][j] == 0) inv[i] = j;
        if (inv[i] < 0) throw std::invalid_argument("group_algebra: element without inverse");
    }
    FinHopf h;
    h.dim = n;
    h.mult.assign(n, Mat(n, n));
    h.comult.assign(n, Mat(n, n));
    h.unit.assign(n, Rational(0));
    h.counit.assign(n, Rational(1));
    h.antipode = Mat(n, n);
    h.unit[0] = Rational(1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) h.mult[table[i][j]].at(i, j) = Rational(1);
        h.comult[i].at(i, i) = Rational(1);
        h.antipode.at(inv[i], i) = Rational(1);
    }
    return h;
}

std::vector<std::vector<int>> cyclic_table(int m) {
    if (m <= 0) throw std::invalid_argument("cyclic_table: order must be positive");
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = (i + j) % m;
    return t;
}

std::vector<std::vector<int>> symmetric3_table() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::array<int, 3>& q) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == q) return static_cast<int>(i);
        throw std::logic_error("symmetric3_table: composition escaped the group");
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> c{};
            for (int v = 0; v < 3; ++v) c[v] = perms[i][perms[j][v]];
            t[i][j] = index_of(c);
        }
    return t;
}

FinHopf tensor_hopf(const FinHopf& a, const FinHopf& b) {
    const int da = a.dim, db = b.dim, d = da * db;
    auto id = [db](int i, int j) { return i * db + j; };
    FinHopf h;
    h.dim = d;
    h.mult.assign(d, Mat(d, d));
    h.comult.assign(d, Mat(d, d));
    h.unit.assign(d, Rational(0));
    h.counit.assign(d, Rational(0));
    h.antipode = Mat(d, d);
    for (int i0 = 0; i0 < da; ++i0)
        for (int i1 = 0; i1 < db; ++i1) {
            h.unit[id(i0, i1)] = a.unit[i0] * b.unit[i1];
            h.counit[id(i0, i1)] = a.counit[i0] * b.counit[i1];
            for (int j0 = 0; j0 < da; ++j0)
                for (int j1 = 0; j1 < db; ++j1) {
                    h.antipode.at(id(j0, j1), id(i0, i1)) =
                        a.antipode.at(j0, i0) * b.antipode.at(j1, i1);
                    for (int k0 = 0; k0 < da; ++k0)
                        for (int k1 = 0; k1 < db; ++k1) {
                            Rational m = a.mult[k0].at(i0, j0) * b.mult[k1].at(i1, j1);
                            if (!m.is_zero()) h.mult[id(k0, k1)].at(id(i0, i1), id(j0, j1)) = m;
                            Rational c = a.comult[i0].at(j0, k0) * b.comult[i1].at(j1, k1);
                            if (!c.is_zero()) h.comult[id(i0, i1)].at(id(j0, j1), id(k0, k1)) = c;
                        }
                }
        }
    return h;
}

FinHopf dual_hopf(const FinHopf& h) {
    const int d = h.dim;
    FinHopf g;
    g.dim = d;
    g.mult.assign(d, Mat(d, d));
    g.comult.assign(d, Mat(d, d));
    g.unit.assign(d, Rational(0));
    g.counit.assign(d, Rational(0));
    for (int k = 0; k < d; ++k) {
        g.mult[k] = h.comult[k];
        g.comult[k] = h.mult[k];
        g.unit[k] = h.counit[k];
        g.counit[k] = h.unit[k];
    }
    g.antipode = h.antipode.transposed();
    return g;
}

BaseAlgebraCandidate self_base(const FinHopf& h) {
    const int d = h.dim;
    BaseAlgebraCandidate l;
    l.dim = d;
    l.mult = h.mult;
    l.unit = h.unit;
    l.coaction = h.comult;
    l.action.assign(d, Mat(d, d));
    for (int x = 0; x < d; ++x) {
        Mat acc(d, d);
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                const Rational& c = h.comult[x].at(p, q);
                if (c.is_zero()) continue;
                Mat step = left_mult(h.mult, p) * right_mult_by(h.mult, antipode_of(h, q));
                for (int r = 0; r < d; ++r)
                    for (int s = 0; s < d; ++s) acc.at(r, s) += c * step.at(r, s);
            }
        l.action[x] = acc;
    }
    return l;
}

BaseAlgebraCandidate left_factor_base(const FinHopf& h0, const FinHopf& h1) {
    BaseAlgebraCandidate ad0 = self_base(h0);
    const int d0 = h0.dim, d1 = h1.dim;
    auto id = [d1](int i, int j) { return i * d1 + j; };
    BaseAlgebraCandidate l;
    l.dim = d0;
    l.mult = h0.mult;
    l.unit = h0.unit;
    l.action.assign(d0 * d1, Mat(d0, d0));
    for (int x0 = 0; x0 < d0; ++x0)
        for (int x1 = 0; x1 < d1; ++x1) {
            Mat m(d0, d0);
            if (!h1.counit[x1].is_zero())
                for (int r = 0; r < d0; ++r)
                    for (int s = 0; s < d0; ++s) m.at(r, s) = h1.counit[x1] * ad0.action[x0].at(r, s);
            l.action[id(x0, x1)] = m;
        }
    l.coaction.assign(d0, Mat(d0 * d1, d0));
    for (int j = 0; j < d0; ++j)
        for (int a = 0; a < d0; ++a)
            for (int b = 0; b < d0; ++b) {
                const Rational& c = h0.comult[j].at(a, b);
                if (c.is_zero()) continue;
                for (int i1 = 0; i1 < d1; ++i1)
                    if (!h1.unit[i1].is_zero()) l.coaction[j].at(id(a, i1), b) += c * h1.unit[i1];
            }
    return l;
}

BaseAlgebraCandidate conjugated_coaction(const FinHopf& h, const BaseAlgebraCandidate& l, int sigma) {
    if (sigma < 0 || sigma >= h.dim) throw std::invalid_argument("conjugated_coaction: bad element");
    Mat ls = left_mult(h.mult, sigma);
    SolveResult<Rational> inv = solve_linear(ls, h.unit);
    if (inv.status != SolveStatus::Unique)
        throw std::invalid_argument("conjugated_coaction: element is not invertible");
    Mat conj = left_mult(h.mult, sigma) * right_mult_by(h.mult, inv.particular);
    BaseAlgebraCandidate out = l;
    for (int j = 0; j < l.dim; ++j) out.coaction[j] = conj * l.coaction[j];
    return out;
}

BaseReport check_base_algebra(const FinHopf& h, const BaseAlgebraCandidate& l) {
    const int dh = h.dim, dl = l.dim;
    BaseReport rep;

    rep.module = true;
    {
        Mat one(dl, dl);
        for (int x = 0; x < dh; ++x) {
            if (h.unit[x].is_zero()) continue;
            for (int r = 0; r < dl; ++r)
                for (int s = 0; s < dl; ++s) one.at(r, s) += h.unit[x] * l.action[x].at(r, s);
        }
        if (!(one == Mat::identity(dl))) rep.module = false;
    }
    for (int x = 0; x < dh && rep.module; ++x)
        for (int y = 0; y < dh; ++y) {
            Mat lhs(dl, dl);
            for (int k = 0; k < dh; ++k) {
                const Rational& c = h.mult[k].at(x, y);
                if (c.is_zero()) continue;
                for (int r = 0; r < dl; ++r)
                    for (int s = 0; s < dl; ++s) lhs.at(r, s) += c * l.action[k].at(r, s);
            }
            if (!(lhs == l.action[x] * l.action[y])) {
                rep.module = false;
                break;
            }
        }

    rep.module_algebra = true;
    for (int x = 0; x < dh && rep.module_algebra; ++x) {
        Vec<Rational> xo(dl, Rational(0));
        for (int r = 0; r < dl; ++r)
            for (int s = 0; s < dl; ++s) xo[r] += l.action[x].at(r, s) * l.unit[s];
        Vec<Rational> want = l.unit;
        for (auto& w : want) w = w * h.counit[x];
        if (!vec_eq(xo, want)) rep.module_algebra = false;
        for (int i = 0; i < dl && rep.module_algebra; ++i)
            for (int j = 0; j < dl; ++j) {
                Vec<Rational> prod(dl, Rational(0));
                for (int k = 0; k < dl; ++k) prod[k] = l.mult[k].at(i, j);
                Vec<Rational> lhs(dl, Rational(0));
                for (int r = 0; r < dl; ++r)
                    for (int s = 0; s < dl; ++s) lhs[r] += l.action[x].at(r, s) * prod[s];
                Vec<Rational> rhs(dl, Rational(0));
                for (int p = 0; p < dh; ++p)
                    for (int q = 0; q < dh; ++q) {
                        const Rational& c = h.comult[x].at(p, q);
                        if (c.is_zero()) continue;
                        Vec<Rational> u(dl, Rational(0)), v(dl, Rational(0));
                        for (int r = 0; r < dl; ++r) {
                            u[r] = l.action[p].at(r, i);
                            v[r] = l.action[q].at(r, j);
                        }
                        Vec<Rational> w = alg_mul(l.mult, u, v);
                        for (int r = 0; r < dl; ++r) rhs[r] += c * w[r];
                    }
                if (!vec_eq(lhs, rhs)) {
                    rep.module_algebra = false;
                    break;
                }
            }
    }

    rep.comodule = true;
    for (int j = 0; j < dl && rep.comodule; ++j) {
        std::vector<Rational> t1(static_cast<size_t>(dh) * dh * dl, Rational(0)), t2 = t1;
        for (int x = 0; x < dh; ++x)
            for (int i = 0; i < dl; ++i) {
                const Rational& c = l.coaction[j].at(x, i);
                if (c.is_zero()) continue;
                for (int p = 0; p < dh; ++p)
                    for (int q = 0; q < dh; ++q) {
                        const Rational& w = h.comult[x].at(p, q);
                        if (!w.is_zero()) t1[(static_cast<size_t>(p) * dh + q) * dl + i] += c * w;
                    }
            }
        for (int p = 0; p < dh; ++p)
            for (int b = 0; b < dl; ++b) {
                const Rational& c = l.coaction[j].at(p, b);
                if (c.is_zero()) continue;
                for (int q = 0; q < dh; ++q)
                    for (int i = 0; i < dl; ++i) {
                        const Rational& w = l.coaction[b].at(q, i);
                        if (!w.is_zero()) t2[(static_cast<size_t>(p) * dh + q) * dl + i] += c * w;
                    }
            }
        for (size_t n = 0; n < t1.size(); ++n)
            if (t1[n] != t2[n]) {
                rep.comodule = false;
                break;
            }
        for (int i = 0; i < dl; ++i) {
            Rational s(0);
            for (int x = 0; x < dh; ++x) s += h.counit[x] * l.coaction[j].at(x, i);
            if (s != Rational(i == j ? 1 : 0)) rep.comodule = false;
        }
    }

    rep.comodule_algebra = true;
    for (int i = 0; i < dl && rep.comodule_algebra; ++i)
        for (int j = 0; j < dl; ++j) {
            Mat lhs(dh, dl), rhs(dh, dl);
            for (int k = 0; k < dl; ++k) {
                const Rational& c = l.mult[k].at(i, j);
                if (c.is_zero()) continue;
                for (int x = 0; x < dh; ++x)
                    for (int a = 0; a < dl; ++a) lhs.at(x, a) += c * l.coaction[k].at(x, a);
            }
            for (int x = 0; x < dh; ++x)
                for (int a = 0; a < dl; ++a) {
                    const Rational& ci = l.coaction[i].at(x, a);
                    if (ci.is_zero()) continue;
                    for (int z = 0; z < dh; ++z)
                        for (int b = 0; b < dl; ++b) {
                            const Rational& cj = l.coaction[j].at(z, b);
                            if (cj.is_zero()) continue;
                            Vec<Rational> hv = alg_mul(h.mult, basis_vec(dh, x), basis_vec(dh, z));
                            Vec<Rational> lv = alg_mul(l.mult, basis_vec(dl, a), basis_vec(dl, b));
                            Rational c = ci * cj;
                            for (int y = 0; y < dh; ++y) {
                                if (hv[y].is_zero()) continue;
                                for (int w = 0; w < dl; ++w)
                                    if (!lv[w].is_zero()) rhs.at(y, w) += c * hv[y] * lv[w];
                            }
                        }
                }
            if (!(lhs == rhs)) {
                rep.comodule_algebra = false;
                break;
            }
        }
    {
        Mat lhs(dh, dl), want(dh, dl);
        for (int j = 0; j < dl; ++j) {
            if (l.unit[j].is_zero()) continue;
            for (int x = 0; x < dh; ++x)
                for (int a = 0; a < dl; ++a) lhs.at(x, a) += l.unit[j] * l.coaction[j].at(x, a);
        }
        for (int x = 0; x < dh; ++x)
            for (int a = 0; a < dl; ++a) want.at(x, a) = h.unit[x] * l.unit[a];
        if (!(lhs == want)) rep.comodule_algebra = false;
    }

    rep.exchange_law = true;
    for (int x = 0; x < dh && rep.exchange_law; ++x)
        for (int j = 0; j < dl; ++j) {
            Mat lhs(dh, dl), rhs(dh, dl);
            for (int p = 0; p < dh; ++p)
                for (int q = 0; q < dh; ++q) {
                    const Rational& c = h.comult[x].at(p, q);
                    if (c.is_zero()) continue;
                    for (int i = 0; i < dl; ++i) {
                        const Rational& ai = l.action[p].at(i, j);
                        if (ai.is_zero()) continue;
                        for (int m = 0; m < dh; ++m)
                            for (int w = 0; w < dl; ++w) {
                                const Rational& co = l.coaction[i].at(m, w);
                                if (co.is_zero()) continue;
                                for (int y = 0; y < dh; ++y) {
                                    const Rational& mm = h.mult[y].at(m, q);
                                    if (!mm.is_zero()) lhs.at(y, w) += c * ai * co * mm;
                                }
                            }
                    }
                    for (int m = 0; m < dh; ++m)
                        for (int i = 0; i < dl; ++i) {
                            const Rational& co = l.coaction[j].at(m, i);
                            if (co.is_zero()) continue;
                            for (int y = 0; y < dh; ++y) {
                                const Rational& mm = h.mult[y].at(p, m);
                                if (mm.is_zero()) continue;
                                for (int w = 0; w < dl; ++w) {
                                    const Rational& aw = l.action[q].at(w, i);
                                    if (!aw.is_zero()) rhs.at(y, w) += c * co * mm * aw;
                                }
                            }
                        }
                }
            if (!(lhs == rhs)) {
                rep.exchange_law = false;
                break;
            }
        }

    rep.braided_commutative = true;
    for (int i = 0; i < dl && rep.braided_commutative; ++i)
        for (int j = 0; j < dl; ++j) {
            Vec<Rational> lhs(dl, Rational(0));
            for (int k = 0; k < dl; ++k) lhs[k] = l.mult[k].at(i, j);
            Vec<Rational> rhs(dl, Rational(0));
            for (int x = 0; x < dh; ++x)
                for (int a = 0; a < dl; ++a) {
                    const Rational& c = l.coaction[i].at(x, a);
                    if (c.is_zero()) continue;
                    Vec<Rational> u(dl, Rational(0));
                    for (int r = 0; r < dl; ++r) u[r] = l.action[x].at(r, j);
                    Vec<Rational> w = alg_mul(l.mult, u, basis_vec(dl, a));
                    for (int r = 0; r < dl; ++r) rhs[r] += c * w[r];
                }
            if (!vec_eq(lhs, rhs)) {
                rep.braided_commutative = false;
                break;
            }
        }

    // permutation on the regular module: tau(l_j (x) e_b) = l_j^(1) e_b (x) l_j^[2]
    {
        Mat tau(dl * dh, dl * dh);
        for (int j = 0; j < dl; ++j)
            for (int b = 0; b < dh; ++b)
                for (int x = 0; x < dh; ++x)
                    for (int i = 0; i < dl; ++i) {
                        const Rational& c = l.coaction[j].at(x, i);
                        if (c.is_zero()) continue;
                        for (int a = 0; a < dh; ++a) {
                            const Rational& mm = h.mult[a].at(x, b);
                            if (!mm.is_zero()) tau.at(a * dl + i, j * dh + b) += c * mm;
                        }
                    }
        rep.permutation_equivariant = true;
        for (int z = 0; z < dh && rep.permutation_equivariant; ++z) {
            Mat src(dl * dh, dl * dh), dst(dh * dl, dh * dl);
            for (int p = 0; p < dh; ++p)
                for (int q = 0; q < dh; ++q) {
                    const Rational& c = h.comult[z].at(p, q);
                    if (c.is_zero()) continue;
                    Mat s = kron(l.action[p], left_mult(h.mult, q));
                    Mat t = kron(left_mult(h.mult, p), l.action[q]);
                    for (int r = 0; r < dl * dh; ++r)
                        for (int cidx = 0; cidx < dl * dh; ++cidx) {
                            src.at(r, cidx) += c * s.at(r, cidx);
                            dst.at(r, cidx) += c * t.at(r, cidx);
                        }
                }
            if (!(tau * src == dst * tau)) rep.permutation_equivariant = false;
        }
        try {
            inverse(tau);
            rep.permutation_invertible = true;
        } catch (const std::domain_error&) {
            rep.permutation_invertible = false;
        }
    }
    return rep;
}

DualPermutationReport check_dual_permutation(const FinHopf& h) {
    const FinHopf g = dual_hopf(h);
    const int d = h.dim;
    DualPermutationReport rep;

    Mat tau(d * d, d * d);
    for (int p = 0; p < d; ++p)
        for (int i = 0; i < d; ++i)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    const Rational& c = g.comult[i].at(a, b);
                    if (c.is_zero()) continue;
                    Vec<Rational> mv = alg_mul(g.mult, basis_vec(d, p), basis_vec(d, b));
                    for (int y = 0; y < d; ++y)
                        if (!mv[y].is_zero()) tau.at(a * d + y, p * d + i) += c * mv[y];
                }

    Mat tinv(0, 0);
    try {
        tinv = inverse(tau);
        rep.invertible = true;
    } catch (const std::domain_error&) {
        rep.invertible = false;
    }

    if (rep.invertible) {
        Mat ginv = inverse(g.antipode);
        Mat stated(d * d, d * d);
        for (int i = 0; i < d; ++i)
            for (int p = 0; p < d; ++p)
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b) {
                        const Rational& c = g.comult[i].at(a, b);
                        if (c.is_zero()) continue;
                        Vec<Rational> gb(d, Rational(0));
                        for (int r = 0; r < d; ++r) gb[r] = ginv.at(r, b);
                        Vec<Rational> mv = alg_mul(g.mult, basis_vec(d, p), gb);
                        for (int y = 0; y < d; ++y)
                            if (!mv[y].is_zero()) stated.at(y * d + a, i * d + p) += c * mv[y];
                    }
        rep.stated_inverse = (stated == tinv);
    }

    // Module structures: the comodule leg is acted on through the pairing,
    // a |-> a^[0] <a^(1), x>; the dual-Hopf leg itself carries the coadjoint
    // action <x |> p, y> = <p, gamma(x^(1)) y x^(2)>.
    auto act = [&](int x) {
        Mat m(d, d);
        for (int i = 0; i < d; ++i)
            for (int a = 0; a < d; ++a) m.at(a, i) = g.comult[i].at(a, x);
        return m;
    };
    auto coad = [&](int x) {
        Mat m(d, d);
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                const Rational& c = h.comult[x].at(p, q);
                if (c.is_zero()) continue;
                for (int r = 0; r < d; ++r) {
                    Vec<Rational> v = alg_mul(
                        h.mult, alg_mul(h.mult, antipode_of(h, p), basis_vec(d, r)), basis_vec(d, q));
                    for (int i = 0; i < d; ++i)
                        if (!v[i].is_zero()) m.at(r, i) += c * v[i];
                }
            }
        return m;
    };
    rep.equivariant = true;
    for (int x = 0; x < d && rep.equivariant; ++x) {
        Mat dom(d * d, d * d), cod(d * d, d * d);
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                const Rational& c = h.comult[x].at(p, q);
                if (c.is_zero()) continue;
                Mat s = kron(coad(p), act(q));
                Mat t = kron(act(p), coad(q));
                for (int r = 0; r < d * d; ++r)
                    for (int cc = 0; cc < d * d; ++cc) {
                        dom.at(r, cc) += c * s.at(r, cc);
                        cod.at(r, cc) += c * t.at(r, cc);
                    }
            }
        if (!(tau * dom == cod * tau)) rep.equivariant = false;
    }
    return rep;
}

DynAlgebra multiplication_dynamical(const BaseAlgebraCandidate& l) {
    const int d = l.dim;
    DynAlgebra a;
    a.dim = d;
    a.action = l.action;
    a.star.assign(static_cast<size_t>(d) * d, Mat(d, d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const Rational& c = l.mult[k].at(i, j);
                if (c.is_zero()) continue;
                for (int w = 0; w < d; ++w)
                    if (!l.unit[w].is_zero()) a.star[i * d + j].at(k, w) += c * l.unit[w];
            }
    return a;
}

DynAlgebra coaction_dynamical(const BaseAlgebraCandidate& l) {
    const int d = l.dim;
    DynAlgebra a;
    a.dim = d;
    a.action = l.action;
    a.star.assign(static_cast<size_t>(d) * d, Mat(d, d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a.star[i * d + j].at(i, j) = Rational(1);
    return a;
}

DynReport check_dynamical(const FinHopf& h, const BaseAlgebraCandidate& l, const DynAlgebra& a) {
    const int dh = h.dim, dl = l.dim, da = a.dim;
    DynReport rep;

    rep.equivariant = true;
    for (int x = 0; x < dh && rep.equivariant; ++x)
        for (int i = 0; i < da && rep.equivariant; ++i)
            for (int j = 0; j < da; ++j) {
                Mat lhs(da, dl), rhs(da, dl);
                for (int p = 0; p < dh; ++p)
                    for (int q = 0; q < dh; ++q) {
                        const Rational& c = h.comult[x].at(p, q);
                        if (c.is_zero()) continue;
                        for (int ii = 0; ii < da; ++ii) {
                            const Rational& u = a.action[p].at(ii, i);
                            if (u.is_zero()) continue;
                            for (int jj = 0; jj < da; ++jj) {
                                const Rational& v = a.action[q].at(jj, j);
                                if (v.is_zero()) continue;
                                const Mat& s = a.star[ii * da + jj];
                                Rational cuv = c * u * v;
                                for (int r = 0; r < da; ++r)
                                    for (int w = 0; w < dl; ++w) {
                                        const Rational& sv = s.at(r, w);
                                        if (!sv.is_zero()) lhs.at(r, w) += cuv * sv;
                                    }
                            }
                        }
                        Mat t = a.action[p] * a.star[i * da + j] * l.action[q].transposed();
                        for (int r = 0; r < da; ++r)
                            for (int w = 0; w < dl; ++w) rhs.at(r, w) += c * t.at(r, w);
                    }
                if (!(lhs == rhs)) {
                    rep.equivariant = false;
                    break;
                }
            }

    rep.shifted_associative = true;
    for (int i = 0; i < da && rep.shifted_associative; ++i)
        for (int j = 0; j < da && rep.shifted_associative; ++j)
            for (int k = 0; k < da; ++k) {
                Mat bot(da, dl);
                const Mat& s1 = a.star[j * da + k];
                for (int ap = 0; ap < da; ++ap)
                    for (int lp = 0; lp < dl; ++lp) {
                        const Rational& c1 = s1.at(ap, lp);
                        if (c1.is_zero()) continue;
                        const Mat& s2 = a.star[i * da + ap];
                        for (int r = 0; r < da; ++r)
                            for (int l2 = 0; l2 < dl; ++l2) {
                                const Rational& c2 = s2.at(r, l2);
                                if (c2.is_zero()) continue;
                                for (int cc = 0; cc < dl; ++cc) {
                                    const Rational& mm = l.mult[cc].at(l2, lp);
                                    if (!mm.is_zero()) bot.at(r, cc) += c1 * c2 * mm;
                                }
                            }
                    }
                Mat top(da, dl);
                const Mat& s0 = a.star[i * da + j];
                for (int a1 = 0; a1 < da; ++a1)
                    for (int l1 = 0; l1 < dl; ++l1) {
                        const Rational& c0 = s0.at(a1, l1);
                        if (c0.is_zero()) continue;
                        for (int x = 0; x < dh; ++x)
                            for (int l2 = 0; l2 < dl; ++l2) {
                                const Rational& co = l.coaction[l1].at(x, l2);
                                if (co.is_zero()) continue;
                                for (int a2 = 0; a2 < da; ++a2) {
                                    const Rational& av = a.action[x].at(a2, k);
                                    if (av.is_zero()) continue;
                                    const Mat& s3 = a.star[a1 * da + a2];
                                    Rational f = c0 * co * av;
                                    for (int r = 0; r < da; ++r)
                                        for (int l3 = 0; l3 < dl; ++l3) {
                                            const Rational& c3 = s3.at(r, l3);
                                            if (c3.is_zero()) continue;
                                            for (int cc = 0; cc < dl; ++cc) {
                                                const Rational& mm = l.mult[cc].at(l3, l2);
                                                if (!mm.is_zero()) top.at(r, cc) += f * c3 * mm;
                                            }
                                        }
                                }
                            }
                    }
                if (!(top == bot)) {
                    rep.shifted_associative = false;
                    break;
                }
            }

    // product on A (x) L, stored sparsely per basis pair
    const int db = da * dl;
    std::vector<std::vector<std::map<int, Rational>>> prod(
        db, std::vector<std::map<int, Rational>>(db));
    for (int i = 0; i < da; ++i)
        for (int li = 0; li < dl; ++li)
            for (int j = 0; j < da; ++j)
                for (int lj = 0; lj < dl; ++lj) {
                    std::map<int, Rational>& out = prod[i * dl + li][j * dl + lj];
                    for (int x = 0; x < dh; ++x)
                        for (int l2 = 0; l2 < dl; ++l2) {
                            const Rational& co = l.coaction[li].at(x, l2);
                            if (co.is_zero()) continue;
                            for (int a2 = 0; a2 < da; ++a2) {
                                const Rational& av = a.action[x].at(a2, j);
                                if (av.is_zero()) continue;
                                const Mat& s = a.star[i * da + a2];
                                for (int r = 0; r < da; ++r)
                                    for (int l3 = 0; l3 < dl; ++l3) {
                                        const Rational& sv = s.at(r, l3);
                                        if (sv.is_zero()) continue;
                                        Vec<Rational> inner =
                                            alg_mul(l.mult, basis_vec(dl, l2), basis_vec(dl, lj));
                                        Vec<Rational> lw =
                                            alg_mul(l.mult, basis_vec(dl, l3), inner);
                                        Rational f = co * av * sv;
                                        for (int w = 0; w < dl; ++w) {
                                            if (lw[w].is_zero()) continue;
                                            Rational& slot = out[r * dl + w];
                                            slot += f * lw[w];
                                            if (slot.is_zero()) out.erase(r * dl + w);
                                        }
                                    }
                            }
                        }
                }
    rep.global_associative = true;
    for (int u = 0; u < db && rep.global_associative; ++u)
        for (int v = 0; v < db && rep.global_associative; ++v)
            for (int w = 0; w < db; ++w) {
                std::map<int, Rational> lhs, rhs;
                for (const auto& [m, c] : prod[u][v])
                    for (const auto& [n, e] : prod[m][w]) {
                        Rational& slot = lhs[n];
                        slot += c * e;
                        if (slot.is_zero()) lhs.erase(n);
                    }
                for (const auto& [m, c] : prod[v][w])
                    for (const auto& [n, e] : prod[u][m]) {
                        Rational& slot = rhs[n];
                        slot += c * e;
                        if (slot.is_zero()) rhs.erase(n);
                    }
                if (lhs != rhs) {
                    rep.global_associative = false;
                    break;
                }
            }
    return rep;
}

LiePresentation abelian_lie(int n) {
    LiePresentation h;
    h.dim = n;
    h.bracket.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
    return h;
}

LiePresentation borel2() {
    LiePresentation h = abelian_lie(2);
    h.bracket[1][0][0] = Rational(2);
    h.bracket[0][1][0] = Rational(-2);
    return h;
}

GuttProduct::GuttProduct(LiePresentation h) : h_(std::move(h)) {
    const int n = h_.dim;
    if (static_cast<int>(h_.bracket.size()) != n)
        throw std::invalid_argument("GuttProduct: bracket table has wrong shape");
    for (const auto& row : h_.bracket) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("GuttProduct: bracket table has wrong shape");
        for (const auto& cell : row)
            if (static_cast<int>(cell.size()) != n)
                throw std::invalid_argument("GuttProduct: bracket table has wrong shape");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (h_.bracket[i][j][k] != -h_.bracket[j][i][k])
                    throw std::invalid_argument("GuttProduct: bracket is not antisymmetric");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int lo = 0; lo < n; ++lo) {
                    Rational s(0);
                    for (int m = 0; m < n; ++m)
                        s += h_.bracket[i][j][m] * h_.bracket[m][k][lo] +
                             h_.bracket[j][k][m] * h_.bracket[m][i][lo] +
                             h_.bracket[k][i][m] * h_.bracket[m][j][lo];
                    if (!s.is_zero()) throw std::invalid_argument("GuttProduct: Jacobi identity fails");
                }
}

namespace {

void uelem_add(std::map<ExpVec, Poly>& r, const ExpVec& e, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = r.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) r.erase(it);
    }
}

}  // namespace

GuttProduct::UElem GuttProduct::normalize(const Word& w) {
    auto hit = norm_cache_.find(w);
    if (hit != norm_cache_.end()) return hit->second;
    UElem r;
    size_t pos = w.size();
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) {
            pos = i;
            break;
        }
    if (pos == w.size()) {
        ExpVec e(h_.dim, 0);
        for (int letter : w) ++e[letter];
        r.emplace(e, Poly(1, Rational(1)));
    } else {
        Word s = w;
        std::swap(s[pos], s[pos + 1]);
        r = normalize(s);
        const auto& c = h_.bracket[w[pos]][w[pos + 1]];
        Poly t = Poly::variable(1, 0);
        for (int k = 0; k < h_.dim; ++k) {
            if (c[k].is_zero()) continue;
            Word u;
            u.reserve(w.size() - 1);
            for (size_t m = 0; m < w.size(); ++m) {
                if (m == pos + 1) continue;
                u.push_back(m == pos ? k : w[m]);
            }
            for (const auto& [e, pc] : normalize(u)) uelem_add(r, e, (pc * t).scaled(c[k]));
        }
    }
    norm_cache_.emplace(w, r);
    return r;
}

const GuttProduct::UElem& GuttProduct::symmetrized(const ExpVec& e) {
    auto hit = sym_cache_.find(e);
    if (hit != sym_cache_.end()) return hit->second;
    Word sorted;
    for (int i = 0; i < h_.dim; ++i) sorted.insert(sorted.end(), e[i], i);
    UElem acc;
    long count = 0;
    Word w = sorted;
    do {
        for (const auto& [ee, c] : normalize(w)) uelem_add(acc, ee, c);
        ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    for (auto& [ee, c] : acc) c = c.scaled(Rational(1, count));
    return sym_cache_.emplace(e, std::move(acc)).first->second;
}

GuttProduct::UElem GuttProduct::to_enveloping(const Poly& f) {
    const int n = h_.dim;
    Poly g = f;
    if (g.nvars() != n && g.nvars() != n + 1) g = g.promoted(n);
    UElem r;
    Poly t = Poly::variable(1, 0);
    for (const auto& [e, c] : g.terms()) {
        ExpVec xi(e.begin(), e.begin() + n);
        int texp = g.nvars() == n + 1 ? e[n] : 0;
        Poly coeff(1, c);
        for (int m = 0; m < texp; ++m) coeff *= t;
        for (const auto& [ee, sc] : symmetrized(xi)) uelem_add(r, ee, sc * coeff);
    }
    return r;
}

Poly GuttProduct::from_enveloping(UElem u) {
    const int n = h_.dim;
    Poly out(n + 1);
    while (!u.empty()) {
        int top = 0;
        for (const auto& [e, c] : u) {
            int d = 0;
            for (int v : e) d += v;
            top = std::max(top, d);
        }
        std::vector<std::pair<ExpVec, Poly>> layer;
        for (const auto& [e, c] : u) {
            int d = 0;
            for (int v : e) d += v;
            if (d == top) layer.emplace_back(e, c);
        }
        for (const auto& [e, c] : layer) {
            for (const auto& [te, tc] : c.terms()) {
                ExpVec full = e;
                full.push_back(te[0]);
                out.add_term(full, tc);
            }
            for (const auto& [ee, sc] : symmetrized(e)) uelem_add(u, ee, -(sc * c));
        }
    }
    return out;
}

Poly GuttProduct::star(const Poly& f, const Poly& g) {
    UElem a = to_enveloping(f), b = to_enveloping(g);
    UElem prod;
    for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) {
            Word w;
            for (int i = 0; i < h_.dim; ++i) w.insert(w.end(), e1[i], i);
            for (int i = 0; i < h_.dim; ++i) w.insert(w.end(), e2[i], i);
            for (const auto& [ee, c] : normalize(w)) uelem_add(prod, ee, c * c1 * c2);
        }
    return from_enveloping(std::move(prod));
}

Poly truncate_t(const Poly& p, int order) {
    const int nv = p.nvars();
    if (nv == 0) return p;
    Poly r(nv);
    for (const auto& [e, c] : p.terms())
        if (e[nv - 1] <= order) r.add_term(e, c);
    return r;
}

}  // namespace dyntwist
