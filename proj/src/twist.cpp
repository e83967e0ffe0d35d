#include "dyntwist/twist.hpp"

namespace dyntwist {

namespace {

// entrywise derivative by coordinate i; arity-polymorphic constants drop out
Matrix<RatFunc> entry_derivative(const Matrix<RatFunc>& m, int i) {
    Matrix<RatFunc> out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const RatFunc& e = m.at(r, c);
            if (field_is_zero(e) || e.nvars() <= i) continue;
            out.at(r, c) = e.derivative(i);
        }
    return out;
}

Matrix<RatFunc> place2(const Matrix<RatFunc>& m, int s1, int s2, const std::array<int, 3>& d) {
    const int s3 = 3 - s1 - s2;
    const int n = d[0] * d[1] * d[2];
    auto flat = [&](const std::array<int, 3>& idx) { return (idx[0] * d[1] + idx[1]) * d[2] + idx[2]; };
    Matrix<RatFunc> out(n, n);
    const int d1 = d[static_cast<size_t>(s1)], d2 = d[static_cast<size_t>(s2)], d3 = d[static_cast<size_t>(s3)];
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d2; ++b)
            for (int a2 = 0; a2 < d1; ++a2)
                for (int b2 = 0; b2 < d2; ++b2) {
                    const RatFunc& val = m.at(a2 * d2 + b2, a * d2 + b);
                    if (field_is_zero(val)) continue;
                    for (int k = 0; k < d3; ++k) {
                        std::array<int, 3> src{}, dst{};
                        src[static_cast<size_t>(s1)] = a;
                        src[static_cast<size_t>(s2)] = b;
                        src[static_cast<size_t>(s3)] = k;
                        dst[static_cast<size_t>(s1)] = a2;
                        dst[static_cast<size_t>(s2)] = b2;
                        dst[static_cast<size_t>(s3)] = k;
                        out.at(flat(dst), flat(src)) = val;
                    }
                }
    return out;
}

Matrix<RatFunc> place1(const Matrix<Rational>& m, int s, const std::array<int, 3>& d) {
    std::array<Matrix<RatFunc>, 3> factors{Matrix<RatFunc>::identity(d[0]),
                                           Matrix<RatFunc>::identity(d[1]),
                                           Matrix<RatFunc>::identity(d[2])};
    factors[static_cast<size_t>(s)] = promote_matrix<RatFunc>(m);
    return kron(kron(factors[0], factors[1]), factors[2]);
}

}  // namespace

Matrix<RatFunc> scale_coefficient(const Matrix<RatFunc>& m, int k) {
    Matrix<RatFunc> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const RatFunc& e = m.at(i, j);
            if (field_is_zero(e)) continue;
            TruncSeries<RatFunc> s = scale_expand(e, k);
            if (!s.is_zero() && s.valuation() < 0)
                throw std::domain_error("scale_coefficient: entry has a pole at t = 0");
            out.at(i, j) = s.coeff(k);
        }
    return out;
}

Matrix<RatFunc> classical_r(const Matrix<RatFunc>& rbar) {
    if (rbar.rows() != rbar.cols()) throw std::invalid_argument("classical_r: matrix not square");
    if (!(scale_coefficient(rbar, 0) == Matrix<RatFunc>::identity(rbar.rows())))
        throw std::domain_error("classical_r: leading order is not the identity");
    return scale_coefficient(rbar, 1);
}

Matrix<RatFunc> cdybe_residual(const Levi& levi, const Rep& v, const Rep& w, const Rep& u,
                               const Matrix<RatFunc>& r_vw, const Matrix<RatFunc>& r_vu,
                               const Matrix<RatFunc>& r_wu) {
    const LieAlgebra& g = levi.algebra();
    const std::array<int, 3> d{v.dim, w.dim, u.dim};
    Matrix<RatFunc> r12 = place2(r_vw, 0, 1, d);
    Matrix<RatFunc> r13 = place2(r_vu, 0, 2, d);
    Matrix<RatFunc> r23 = place2(r_wu, 1, 2, d);

    const int n = d[0] * d[1] * d[2];
    Matrix<RatFunc> acc(n, n);
    const std::vector<int>& exc = levi.excluded();
    for (size_t i = 0; i < exc.size(); ++i) {
        int h = g.h_index(exc[i]);
        acc = acc + place2(entry_derivative(r_wu, static_cast<int>(i)), 1, 2, d) * place1(v.act(h), 0, d);
        acc = acc - place2(entry_derivative(r_vu, static_cast<int>(i)), 0, 2, d) * place1(w.act(h), 1, d);
        acc = acc + place2(entry_derivative(r_vw, static_cast<int>(i)), 0, 1, d) * place1(u.act(h), 2, d);
    }
    Matrix<RatFunc> brackets = (r12 * r13 - r13 * r12) + (r12 * r23 - r23 * r12) + (r13 * r23 - r23 * r13);
    return acc - brackets;
}

Matrix<RatFunc> symmetrized(const Matrix<RatFunc>& r, int d) {
    if (r.rows() != d * d) throw std::invalid_argument("symmetrized: expected an operator on V (x) V");
    Matrix<RatFunc> p = promote_matrix<RatFunc>(flip_matrix(d, d));
    return r + p * r * p;
}

}  // namespace dyntwist
