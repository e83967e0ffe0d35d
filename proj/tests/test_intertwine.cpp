#include <doctest.h>

#include "dyntwist/intertwine.hpp"

using namespace dyntwist;

namespace {

RatFunc lam() { return RatFunc::variable(1, 0); }
RatFunc rfc(long long n, long long d = 1) { return RatFunc(1, Rational(n, d)); }

template <class F>
const F* find_term(const Intertwiner<F>& phi, int z, const Word& w, int xcomp, int bcomp) {
    for (const auto& t : phi.terms[static_cast<size_t>(z)])
        if (t.word == w && t.xcomp == xcomp && t.bcomp == bcomp) return &t.coeff;
    return nullptr;
}

}  // namespace

TEST_CASE("canonical intertwiner for sl2, C2 against C2") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);
    const int f = g.f_index(0);
    Rep v = defining_rep(g);

    std::vector<RatFunc> lambda{lam()};
    InducingModule<RatFunc> x = rep_inducing(levi, lambda, v);
    CHECK(intertwiner_depth(x, v) == 2);

    Intertwiner<RatFunc> phi = solve_intertwiner(ord, x, v);
    REQUIRE(phi.terms.size() == 4);

    // z = (x (x) u0) (x) u1: the single correction carries -1/(lambda+1)
    {
        REQUIRE(phi.terms[1].size() == 2);
        const RatFunc* pin = find_term(phi, 1, Word{}, 0, 1);
        REQUIRE(pin != nullptr);
        CHECK(*pin == rfc(1));
        const RatFunc* corr = find_term(phi, 1, {f}, 0, 0);
        REQUIRE(corr != nullptr);
        CHECK(*corr == RatFunc() - (lam() + rfc(1)).inverse());
    }
    // z = (x (x) u1) (x) u0: bare
    CHECK(phi.terms[2].size() == 1);
    CHECK(phi.terms[0].size() == 1);
    // z = (x (x) u1) (x) u1: correction -1/(lambda-1) on the other fiber component
    {
        REQUIRE(phi.terms[3].size() == 2);
        const RatFunc* corr = find_term(phi, 3, {f}, 1, 0);
        REQUIRE(corr != nullptr);
        CHECK(*corr == RatFunc() - (lam() - rfc(1)).inverse());
    }
}

TEST_CASE("intertwiner equations hold under independent recomputation") {
    // rebuild Delta(e) Phi_z and Delta(a) Phi_z - Phi_{az} from the solved
    // coefficients with fresh module arithmetic and check they vanish
    LieAlgebra g = LieAlgebra::sl(3);
    Levi levi(g, {0});
    PbwOrder ord(levi);
    Rep v = defining_rep(g);

    std::vector<Rational> lambda{Rational(9, 4)};
    InducingModule<Rational> x = rep_inducing(levi, lambda, v);
    Intertwiner<Rational> phi = solve_intertwiner(ord, x, v);

    ParabolicVerma<Rational> verma(ord, x, phi.depth, DepthPolicy::Strict);
    const int bdim = v.dim;
    auto phi_vec = [&](int z) {
        // components in M_X (x) B as a flat vector
        Vec<Rational> out(static_cast<size_t>(verma.dim() * bdim), Rational(0));
        for (const auto& t : phi.terms[static_cast<size_t>(z)]) {
            int vi = verma.index(t.word, t.xcomp);
            REQUIRE(vi >= 0);
            out[static_cast<size_t>(vi * bdim + t.bcomp)] =
                out[static_cast<size_t>(vi * bdim + t.bcomp)] + t.coeff;
        }
        return out;
    };
    auto act = [&](int gidx, const Vec<Rational>& w) {
        Vec<Rational> out(w.size(), Rational(0));
        const Matrix<Rational>& gm = verma.generator_matrix(gidx);
        const Matrix<Rational>& bm = v.act(gidx);
        for (int i = 0; i < verma.dim(); ++i)
            for (int l = 0; l < bdim; ++l) {
                const Rational& c = w[static_cast<size_t>(i * bdim + l)];
                if (c.is_zero()) continue;
                for (int r = 0; r < verma.dim(); ++r)
                    if (!gm.at(r, i).is_zero())
                        out[static_cast<size_t>(r * bdim + l)] = out[static_cast<size_t>(r * bdim + l)] + gm.at(r, i) * c;
                for (int r = 0; r < bdim; ++r)
                    if (!bm.at(r, l).is_zero())
                        out[static_cast<size_t>(i * bdim + r)] = out[static_cast<size_t>(i * bdim + r)] + bm.at(r, l) * c;
            }
        return out;
    };

    const int zn = x.dim * bdim;
    // highest-weight conditions
    int e_exc = g.e_index(g.simple_root_index(1));
    for (int z = 0; z < zn; ++z) {
        Vec<Rational> r = act(e_exc, phi_vec(z));
        for (const auto& c : r) CHECK(c.is_zero());
    }
    // Levi equivariance
    for (int gidx : levi.l0_generators()) {
        Matrix<Rational> az = kron(x.action(gidx), Matrix<Rational>::identity(bdim)) +
                              kron(Matrix<Rational>::identity(x.dim), v.act(gidx));
        for (int z = 0; z < zn; ++z) {
            Vec<Rational> lhs = act(gidx, phi_vec(z));
            Vec<Rational> rhs(lhs.size(), Rational(0));
            for (int z2 = 0; z2 < zn; ++z2) {
                if (az.at(z2, z).is_zero()) continue;
                Vec<Rational> p2 = phi_vec(z2);
                for (size_t q = 0; q < rhs.size(); ++q) rhs[q] = rhs[q] + p2[q] * az.at(z2, z);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("non-generic character points are reported") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);
    Rep v = defining_rep(g);

    auto solve_at = [&](const Rational& l0) {
        std::vector<Rational> lambda{l0};
        InducingModule<Rational> x = rep_inducing(levi, lambda, v);
        return solve_intertwiner(ord, x, v);
    };

    CHECK_NOTHROW((void)solve_at(Rational(5, 2)));
    CHECK_NOTHROW((void)solve_at(Rational(-7, 3)));
    CHECK_NOTHROW((void)solve_at(Rational(3)));
    CHECK_NOTHROW((void)solve_at(Rational(-2)));
    // the failure locus of this pair is {-1, 0, 1}
    CHECK_THROWS_AS((void)solve_at(Rational(-1)), NonGenericError);
    CHECK_THROWS_AS((void)solve_at(Rational(0)), NonGenericError);
    CHECK_THROWS_AS((void)solve_at(Rational(1)), NonGenericError);
}

TEST_CASE("hom dimensions match weight-component dimensions at generic points") {
    SUBCASE("sl2") {
        LieAlgebra g = LieAlgebra::sl(2);
        Levi levi(g, {});
        PbwOrder ord(levi);
        std::vector<Rational> lambda{Rational(5, 2)};

        Rep c2 = defining_rep(g);
        for (int nu = -3; nu <= 3; ++nu) {
            std::vector<Rational> mu{lambda[0] + Rational(nu)};
            int expect = static_cast<int>(weight_component(c2, levi, {nu}).size());
            CHECK(hom_dimension(ord, lambda, mu, c2, 2) == expect);
        }

        Rep v2 = irrep(g, {2});
        CHECK(hom_dimension(ord, lambda, {lambda[0]}, v2, 3) == 1);
        CHECK(hom_dimension(ord, lambda, {lambda[0] + Rational(2)}, v2, 3) == 1);
        CHECK(hom_dimension(ord, lambda, {lambda[0] - Rational(2)}, v2, 3) == 1);
        CHECK(hom_dimension(ord, lambda, {lambda[0] + Rational(1)}, v2, 3) == 0);
        CHECK(hom_dimension(ord, lambda, {lambda[0] + Rational(6)}, v2, 3) == 0);
    }

    SUBCASE("sl3") {
        LieAlgebra g = LieAlgebra::sl(3);
        Levi levi(g, {0});
        PbwOrder ord(levi);
        std::vector<Rational> lambda{Rational(-13, 5)};

        Rep c3 = defining_rep(g);
        for (int nu = -2; nu <= 2; ++nu) {
            std::vector<Rational> mu{lambda[0] + Rational(nu)};
            int expect = static_cast<int>(weight_component(c3, levi, {nu}).size());
            CHECK(hom_dimension(ord, lambda, mu, c3, 3) == expect);
        }

        Rep ad = irrep(g, {1, 1});
        CHECK(hom_dimension(ord, lambda, {lambda[0]}, ad, 3) == 1);
        CHECK(hom_dimension(ord, lambda, {lambda[0] + Rational(3)}, ad, 3) == 0);
    }
}

TEST_CASE("hom dimension vanishes off the integral-offset locus") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);
    std::vector<Rational> lambda{Rational(5, 2)};
    Rep c2 = defining_rep(g);
    CHECK(hom_dimension(ord, lambda, {Rational(1, 3)}, c2, 2) == 0);
    CHECK(hom_dimension(ord, lambda, {lambda[0] + Rational(1, 2)}, c2, 2) == 0);
}
