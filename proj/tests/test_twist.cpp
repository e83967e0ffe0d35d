#include <doctest.h>

#include <vector>

#include "dyntwist/twist.hpp"

using namespace dyntwist;

namespace {

RatFunc lam() { return RatFunc::variable(1, 0); }
RatFunc rfc(long long n, long long d = 1) { return RatFunc::constant(1, Rational(n, d)); }

int distinct_total_weights(const Rep& v, const Rep& w) {
    std::vector<std::vector<int>> seen;
    for (const auto& a : v.weights)
        for (const auto& b : w.weights) {
            std::vector<int> t = a;
            for (size_t i = 0; i < t.size(); ++i) t[i] += b[i];
            if (std::find(seen.begin(), seen.end(), t) == seen.end()) seen.push_back(t);
        }
    return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("twist with a trivial factor is the identity") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);
    Rep v = defining_rep(g);
    Rep t = trivial_rep(g);
    std::vector<RatFunc> L{lam()};
    CHECK(twist_star(ord, L, v, t) == Matrix<RatFunc>::identity(2));
    CHECK(twist_star(ord, L, t, v) == Matrix<RatFunc>::identity(2));

    LieAlgebra g3 = LieAlgebra::sl(3);
    Levi levi3(g3, {0});
    PbwOrder ord3(levi3);
    Rep v3 = defining_rep(g3);
    Rep t3 = trivial_rep(g3);
    std::vector<Rational> L3{Rational(23, 7)};
    CHECK(twist_star(ord3, L3, v3, t3) == Matrix<Rational>::identity(3));
    CHECK(twist_star(ord3, L3, t3, v3) == Matrix<Rational>::identity(3));
}

TEST_CASE("defining-pair twist for rank one is the frozen matrix") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);
    Rep v = defining_rep(g);
    std::vector<RatFunc> L{lam()};

    // raw composite: only v+ (x) v- picks up a correction, landing on v- (x) v+
    Matrix<RatFunc> raw = twist_raw(ord, L, v, v);
    Matrix<RatFunc> raw_expect = Matrix<RatFunc>::identity(4);
    raw_expect.at(2, 1) = rfc(-1) / (lam() + rfc(1));
    CHECK(raw == raw_expect);

    // star convention: flip conjugation moves the entry to (v+ (x) v-) <- (v- (x) v+)
    Matrix<RatFunc> star = twist_star(ord, L, v, v);
    Matrix<RatFunc> star_expect = Matrix<RatFunc>::identity(4);
    star_expect.at(1, 2) = rfc(-1) / (lam() + rfc(1));
    CHECK(star == star_expect);
}

TEST_CASE("raw composition identity pins the factor order") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);
    Rep v = defining_rep(g);
    Rep vv = tensor_rep(v, v);
    std::vector<RatFunc> L{lam()};

    Matrix<RatFunc> f_ab = twist_raw(ord, L, v, v);
    Matrix<RatFunc> f_ab_c = twist_raw(ord, L, vv, v);
    Matrix<RatFunc> f_a_bc = twist_raw(ord, L, v, vv);
    InducingModule<RatFunc> x = rep_inducing(levi, L, vv);
    Intertwiner<RatFunc> phi = solve_intertwiner(ord, x, v);
    Matrix<RatFunc> twist_op = flatten_based(phi, v.dim, v);

    Matrix<RatFunc> lhs = f_ab_c * kron(f_ab, Matrix<RatFunc>::identity(2));
    Matrix<RatFunc> rhs = f_a_bc * twist_op;
    CHECK(lhs == rhs);
    // leading twists enter as module endomorphisms on the source side; the
    // mirrored order is genuinely different
    CHECK(kron(f_ab, Matrix<RatFunc>::identity(2)) * f_ab_c != lhs);
}

TEST_CASE("shifted cocycle holds symbolically for rank one") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);
    Rep v = defining_rep(g);
    std::vector<RatFunc> L{lam()};

    IdentitySides<RatFunc> based = cocycle_sides(ord, L, v, v, v);
    CHECK(based.holds());
    IdentitySides<RatFunc> blockwise = cocycle_sides(ord, L, v, v, v, true);
    CHECK(blockwise.holds());
    CHECK(based_star_factor(ord, L, v, v, v) == based_star_blockwise(ord, L, v, v, v));
}

TEST_CASE("Yang-Baxter identities for rank one") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);
    Rep v = defining_rep(g);
    std::vector<RatFunc> L{lam()};

    CHECK(qdybe_sides(ord, L, v, v, v).holds());
    CHECK(qdybe_based_sides(ord, L, v, v, v).holds());

    // negative control: reversing the shift direction breaks the identity
    std::array<const Rep*, 3> reps{&v, &v, &v};
    auto fixed = [&](const std::vector<int>&) { return dynamical_r(ord, L, v, v); };
    auto wrong = [&](const std::vector<int>& muc) {
        std::vector<int> neg = muc;
        for (int& x : neg) x = -x;
        return dynamical_r(ord, shifted_lambda(L, neg), v, v);
    };
    Matrix<RatFunc> lhs = on_slots<RatFunc>(reps, 0, 1, levi, fixed) *
                          on_slots<RatFunc>(reps, 0, 2, levi, wrong) *
                          on_slots<RatFunc>(reps, 1, 2, levi, fixed);
    Matrix<RatFunc> rhs = on_slots<RatFunc>(reps, 1, 2, levi, wrong) *
                          on_slots<RatFunc>(reps, 0, 2, levi, fixed) *
                          on_slots<RatFunc>(reps, 0, 1, levi, wrong);
    CHECK(lhs != rhs);
}

TEST_CASE("twists are equivariant, unipotent and weight-preserving") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);
    Rep v = defining_rep(g);
    std::vector<RatFunc> L{lam()};
    Matrix<RatFunc> f = twist_star(ord, L, v, v);
    CHECK(f != Matrix<RatFunc>::identity(4));
    CHECK(levi_equivariant(f, levi, v, v));
    CHECK(preserves_weights(f, v, v));
    int k = unipotence_index(f);
    CHECK(k == 2);
    CHECK(k <= distinct_total_weights(v, v));

    Rep s2 = irrep(g, {2});
    Matrix<RatFunc> f2 = twist_star(ord, L, s2, v);
    CHECK(levi_equivariant(f2, levi, s2, v));
    CHECK(preserves_weights(f2, s2, v));
    int k2 = unipotence_index(f2);
    CHECK(k2 >= 2);
    CHECK(k2 <= distinct_total_weights(s2, v));

    LieAlgebra g3 = LieAlgebra::sl(3);
    Levi levi3(g3, {0});
    PbwOrder ord3(levi3);
    Rep v3 = defining_rep(g3);
    std::vector<Rational> L3{Rational(23, 7)};
    Matrix<Rational> f3 = twist_star(ord3, L3, v3, v3);
    CHECK(f3 != Matrix<Rational>::identity(9));
    CHECK(levi_equivariant(f3, levi3, v3, v3));
    CHECK(preserves_weights(f3, v3, v3));
    int k3 = unipotence_index(f3);
    CHECK(k3 >= 2);
    CHECK(k3 <= distinct_total_weights(v3, v3));
}

TEST_CASE("classical limit of the rank-one R-matrix") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);
    Rep v = defining_rep(g);
    std::vector<RatFunc> L{lam()};

    Matrix<RatFunc> rbar = dynamical_r(ord, L, v, v);
    Matrix<RatFunc> rbar_expect = Matrix<RatFunc>::identity(4);
    rbar_expect.at(1, 2) = rfc(-1) / (lam() + rfc(1));
    rbar_expect.at(2, 1) = rfc(1) / (lam() + rfc(1));
    rbar_expect.at(2, 2) = (lam() * lam() + rfc(2) * lam()) / ((lam() + rfc(1)) * (lam() + rfc(1)));
    CHECK(rbar == rbar_expect);

    CHECK(scale_coefficient(rbar, 0) == Matrix<RatFunc>::identity(4));
    Matrix<RatFunc> r = classical_r(rbar);
    // (f (x) e - e (x) f) / lam
    Matrix<RatFunc> r_expect(4, 4);
    r_expect.at(1, 2) = rfc(-1) / lam();
    r_expect.at(2, 1) = rfc(1) / lam();
    CHECK(r == r_expect);

    CHECK(cdybe_residual(levi, v, v, v, r, r, r).is_zero());
    // scaling r breaks the balance between derivative and bracket terms
    Matrix<RatFunc> r2 = r.scaled(rfc(2));
    CHECK(!cdybe_residual(levi, v, v, v, r2, r2, r2).is_zero());

    Matrix<RatFunc> sym = symmetrized(r, 2);
    CHECK(sym.is_zero());
    std::vector<int> all_gens;
    for (int p = 0; p < g.num_positive(); ++p) {
        all_gens.push_back(g.e_index(p));
        all_gens.push_back(g.f_index(p));
    }
    for (int i = 0; i < g.rank(); ++i) all_gens.push_back(g.h_index(i));
    CHECK(commutes_with_generators(sym, v, v, all_gens));
}

TEST_CASE("nonabelian base: based shifts pass where literal shifts fail") {
    LieAlgebra g = LieAlgebra::sl(3);
    Rep v = defining_rep(g);

    // full Cartan base inside sl3: the literal shift form is valid
    Levi cartan(g, {});
    PbwOrder ord_h(cartan);
    std::vector<Rational> Lh{Rational(23, 7), Rational(-9, 5)};
    CHECK(qdybe_sides(ord_h, Lh, v, v, v).holds());

    // nonabelian Levi: only the based form of the identity survives
    Levi levi(g, {0});
    PbwOrder ord(levi);
    std::vector<Rational> L{Rational(23, 7)};
    CHECK(cocycle_sides(ord, L, v, v, v).holds());
    CHECK(!qdybe_sides(ord, L, v, v, v).holds());
    CHECK(qdybe_based_sides(ord, L, v, v, v).holds());
}
