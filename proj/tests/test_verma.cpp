#include <doctest.h>

#include "dyntwist/verma.hpp"

using namespace dyntwist;

namespace {

RatFunc lam() { return RatFunc::variable(1, 0); }
RatFunc rfc(long long n, long long d = 1) { return RatFunc(1, Rational(n, d)); }

}  // namespace

TEST_CASE("scalar module over sl2: grading and generator action") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);
    const int e = g.e_index(0), f = g.f_index(0), h = g.h_index(0);

    std::vector<RatFunc> lambda{lam()};
    ParabolicVerma<RatFunc> m(ord, scalar_inducing(levi, lambda), 3);
    CHECK(m.dim() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(m.depth(i) == i);
        CHECK(m.word(i) == Word(static_cast<size_t>(i), f));
    }

    // h f^k x = (lambda - 2k) f^k x
    Vec<RatFunc> v = m.apply_word({h}, m.basis_vector(1));
    CHECK(v[1] == lam() - rfc(2));
    CHECK(v[0] == RatFunc());

    // e f^2 x = 2(lambda - 1) f x
    v = m.apply_word({e}, m.basis_vector(2));
    CHECK(v[1] == rfc(2) * (lam() - rfc(1)));

    // e f^3 x = 3(lambda - 2) f^2 x
    v = m.apply_word({e}, m.basis_vector(3));
    CHECK(v[2] == rfc(3) * (lam() - rfc(2)));

    // e x = 0
    v = m.apply_word({e}, m.basis_vector(0));
    for (const auto& c : v) CHECK(c == RatFunc());

    // f on the top slice leaves the window: Truncate drops it silently
    v = m.apply_word({f}, m.basis_vector(3));
    for (const auto& c : v) CHECK(c == RatFunc());

    ParabolicVerma<RatFunc> strict(ord, scalar_inducing(levi, lambda), 3, DepthPolicy::Strict);
    CHECK_THROWS_AS((void)strict.apply_word({f}, strict.basis_vector(3)), DepthExceeded);
}

TEST_CASE("mixed words act consistently with composition") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);
    const int e = g.e_index(0), f = g.f_index(0), h = g.h_index(0);
    std::vector<RatFunc> lambda{lam()};
    ParabolicVerma<RatFunc> m(ord, scalar_inducing(levi, lambda), 4);

    for (const Word& w : {Word{e, f}, Word{f, e}, Word{h, f, f}, Word{e, e, f, f}}) {
        // applying the word at once equals applying its letters in sequence
        Vec<RatFunc> verma_at_once = m.apply_word(w, m.basis_vector(1));
        Vec<RatFunc> stepwise = m.basis_vector(1);
        for (auto it = w.rbegin(); it != w.rend(); ++it) stepwise = m.apply_word({*it}, stepwise);
        CHECK(verma_at_once == stepwise);
    }
}

TEST_CASE("depth grading for the sl3 parabolic") {
    LieAlgebra g = LieAlgebra::sl(3);
    Levi levi(g, {0});
    PbwOrder ord(levi);

    std::vector<RatFunc> lambda{RatFunc::variable(1, 0)};
    ParabolicVerma<RatFunc> m(ord, scalar_inducing(levi, lambda), 3);
    // depth-d slice has d+1 monomials in the two nilradical directions
    std::vector<int> per_depth(4, 0);
    for (int i = 0; i < m.dim(); ++i) ++per_depth[static_cast<size_t>(m.depth(i))];
    CHECK(per_depth == std::vector<int>{1, 2, 3, 4});
    CHECK(m.dim() == 10);

    // with the defining module as inducing fiber the slices triple
    ParabolicVerma<RatFunc> mv(ord, rep_inducing(levi, lambda, defining_rep(g)), 3);
    std::vector<int> per_depth_v(4, 0);
    for (int i = 0; i < mv.dim(); ++i) ++per_depth_v[static_cast<size_t>(mv.depth(i))];
    CHECK(per_depth_v == std::vector<int>{3, 6, 9, 12});
}

TEST_CASE("Levi generators act on the inducing fiber") {
    LieAlgebra g = LieAlgebra::sl(3);
    Levi levi(g, {0});
    PbwOrder ord(levi);
    const int e1 = g.e_index(g.simple_root_index(0));

    std::vector<RatFunc> lambda{RatFunc::variable(1, 0)};
    ParabolicVerma<RatFunc> m(ord, rep_inducing(levi, lambda, defining_rep(g)), 2);

    // e_1 (x (x) u_1) = x (x) u_0 at depth zero
    int src = m.index(Word{}, 1);
    int dst = m.index(Word{}, 0);
    REQUIRE(src >= 0);
    REQUIRE(dst >= 0);
    Vec<RatFunc> v = m.apply_word({e1}, m.basis_vector(src));
    CHECK(v[static_cast<size_t>(dst)] == rfc(1));
    int nonzero = 0;
    for (const auto& c : v)
        if (!(c == RatFunc())) ++nonzero;
    CHECK(nonzero == 1);

    // e_1 (x (x) u_2) = 0
    v = m.apply_word({e1}, m.basis_vector(m.index(Word{}, 2)));
    for (const auto& c : v) CHECK(c == RatFunc());
}

TEST_CASE("contravariant pairing on the scalar sl2 module") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);
    const int f = g.f_index(0);
    std::vector<RatFunc> lambda{lam()};

    CHECK(shapovalov_pairing(ord, lambda, Word{}, Word{}) == rfc(1));
    CHECK(shapovalov_pairing(ord, lambda, {f}, {f}) == lam());
    CHECK(shapovalov_pairing(ord, lambda, {f, f}, {f, f}) == rfc(2) * lam() * (lam() - rfc(1)));
    // the degree-3 norm is 6 lambda (lambda-1) (lambda-2)
    CHECK(shapovalov_pairing(ord, lambda, {f, f, f}, {f, f, f}) ==
          rfc(6) * lam() * (lam() - rfc(1)) * (lam() - rfc(2)));
    // different degrees pair to zero
    CHECK(shapovalov_pairing(ord, lambda, {f}, {f, f}) == RatFunc());
}

TEST_CASE("Gram determinants certify genericity for sl2") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);

    int bad = -1;
    CHECK(verma_generic_at(ord, {Rational(5, 2)}, 4, &bad));
    CHECK(verma_generic_at(ord, {Rational(-7, 3)}, 4, &bad));
    // Gram_d(lambda) = prod_{k<=d} k (lambda - k + 1): vanishing pattern
    CHECK_FALSE(verma_generic_at(ord, {Rational(0)}, 4, &bad));
    CHECK(bad == 1);
    CHECK_FALSE(verma_generic_at(ord, {Rational(1)}, 4, &bad));
    CHECK(bad == 2);
    CHECK_FALSE(verma_generic_at(ord, {Rational(2)}, 4, &bad));
    CHECK(bad == 3);
    // negative integers stay generic for the scalar sl2 module
    CHECK(verma_generic_at(ord, {Rational(-1)}, 4, &bad));
}

TEST_CASE("Gram determinants for the sl3 parabolic") {
    LieAlgebra g = LieAlgebra::sl(3);
    Levi levi(g, {0});
    PbwOrder ord(levi);

    // depth-1 Gram is diag(lambda-ish): frozen 2x2
    std::vector<RatFunc> lambda{lam()};
    Matrix<RatFunc> g1 = shapovalov_gram(ord, lambda, 1);
    REQUIRE(g1.rows() == 2);
    CHECK(g1.at(0, 1) == RatFunc());
    CHECK(g1.at(1, 0) == RatFunc());
    // diagonal entries are lambda evaluated on h_theta and h_alpha2
    CHECK(g1.at(0, 0) + g1.at(1, 1) == rfc(2) * lam());

    int bad = -1;
    CHECK(verma_generic_at(ord, {Rational(7, 2)}, 3, &bad));
    CHECK_FALSE(verma_generic_at(ord, {Rational(0)}, 3, &bad));
    CHECK(bad == 1);
    CHECK_FALSE(verma_generic_at(ord, {Rational(1)}, 3, &bad));
    CHECK(bad == 2);
}

TEST_CASE("tensor inducing modules compose offsets and actions") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi levi(g, {});
    PbwOrder ord(levi);
    std::vector<RatFunc> lambda{lam()};

    InducingModule<RatFunc> x = rep_inducing(levi, lambda, defining_rep(g));
    InducingModule<RatFunc> t = tensor_inducing(x, defining_rep(g));
    CHECK(t.dim == 4);
    CHECK(t.offsets[0] == std::vector<int>{2});
    CHECK(t.offsets[1] == std::vector<int>{0});
    CHECK(t.offsets[2] == std::vector<int>{0});
    CHECK(t.offsets[3] == std::vector<int>{-2});
    CHECK(t.cartan_eig[0][0] == lam() + rfc(2));
    CHECK(t.cartan_eig[3][0] == lam() - rfc(2));
}
