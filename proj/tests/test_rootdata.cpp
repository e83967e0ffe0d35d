#include "doctest.h"

#include <map>
#include <stdexcept>

#include "dyntwist/rootdata.hpp"

using namespace dyntwist;

namespace {

// Bracket as a dense map for comparisons.
std::map<int, Rational> combo_map(const BasisCombo& c) {
    std::map<int, Rational> m;
    for (const auto& [i, v] : c) m[i] = v;
    return m;
}

}  // namespace

TEST_CASE("sl2 defining relations") {
    LieAlgebra g = LieAlgebra::sl(2);
    CHECK(g.rank() == 1);
    CHECK(g.dim() == 3);
    CHECK(g.num_positive() == 1);
    int e = g.e_index(0), f = g.f_index(0), h = g.h_index(0);

    CHECK(combo_map(g.bracket(e, f)) == std::map<int, Rational>{{h, Rational(1)}});
    CHECK(combo_map(g.bracket(h, e)) == std::map<int, Rational>{{e, Rational(2)}});
    CHECK(combo_map(g.bracket(h, f)) == std::map<int, Rational>{{f, Rational(-2)}});
    CHECK(g.bracket(e, e).empty());

    CHECK(g.trace_form(e, f) == Rational(1));
    CHECK(g.trace_form(h, h) == Rational(2));
    CHECK(g.trace_form(e, e) == Rational(0));
    CHECK(g.killing_factor() == 4);

    CHECK(g.adjoint_weight(e) == std::vector<int>{2});
    CHECK(g.adjoint_weight(f) == std::vector<int>{-2});
    CHECK(g.generator_name(e) == "e[1]");
    CHECK(g.generator_name(h) == "h1");
}

TEST_CASE("sl3 roots and brackets") {
    LieAlgebra g = LieAlgebra::sl(3);
    CHECK(g.rank() == 2);
    CHECK(g.dim() == 8);
    CHECK(g.num_positive() == 3);
    // positive roots: [0,0], [1,1], [0,1]
    CHECK(g.positive_root(0).lo == 0);
    CHECK(g.positive_root(0).hi == 0);
    CHECK(g.positive_root(2).lo == 0);
    CHECK(g.positive_root(2).hi == 1);
    CHECK(g.positive_root(2).height() == 2);

    // [e_a1, e_a2] = E_13 = +e_{a1+a2} in this realization
    auto br = combo_map(g.bracket(g.e_index(0), g.e_index(1)));
    CHECK(br == std::map<int, Rational>{{g.e_index(2), Rational(1)}});
    // [e_a2, e_a1] = -e_{a1+a2}
    auto br2 = combo_map(g.bracket(g.e_index(1), g.e_index(0)));
    CHECK(br2 == std::map<int, Rational>{{g.e_index(2), Rational(-1)}});
    // [e_i, f_j] = delta_ij h_i for simple roots
    CHECK(combo_map(g.bracket(g.e_index(0), g.f_index(0))) ==
          std::map<int, Rational>{{g.h_index(0), Rational(1)}});
    CHECK(g.bracket(g.e_index(0), g.f_index(1)).empty());

    CHECK(g.trace_form(g.h_index(0), g.h_index(1)) == Rational(-1));
    CHECK(g.trace_form(g.h_index(0), g.h_index(0)) == Rational(2));
    CHECK(g.trace_form(g.e_index(2), g.f_index(2)) == Rational(1));

    CHECK(g.adjoint_weight(g.e_index(0)) == std::vector<int>{2, -1});
    CHECK(g.adjoint_weight(g.e_index(2)) == std::vector<int>{1, 1});
    CHECK(g.adjoint_weight(g.f_index(2)) == std::vector<int>{-1, -1});

    CHECK_THROWS_AS(LieAlgebra::sl(1), std::invalid_argument);
}

TEST_CASE("jacobi identity and trace-form invariance on basis triples") {
    for (int n = 2; n <= 3; ++n) {
        LieAlgebra g = LieAlgebra::sl(n);
        int d = g.dim();
        // work in the defining rep where brackets are exact matrix commutators;
        // the bracket table must match them, so check Jacobi on the table by
        // expanding [[a,b],c] + [[b,c],a] + [[c,a],b] = 0.
        auto bracket_combo = [&](const BasisCombo& x, int c) {
            std::map<int, Rational> acc;
            for (const auto& [i, ci] : x)
                for (const auto& [k, ck] : g.bracket(i, c)) {
                    acc[k] += ci * ck;
                    if (acc[k].is_zero()) acc.erase(k);
                }
            return acc;
        };
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b)
                for (int c = b + 1; c < d; ++c) {
                    std::map<int, Rational> s;
                    for (auto& [k, v] : bracket_combo(g.bracket(a, b), c)) s[k] += v;
                    for (auto& [k, v] : bracket_combo(g.bracket(b, c), a)) s[k] += v;
                    for (auto& [k, v] : bracket_combo(g.bracket(c, a), b)) s[k] += v;
                    for (auto& [k, v] : s) CHECK(v == Rational(0));
                }
        // invariance: ([a,b], c) + (b, [a,c]) = 0
        auto form_with = [&](const BasisCombo& x, int c) {
            Rational t(0);
            for (const auto& [i, ci] : x) t += ci * g.trace_form(i, c);
            return t;
        };
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c)
                    CHECK(form_with(g.bracket(a, b), c) + form_with(g.bracket(a, c), b) == Rational(0));
    }
}

TEST_CASE("levi selection sl2") {
    LieAlgebra g = LieAlgebra::sl(2);
    Levi l(g, {});
    CHECK(l.r() == 1);
    CHECK(l.excluded() == std::vector<int>{0});
    CHECK(l.l0_generators().empty());
    CHECK(l.neg_nilradical() == std::vector<int>{g.f_index(0)});
    CHECK(l.pos_nilradical() == std::vector<int>{g.e_index(0)});
    CHECK(l.part(g.h_index(0)) == Levi::Part::LeviPart);
    CHECK(l.part(g.f_index(0)) == Levi::Part::NegNilradical);
    CHECK(l.excluded_height(0) == 1);

    Levi full(g, {0});
    CHECK(full.r() == 0);
    CHECK(full.neg_nilradical().empty());
    CHECK(full.l0_generators().size() == 2);
}

TEST_CASE("levi selection sl3 retaining alpha1") {
    LieAlgebra g = LieAlgebra::sl(3);
    Levi l(g, {0});
    CHECK(l.r() == 1);
    CHECK(l.excluded() == std::vector<int>{1});
    // n_l^- spanned by f_{a2}, f_{a1+a2}
    CHECK(l.neg_nilradical() == std::vector<int>{g.f_index(1), g.f_index(2)});
    CHECK(l.pos_nilradical() == std::vector<int>{g.e_index(1), g.e_index(2)});
    CHECK(l.l0_generators() == std::vector<int>{g.e_index(0), g.f_index(0)});
    CHECK(l.excluded_height(0) == 0);
    CHECK(l.excluded_height(1) == 1);
    CHECK(l.excluded_height(2) == 1);
    CHECK(l.root_in_levi(0));
    CHECK(!l.root_in_levi(2));

    // c-weight extraction: eigenvalue vector (a, b) -> (b)
    CHECK(l.c_weight({3, -2}) == std::vector<int>{-2});
    CHECK(l.retained_trivial({0, 5}));
    CHECK(!l.retained_trivial({1, 5}));

    CHECK_THROWS_AS(Levi(g, {7}), std::invalid_argument);
}

TEST_CASE("genericity of character points") {
    LieAlgebra g2 = LieAlgebra::sl(2);
    Levi l2(g2, {});
    CHECK(is_generic(CharacterPoint::numeric({Rational(5, 2)}), l2) == Genericity::Generic);
    CHECK(is_generic(CharacterPoint::numeric({Rational(3)}), l2) == Genericity::NonGeneric);
    CHECK(is_generic(CharacterPoint::symbolic(1), l2) == Genericity::NotDecidable);

    LieAlgebra g3 = LieAlgebra::sl(3);
    Levi l3(g3, {0});
    CHECK(is_generic(CharacterPoint::numeric({Rational(-7, 3)}), l3) == Genericity::Generic);
    CHECK(is_generic(CharacterPoint::numeric({Rational(0)}), l3) == Genericity::NonGeneric);
    CHECK_THROWS_AS(is_generic(CharacterPoint::numeric({Rational(1), Rational(1, 2)}), l3),
                    std::invalid_argument);
}
