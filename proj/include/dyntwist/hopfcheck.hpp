#pragma once

/*
 * Finite Hopf algebras by explicit structure tensors, with exact checks of
 * the axioms that the dynamical constructions rest on: base algebras, the
 * permutation they induce, shifted associativity at the axiom level, and
 * the PBW (symmetrization) star product on the dual of a Lie algebra.
 *
 * A FinHopf is a Hopf algebra over Rational on a fixed basis e_0..e_{d-1}:
 *   mult[k].at(i,j)    coefficient of e_k in e_i e_j
 *   unit[i]            coordinates of 1
 *   comult[i].at(a,b)  coefficient of e_a (x) e_b in Delta(e_i)
 *   counit[i]          eps(e_i)
 *   antipode.at(j,i)   coefficient of e_j in gamma(e_i)
 *
 * A base algebra over H is an algebra L that is both a left H-module
 * algebra and a left H-comodule algebra, written delta(l) = l^(1) (x) l^[2],
 * subject to two exchange laws (all sums exact, over every basis tuple):
 *
 *   (E1)  {x^(1)|>l}^(1) x^(2) (x) {x^(1)|>l}^[2]
 *             = x^(1) l^(1) (x) x^(2)|>l^[2]          for x in H, l in L
 *   (E2)  l1 l2 = (l1^(1)|>l2) l1^[2]                 for l1, l2 in L
 *
 * (E1) makes the permutation tau_A(l (x) a) = l^(1)|>a (x) l^[2] an
 * H-module map L (x) A -> A (x) L for every H-module A; (E2) says the
 * multiplication of L is commutative up to that permutation.
 *
 * A dynamical algebra over L is an H-module A with an equivariant map
 * st: A (x) A -> A (x) L such that both ways of bracketing a triple agree
 * after the inner L-leg is carried through tau and multiplied out:
 *
 *   (id (x) m)(st (x) id)(id (x) tau_A)(st (x) id) = (id (x) m)(st (x) id)(id (x) st).
 *
 * Equivalently (checked independently), the product
 *   (a (x) l)(a' (x) l') = st(a, l^(1)|>a') . (l^[2] l')
 * makes A (x) L an ordinary associative algebra.
 */

#include <map>
#include <vector>

#include "dyntwist/linalg.hpp"
#include "dyntwist/polynomial.hpp"
#include "dyntwist/rational.hpp"

namespace dyntwist {

struct FinHopf {
    int dim = 0;
    std::vector<Matrix<Rational>> mult;
    std::vector<Rational> unit;
    std::vector<Matrix<Rational>> comult;
    std::vector<Rational> counit;
    Matrix<Rational> antipode;
};

struct HopfReport {
    bool associative = false;
    bool unital = false;
    bool coassociative = false;
    bool counital = false;
    bool compatible = false;  // Delta and eps are algebra maps
    bool antipode = false;
    bool pass() const {
        return associative && unital && coassociative && counital && compatible && antipode;
    }
};

HopfReport check_hopf(const FinHopf& h);

/// Group algebra from a Cayley table; the identity must be element 0.
FinHopf group_algebra(const std::vector<std::vector<int>>& table);
std::vector<std::vector<int>> cyclic_table(int m);
/// Permutations of {0,1,2} in lexicographic one-line order; composition
/// table[i][j] = index of p_i o p_j.  Index 0 is the identity, 3 and 4
/// are the two 3-cycles.
std::vector<std::vector<int>> symmetric3_table();

FinHopf tensor_hopf(const FinHopf& a, const FinHopf& b);
FinHopf dual_hopf(const FinHopf& h);

struct BaseAlgebraCandidate {
    int dim = 0;
    std::vector<Matrix<Rational>> mult;  // mult[k].at(i,j): coeff of l_k in l_i l_j
    std::vector<Rational> unit;
    std::vector<Matrix<Rational>> action;    // action[x]: matrix of e_x |> .
    std::vector<Matrix<Rational>> coaction;  // coaction[j].at(x,i): delta(l_j)
};

/// L = H with the adjoint action x|>a = x^(1) a gamma(x^(2)) and the
/// coproduct as coaction.
BaseAlgebraCandidate self_base(const FinHopf& h);

/// L = H0 inside H = tensor_hopf(h0, h1), with the restricted adjoint
/// action and the coproduct of H0 embedded in the first tensor leg.
BaseAlgebraCandidate left_factor_base(const FinHopf& h0, const FinHopf& h1);

/// Replace the H-leg of the coaction by its conjugate under the basis
/// element sigma (which must be invertible in H).  Negative control: for
/// noncommutative H this breaks (E1) while the comodule axioms survive.
BaseAlgebraCandidate conjugated_coaction(const FinHopf& h, const BaseAlgebraCandidate& l, int sigma);

struct BaseReport {
    bool module = false;
    bool module_algebra = false;
    bool comodule = false;
    bool comodule_algebra = false;
    bool exchange_law = false;         // (E1)
    bool braided_commutative = false;  // (E2)
    bool permutation_equivariant = false;  // tau on the regular module
    bool permutation_invertible = false;
    bool pass() const {
        return module && module_algebra && comodule && comodule_algebra && exchange_law &&
               braided_commutative && permutation_equivariant && permutation_invertible;
    }
};

BaseReport check_base_algebra(const FinHopf& h, const BaseAlgebraCandidate& l);

/// The permutation tau(p (x) a) = a^[0] (x) p a^(1) on H* (x) A for a right
/// H*-comodule A (here A = H* itself, coacting by its coproduct).  It must
/// be an isomorphism of H-modules with inverse a (x) p |-> p gamma^{-1}(a^(1)) (x) a^[0].
struct DualPermutationReport {
    bool invertible = false;
    bool stated_inverse = false;
    bool equivariant = false;
    bool pass() const { return invertible && stated_inverse && equivariant; }
};

DualPermutationReport check_dual_permutation(const FinHopf& h);

struct DynAlgebra {
    int dim = 0;
    std::vector<Matrix<Rational>> action;  // H-action on A
    std::vector<Matrix<Rational>> star;    // star[i*dim+j].at(a,l): st(a_i, a_j)
};

/// A = L with st(a,b) = ab (x) 1: trivial L-leg, plain associativity.
DynAlgebra multiplication_dynamical(const BaseAlgebraCandidate& l);
/// A = L with st(a,b) = a (x) b: the whole second factor is carried by the
/// L-leg, so the bracketing law genuinely routes through the permutation.
DynAlgebra coaction_dynamical(const BaseAlgebraCandidate& l);

struct DynReport {
    bool equivariant = false;
    bool shifted_associative = false;
    bool global_associative = false;  // associativity of the product on A (x) L
    bool pass() const { return equivariant && shifted_associative && global_associative; }
};

DynReport check_dynamical(const FinHopf& h, const BaseAlgebraCandidate& l, const DynAlgebra& a);

/// Lie algebra by structure constants: [b_i, b_j] = sum_k bracket[i][j][k] b_k.
struct LiePresentation {
    int dim = 0;
    std::vector<std::vector<std::vector<Rational>>> bracket;
};

LiePresentation abelian_lie(int n);
/// Two-dimensional solvable algebra with basis (y, x) and [x, y] = 2y.
LiePresentation borel2();

/*
 * Star product on polynomial functions on the dual space: f * g is the
 * polynomial whose symmetrization equals sym(f) sym(g) in the enveloping
 * algebra with bracket scaled by the formal variable t.  Inputs are Poly
 * in the coordinates xi_0..xi_{n-1} (arity n), optionally with t as an
 * extra last variable (arity n+1); the result always has arity n+1.
 * Exact: the t-expansion of a product of polynomials terminates.
 */
class GuttProduct {
public:
    explicit GuttProduct(LiePresentation h);

    Poly star(const Poly& f, const Poly& g);

    const LiePresentation& algebra() const { return h_; }

private:
    using Word = std::vector<int>;
    using UElem = std::map<ExpVec, Poly>;  // normal monomial -> coefficient in t

    UElem normalize(const Word& w);
    const UElem& symmetrized(const ExpVec& e);
    UElem to_enveloping(const Poly& f);
    Poly from_enveloping(UElem u);

    LiePresentation h_;
    std::map<Word, UElem> norm_cache_;
    std::map<ExpVec, UElem> sym_cache_;
};

/// Drop all terms of t-degree above `order` (t = last variable).
Poly truncate_t(const Poly& p, int order);

}  // namespace dyntwist
