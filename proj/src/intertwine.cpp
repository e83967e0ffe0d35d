#include "dyntwist/intertwine.hpp"

namespace dyntwist {

int hom_dimension(const PbwOrder& ord, const std::vector<Rational>& lambda, const std::vector<Rational>& mu,
                  const Rep& v, int depth) {
    const Levi& levi = ord.levi();
    const LieAlgebra& g = levi.algebra();
    InducingModule<Rational> x = scalar_inducing(levi, lambda);
    ParabolicVerma<Rational> verma(ord, x, depth, DepthPolicy::Strict);

    Vec<Rational> lam = character_eigen(levi, lambda);
    Vec<Rational> target = character_eigen(levi, mu);

    // unknowns: components (verma basis, V component) whose exact Cartan
    // eigenvalue matches the source character
    std::vector<std::pair<int, int>> unknowns;
    for (int i = 0; i < verma.dim(); ++i) {
        std::vector<int> off = verma.offset(i);
        for (int l = 0; l < v.dim; ++l) {
            bool match = true;
            for (int q = 0; q < g.rank(); ++q) {
                Rational eig = lam[static_cast<size_t>(q)] +
                               Rational(off[static_cast<size_t>(q)] + v.weights[static_cast<size_t>(l)][static_cast<size_t>(q)]);
                if (!(eig == target[static_cast<size_t>(q)])) {
                    match = false;
                    break;
                }
            }
            if (match) unknowns.emplace_back(i, l);
        }
    }
    if (unknowns.empty()) return 0;

    // the image must be annihilated by the excluded raising generators and by
    // the whole semisimple Levi (the source line is l0-trivial)
    std::vector<int> gens;
    for (int exc : levi.excluded()) gens.push_back(g.e_index(g.simple_root_index(exc)));
    for (int gidx : levi.l0_generators()) gens.push_back(gidx);

    const int mb = verma.dim() * v.dim;
    Matrix<Rational> sys(static_cast<int>(gens.size()) * mb, static_cast<int>(unknowns.size()));
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        const Matrix<Rational>& gm = verma.generator_matrix(gens[gi]);
        const Matrix<Rational>& bm = v.act(gens[gi]);
        for (size_t c = 0; c < unknowns.size(); ++c) {
            auto [vi, l] = unknowns[c];
            for (int r = 0; r < verma.dim(); ++r)
                if (!gm.at(r, vi).is_zero())
                    sys.at(static_cast<int>(gi) * mb + r * v.dim + l, static_cast<int>(c)) =
                        sys.at(static_cast<int>(gi) * mb + r * v.dim + l, static_cast<int>(c)) + gm.at(r, vi);
            for (int r = 0; r < v.dim; ++r)
                if (!bm.at(r, l).is_zero())
                    sys.at(static_cast<int>(gi) * mb + vi * v.dim + r, static_cast<int>(c)) =
                        sys.at(static_cast<int>(gi) * mb + vi * v.dim + r, static_cast<int>(c)) + bm.at(r, l);
        }
    }
    return static_cast<int>(kernel_basis(sys).size());
}

}  // namespace dyntwist
