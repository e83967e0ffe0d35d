#include "dyntwist/verma.hpp"

#include <algorithm>
#include <functional>

namespace dyntwist {

int word_depth(const Levi& levi, const Word& w) {
    const LieAlgebra& g = levi.algebra();
    int d = 0;
    for (int idx : w)
        if (!g.is_cartan(idx)) d += levi.excluded_height(g.is_raising(idx) ? idx : idx - g.num_positive());
    return d;
}

std::vector<Word> nilradical_words(const PbwOrder& ord, int max_depth) {
    const Levi& levi = ord.levi();
    std::vector<int> gens = levi.neg_nilradical();
    std::sort(gens.begin(), gens.end(), [&](int a, int b) { return ord.key(a) < ord.key(b); });
    std::vector<int> unit_depth;
    for (int idx : gens) unit_depth.push_back(word_depth(levi, {idx}));

    std::vector<Word> out;
    Word cur;
    // weakly increasing words in the global order, pruned by depth
    std::function<void(size_t, int)> gen = [&](size_t start, int depth) {
        out.push_back(cur);
        for (size_t p = start; p < gens.size(); ++p) {
            int nd = depth + unit_depth[p];
            if (nd > max_depth) continue;
            cur.push_back(gens[p]);
            gen(p, nd);
            cur.pop_back();
        }
    };
    gen(0, 0);
    return out;
}

}  // namespace dyntwist
