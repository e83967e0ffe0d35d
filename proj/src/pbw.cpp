#include "dyntwist/pbw.hpp"

#include <algorithm>

namespace dyntwist {

PbwOrder::PbwOrder(const Levi& levi) : levi_(&levi) {
    const LieAlgebra& g = levi.algebra();
    // Collect (block, -height or +height, lo) sort keys per basis index.
    struct K {
        int block, a, b, idx;
    };
    std::vector<K> ks;
    ks.reserve(static_cast<size_t>(g.dim()));
    for (int idx = 0; idx < g.dim(); ++idx) {
        if (g.is_cartan(idx)) {
            ks.push_back({2, idx, 0, idx});
            continue;
        }
        const PosRoot& r = g.root_of(idx);
        bool inl = levi.part(idx) == Levi::Part::LeviPart;
        if (g.is_lowering(idx))
            ks.push_back({inl ? 1 : 0, -r.height(), r.lo, idx});
        else
            ks.push_back({inl ? 3 : 4, r.height(), r.lo, idx});
    }
    std::sort(ks.begin(), ks.end(), [](const K& x, const K& y) {
        if (x.block != y.block) return x.block < y.block;
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.idx < y.idx;
    });
    key_.assign(static_cast<size_t>(g.dim()), 0);
    for (size_t pos = 0; pos < ks.size(); ++pos) key_[static_cast<size_t>(ks[pos].idx)] = static_cast<int>(pos);
}

}  // namespace dyntwist
