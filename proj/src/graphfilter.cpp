#include "fpcensus/graphfilter.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace fpc {

std::vector<int> ChainSet::one_ended() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(chains.size()); ++i)
        if (chains[i].one_ended()) out.push_back(i);
    return out;
}

ChainSet find_chains(const Multigraph& g) {
    ChainSet set;
    const int n = g.order();
    for (int start = 0; start < n; ++start) {
        if (g.loops(start) == 0) continue;
        Chain chain;
        chain.vertices.push_back(start);
        if (g.loops(start) == 2) {
            // The single-vertex graph: two loops and nothing else.
            chain.capped_back = true;
            set.chains.push_back(std::move(chain));
            continue;
        }
        int prev = -1;
        int cur = start;
        while (true) {
            if (cur != start && g.loops(cur) == 1) {
                chain.capped_back = true;
                break;
            }
            // The two edge ends at `cur` not used by the chain so far.
            std::array<int, 2> free{-1, -1};
            int found = 0;
            for (int w = 0; w < n; ++w) {
                if (w == cur) continue;
                int m = g.multiplicity(cur, w) - (w == prev ? 2 : 0);
                while (m-- > 0 && found < 2) free[found++] = w;
            }
            if (free[0] == free[1]) {
                prev = cur;
                cur = free[0];
                chain.vertices.push_back(cur);
                continue;
            }
            chain.exits = free;
            break;
        }
        // A double-ended chain is discovered from both loops; keep one copy.
        if (chain.capped_back && chain.vertices.back() < start) continue;
        set.chains.push_back(std::move(chain));
    }
    return set;
}

namespace {

bool has_triple_edge(const Multigraph& g) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (g.multiplicity(a, b) >= 3) return true;
    return false;
}

std::pair<int, int> sorted_exits(const Chain& c) {
    return {std::min(c.exits[0], c.exits[1]), std::max(c.exits[0], c.exits[1])};
}

// Groups one-ended chains by the unordered pair of vertices their ends meet.
std::map<std::pair<int, int>, int> exit_pair_counts(const ChainSet& chains) {
    std::map<std::pair<int, int>, int> counts;
    for (int i : chains.one_ended()) ++counts[sorted_exits(chains.chains[i])];
    return counts;
}

}  // namespace

bool eliminated_by_old(const Multigraph& g, const ChainSet& chains) {
    if (has_triple_edge(g)) return true;
    const std::vector<int> ends = chains.one_ended();
    for (int i : ends) {
        const Chain& c = chains.chains[i];
        // Triangle: the chain end plus a double edge across its two exits.
        if (g.multiplicity(c.exits[0], c.exits[1]) >= 2) return true;
        // Two chain ends joined by a single edge.
        for (int j : ends)
            if (j != i && g.multiplicity(c.end(), chains.chains[j].end()) == 1) return true;
    }
    return false;
}

bool eliminated_by_straybigon(const Multigraph& g, const ChainSet& chains) {
    const int n = g.order();
    for (int i : chains.one_ended()) {
        const Chain& c = chains.chains[i];
        const int v1 = c.end();
        for (int side = 0; side < 2; ++side) {
            const int v2 = c.exits[side];
            const int v4 = c.exits[1 - side];
            for (int v3 = 0; v3 < n; ++v3) {
                if (v3 == v2 || v3 == v1 || g.multiplicity(v2, v3) < 2) continue;
                if (std::find(c.vertices.begin(), c.vertices.end(), v3) != c.vertices.end()) continue;
                const bool longer_chain = g.multiplicity(v1, v2) >= 2;
                const bool double_double = v4 != v3 && v4 != v2 && g.multiplicity(v3, v4) >= 2;
                const bool three_sticks = v4 != v3 && v4 != v2 && g.multiplicity(v4, v2) >= 1 &&
                                          g.multiplicity(v4, v3) >= 1;
                if (!longer_chain && !double_double && !three_sticks) return true;
            }
        }
    }
    return false;
}

bool eliminated_by_square(const Multigraph& g, const ChainSet& chains) {
    for (const auto& [uv, count] : exit_pair_counts(chains))
        if (count >= 2 && g.multiplicity(uv.first, uv.second) >= 1) return true;
    return false;
}

bool eliminated_by_mountains(const Multigraph&, const ChainSet& chains) {
    for (const auto& [uv, count] : exit_pair_counts(chains))
        if (count >= 3) return true;
    return false;
}

FilterVerdict filter_verdict(const Multigraph& g) {
    const ChainSet chains = find_chains(g);
    FilterVerdict v;
    v.eliminated_old = eliminated_by_old(g, chains);
    v.eliminated_straybigon = eliminated_by_straybigon(g, chains);
    v.eliminated_square = eliminated_by_square(g, chains);
    v.eliminated_mountains = eliminated_by_mountains(g, chains);
    v.kept = !v.eliminated_old && !v.eliminated_new();
    return v;
}

}  // namespace fpc
