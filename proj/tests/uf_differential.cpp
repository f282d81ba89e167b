#include "uf_differential.hpp"

#include <map>
#include <random>
#include <vector>

#include "fpcensus/rollback_ufind.hpp"
#include "oracle.hpp"

namespace {

using fpc::LinkMode;
using fpc::RollbackUnionFind;
using fpc::UnionOutcome;

int floor_log2(int x) {
    int r = 0;
    while (x >>= 1) ++r;
    return r;
}

bool agrees(const RollbackUnionFind& u, const oracle::NaiveUnionFind& o) {
    const int count = u.size();
    if (u.num_classes() != o.classes()) return false;
    std::map<int, int> root_of_label, label_of_root;
    std::map<int, int> anchor;  // naive label -> first member
    for (int x = 0; x < count; ++x) {
        const auto f = u.find(x);
        const int label = o.label(x);
        auto [a, fresh_a] = root_of_label.try_emplace(label, f.root);
        auto [b, fresh_b] = label_of_root.try_emplace(f.root, label);
        if (a->second != f.root || b->second != label) return false;
        auto [anc, fresh] = anchor.try_emplace(label, x);
        if (!fresh) {
            const bool lib = f.parity != u.find(anc->second).parity;
            const bool ref = o.parity(x) != o.parity(anc->second);
            if (lib != ref) return false;
        }
        if (u.class_size(f.root) != o.class_size(x)) return false;
        if (u.mode() == LinkMode::vertex && u.boundary_arcs(f.root) != o.boundary(x)) return false;
        if (u.mode() == LinkMode::edge && u.is_complete(f.root) != o.complete(x)) return false;
    }
    return true;
}

bool depth_law(const RollbackUnionFind& u) {
    for (int x = 0; x < u.size(); ++x) {
        int depth = 1, y = x;
        while (u.node(y).parent >= 0) {
            y = u.node(y).parent;
            ++depth;
        }
        const int size = u.node(y).size;
        if (depth > u.node(y).depth_bound || u.node(y).depth_bound > floor_log2(size) + 1) return false;
    }
    return true;
}

}  // namespace

DifferentialSummary run_uf_differential(long sequences, std::uint64_t seed) {
    DifferentialSummary s;
    std::mt19937_64 rng(seed);
    for (long seq = 0; seq < sequences; ++seq) {
        const int count = std::uniform_int_distribution<int>(1, 24)(rng);
        const LinkMode mode = rng() & 1 ? LinkMode::edge : LinkMode::vertex;
        const int initial = mode == LinkMode::vertex ? 3 : 0;
        RollbackUnionFind u(count, mode, initial);
        oracle::NaiveUnionFind o(count, initial);
        std::uniform_int_distribution<int> pick(0, count - 1);
        const int ops = std::uniform_int_distribution<int>(1, 60)(rng);
        bool ok = true;
        for (int op = 0; op < ops && ok; ++op) {
            if (u.log_size() > 0 && rng() % 10 < 3) {
                u.undo();
                o.undo();
            } else {
                const int x = pick(rng), y = pick(rng);
                const bool rev = rng() & 1;
                const UnionOutcome got = u.unite(x, y, rev);
                const auto want = o.unite(x, y, rev);
                const UnionOutcome expect = want.merged     ? UnionOutcome::merged
                                            : want.conflict ? UnionOutcome::redundant_conflict
                                                            : UnionOutcome::redundant_consistent;
                if (got != expect) ok = false;
            }
            ++s.steps;
            if (!agrees(u, o)) ok = false;
            if (!depth_law(u)) ++s.depth_violations;
        }
        if (!ok) ++s.mismatches;
        ++s.sequences;
    }
    return s;
}
