#include "fpcensus/rollback_ufind.hpp"

#include <sstream>

#include "fpcensus/error.hpp"

namespace fpc {

RollbackUnionFind::RollbackUnionFind(int count, LinkMode mode, int initial_boundary)
    : mode_(mode), classes_(count) {
    if (count < 1) throw ParameterError("union-find needs at least one node");
    Node fresh;
    fresh.boundary = mode == LinkMode::vertex ? initial_boundary : 0;
    nodes_.assign(count, fresh);
    log_.reserve(count);
}

RollbackUnionFind::Found RollbackUnionFind::find(int x) const {
    bool parity = false;
    while (nodes_[x].parent >= 0) {
        parity ^= nodes_[x].parity_to_parent;
        x = nodes_[x].parent;
    }
    return {x, parity};
}

UnionOutcome RollbackUnionFind::unite(int x, int y, bool reversed) {
    const Found fx = find(x);
    const Found fy = find(y);
    if (fx.root == fy.root) {
        Node& root = nodes_[fx.root];
        if ((fx.parity ^ fy.parity) != reversed) {
            log_.push_back({LogEntry::Kind::redundant, false, fx.root, 0});
            return UnionOutcome::redundant_conflict;
        }
        int delta = 0;
        bool flag_set = false;
        if (mode_ == LinkMode::vertex) {
            delta = 2;
            root.boundary -= 2;
        } else if (!root.complete) {
            root.complete = true;
            flag_set = true;
        }
        log_.push_back({LogEntry::Kind::redundant, flag_set, fx.root, delta});
        return UnionOutcome::redundant_consistent;
    }

    // The shallower tree goes under the deeper one; on a tie y's root becomes
    // the child and x's root grows.
    int parent = fx.root;
    int child = fy.root;
    if (nodes_[fx.root].depth_bound < nodes_[fy.root].depth_bound) std::swap(parent, child);
    Node& p = nodes_[parent];
    Node& c = nodes_[child];
    const bool flag_set = c.complete && !p.complete;
    log_.push_back({LogEntry::Kind::merge, flag_set, child, p.depth_bound});
    p.complete = p.complete || c.complete;
    if (p.depth_bound == c.depth_bound) ++p.depth_bound;
    c.parent = parent;
    c.parity_to_parent = reversed ^ fx.parity ^ fy.parity;
    p.size += c.size;
    if (mode_ == LinkMode::vertex) p.boundary += c.boundary - 2;
    --classes_;
    return UnionOutcome::merged;
}

void RollbackUnionFind::undo() {
    if (log_.empty()) throw ContractError("undo on an empty union-find log");
    const LogEntry e = log_.back();
    log_.pop_back();
    if (e.kind == LogEntry::Kind::redundant) {
        Node& root = nodes_[e.node];
        root.boundary += e.value;
        if (e.flag_set) root.complete = false;
        return;
    }
    Node& c = nodes_[e.node];
    Node& p = nodes_[c.parent];
    p.depth_bound = e.value;
    p.size -= c.size;
    if (e.flag_set) p.complete = false;
    if (mode_ == LinkMode::vertex) p.boundary -= c.boundary - 2;
    c.parent = -1;
    c.parity_to_parent = false;
    ++classes_;
}

void RollbackUnionFind::require_root(int x) const {
    if (x < 0 || x >= size() || nodes_[x].parent >= 0)
        throw ContractError("node " + std::to_string(x) + " is not a class representative");
}

int RollbackUnionFind::class_size(int root) const {
    require_root(root);
    return nodes_[root].size;
}

int RollbackUnionFind::boundary_arcs(int root) const {
    require_root(root);
    return nodes_[root].boundary;
}

bool RollbackUnionFind::is_complete(int root) const {
    require_root(root);
    return mode_ == LinkMode::vertex ? nodes_[root].boundary == 0 : nodes_[root].complete;
}

std::string RollbackUnionFind::dump_tsv() const {
    std::ostringstream out;
    out << "id\tparent\tdepth_bound\tsize\tboundary\tparity\tcomplete\n";
    for (int i = 0; i < size(); ++i) {
        const Node& n = nodes_[i];
        out << i << '\t' << n.parent << '\t' << n.depth_bound << '\t' << n.size << '\t' << n.boundary << '\t'
            << n.parity_to_parent << '\t' << n.complete << '\n';
    }
    return out.str();
}

}  // namespace fpc
