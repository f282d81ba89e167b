#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fpc {

enum class LinkMode : std::uint8_t {
    edge,    // classes of tetrahedron edges; completion is a closing relationship
    vertex,  // classes of vertex-link triangles; completion is zero boundary
};

enum class UnionOutcome : std::uint8_t {
    merged,
    redundant_consistent,
    redundant_conflict,
};

// Union-find with height balancing and no path compression, so every
// relationship can be undone in O(1) in LIFO order. Each root carries the
// class size, the boundary-arc count of the partial vertex link (vertex mode)
// and a completion flag (edge mode). Each child stores whether it is
// identified with its parent orientation-reversingly.
class RollbackUnionFind {
public:
    struct Node {
        std::int32_t parent = -1;
        std::int32_t depth_bound = 1;
        std::int32_t size = 1;
        std::int32_t boundary = 0;
        bool parity_to_parent = false;
        bool complete = false;

        bool operator==(const Node&) const = default;
    };

    struct Found {
        int root;
        bool parity;  // orientation of the node relative to its root
    };

    // Throws ParameterError when count < 1.
    RollbackUnionFind(int count, LinkMode mode, int initial_boundary = 0);

    Found find(int x) const;

    // Adds the relationship x ~ y; `reversed` says the two objects are
    // identified orientation-reversingly. Every call pushes exactly one log
    // entry, including redundant and conflicting ones.
    UnionOutcome unite(int x, int y, bool reversed);

    // Reverts the most recent unite(). Throws ContractError on an empty log.
    void undo();

    // Root-only queries; throw ContractError on a non-root.
    int class_size(int root) const;
    int boundary_arcs(int root) const;
    bool is_complete(int root) const;

    int num_classes() const noexcept { return classes_; }
    int size() const noexcept { return static_cast<int>(nodes_.size()); }
    std::size_t log_size() const noexcept { return log_.size(); }
    LinkMode mode() const noexcept { return mode_; }
    const Node& node(int x) const { return nodes_[x]; }

    // Node table as TSV (id, parent, depth_bound, size, boundary, parity,
    // complete), for differential testing.
    std::string dump_tsv() const;

    bool operator==(const RollbackUnionFind& other) const {
        return mode_ == other.mode_ && classes_ == other.classes_ && nodes_ == other.nodes_;
    }

private:
    struct LogEntry {
        enum class Kind : std::uint8_t { merge, redundant } kind;
        bool flag_set;  // this entry set the root's completion flag
        std::int32_t node;  // merge: the child root; redundant: the root
        std::int32_t value;  // merge: parent's old depth bound; redundant: boundary delta
    };

    void require_root(int x) const;

    LinkMode mode_;
    int classes_;
    std::vector<Node> nodes_;
    std::vector<LogEntry> log_;
};

}  // namespace fpc
