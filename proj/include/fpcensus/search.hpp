#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "fpcensus/graphfilter.hpp"
#include "fpcensus/multigraph.hpp"
#include "fpcensus/perm4.hpp"
#include "fpcensus/rollback_ufind.hpp"
#include "fpcensus/triangulation.hpp"

namespace fpc {

enum class OrientationMode : std::uint8_t { both, orientable, nonorientable };

struct SearchConfig {
    OrientationMode mode = OrientationMode::both;
    bool track_vertex_links = true;
    bool track_edge_links = true;
    // Census pruning (degree, cone and counting rules) and the final one-vertex,
    // (n+1)-edge requirement. Needs n >= 3.
    bool census_constraints = true;
    // Drops every rule that is specific to minimal triangulations, keeping
    // only closed 3-manifold validity. Overrides census_constraints.
    bool relaxed = false;

    bool census() const { return census_constraints && !relaxed; }
};

// Throws ParameterError if census rules are requested for n < 3.
void check_config(int n, const SearchConfig& cfg);

enum class PruneReason : std::uint8_t {
    edge_reversed,
    vertex_link_nonorientable,
    edge_degree_low,
    edge_degree3_distinct_tets,
    vertex_link_closed_early,
    face_cone,
    face_all_edges_identified,
    vertex_class_bound,
    edge_class_bound,
    orientation_parity,
};

inline constexpr int kPruneReasons = 10;

std::string_view prune_reason_name(PruneReason r);

struct SearchStats {
    std::uint64_t nodes = 0;
    std::array<std::uint64_t, kPruneReasons> prunes{};
    std::uint64_t leaves = 0;     // complete gluings reached
    std::uint64_t survivors = 0;  // complete gluings passing the final checks

    std::uint64_t prune_count(PruneReason r) const { return prunes[static_cast<int>(r)]; }
    SearchStats& operator+=(const SearchStats& o);
    bool operator==(const SearchStats&) const = default;
};

struct GlueOutcome {
    bool accepted;
    PruneReason reason;  // meaningful only when !accepted
};

// A partial gluing of a face pairing together with its live edge and vertex
// classes. Pairs are glued in pair_order; k() of them are glued.
class SearchState {
public:
    // Throws ParameterError per check_config.
    SearchState(const FacePairing& pairing, const SearchConfig& cfg);

    const FacePairing& pairing() const { return *pairing_; }
    const SearchConfig& config() const { return cfg_; }
    int n() const { return n_; }
    int k() const { return k_; }
    bool complete() const { return k_ == 2 * n_; }

    // Glues pair k() by perm, running the pruning tests; on a prune every
    // partial change is undone. Throws ContractError if k() == 2n or perm
    // does not map the pair's faces onto each other.
    GlueOutcome try_glue(Perm4 perm);

    // Undoes the latest accepted gluing. Throws ContractError if k() == 0.
    void unglue();

    // The six permutations carrying pair i's first face onto its second,
    // in increasing code order.
    const std::array<Perm4, 6>& candidates(int pair) const { return candidates_[pair]; }

    std::optional<Perm4> chosen(int pair) const;
    const Triangulation& triangulation() const { return tri_; }
    const RollbackUnionFind& edge_classes() const { return edge_uf_; }
    const RollbackUnionFind& vertex_classes() const { return vertex_uf_; }
    // +1 or -1 relative to the first tetrahedron of its glued component, in
    // orientable-only mode; 0 otherwise.
    int tet_sign(int tet) const;

    SearchStats& stats() { return stats_; }
    const SearchStats& stats() const { return stats_; }

    // Class counts of the current gluing: the live count when that link is
    // tracked, otherwise rebuilt from the chosen gluings.
    int edge_class_count() const;
    int vertex_class_count() const;

    // Compares everything except the statistics.
    bool same_state(const SearchState& other) const;

private:
    struct Undo {
        int choice = -1;
        bool glued = false;
        bool oriented = false;
        int edge_unions = 0;
        int vertex_unions = 0;
    };

    std::optional<PruneReason> apply(Perm4 perm, Undo& undo);
    void revert(const Undo& undo);
    std::optional<PruneReason> check_completed_edge(int slot) const;
    std::optional<PruneReason> check_local_edge(int slot) const;
    std::optional<PruneReason> scan_faces() const;

    // Walks the link of the edge at edge slot `slot` through glued faces.
    struct EdgeWalk {
        bool closed = false;
        bool reversed = false;
        int degree = 0;
        std::array<int, 3> tets{};  // first three tetrahedra met
    };
    EdgeWalk walk_edge(int slot, int max_steps) const;

    const FacePairing* pairing_;
    SearchConfig cfg_;
    int n_;
    int k_ = 0;
    Triangulation tri_;
    RollbackUnionFind edge_uf_;
    RollbackUnionFind vertex_uf_;
    // Tetrahedra related by "same sign" / "opposite sign" (orientable mode).
    RollbackUnionFind orient_uf_;
    std::vector<Undo> history_;
    std::vector<std::array<Perm4, 6>> candidates_;
    struct Induced {
        std::array<EdgeIdentification, 3> edges;
        std::array<CornerIdentification, 3> corners;
    };
    std::vector<std::array<Induced, 6>> induced_;  // per pair and candidate

    template <typename Pick>
    int rebuild_count(int size, Pick pick) const;
    SearchStats stats_;
};

struct PairingResult {
    std::set<IsoSignature> signatures;
    SearchStats stats;
};

// Runs the final checks on a complete gluing: closed 3-manifold, the
// orientation mode and, in census mode, one vertex, n + 1 edges and the
// local census properties.
bool accept_final(const Triangulation& t, const SearchConfig& cfg);

// Gluing-choice prefix: chosen permutation codes for pairs 0..depth-1.
struct WorkUnit {
    std::vector<std::uint8_t> prefix;

    auto operator<=>(const WorkUnit&) const = default;
};

PairingResult process_pairing(const FacePairing& pairing, const SearchConfig& cfg);

// All accepted prefixes of the given depth, in search order.
std::vector<WorkUnit> partition_work(const FacePairing& pairing, const SearchConfig& cfg, int depth);

// Searches below the unit's prefix. Nodes of the prefix itself are not
// counted. Throws ContractError if the prefix is not accepted.
PairingResult run_unit(const FacePairing& pairing, const SearchConfig& cfg, const WorkUnit& unit);

// Optional observer called at every complete gluing that survives.
using SurvivorHook = std::function<void(const Triangulation&)>;
PairingResult run_unit(const FacePairing& pairing, const SearchConfig& cfg, const WorkUnit& unit,
                       const SurvivorHook& hook);

struct GraphResult {
    Multigraph graph;
    FilterVerdict verdict;
    bool processed = false;
    PairingResult result;
};

struct CensusResult {
    std::vector<GraphResult> graphs;
    std::set<IsoSignature> signatures;
    SearchStats stats;
};

// Enumerates graphs, optionally drops those the graph filter eliminates, and
// searches every remaining pairing.
CensusResult run_census(int n, const SearchConfig& cfg, bool use_graph_filter);

}  // namespace fpc
