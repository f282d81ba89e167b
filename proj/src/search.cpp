#include "fpcensus/search.hpp"

#include <algorithm>

#include "fpcensus/error.hpp"

namespace fpc {

void check_config(int n, const SearchConfig& cfg) {
    if (n < 1 || n > kMaxOrder)
        throw ParameterError("tetrahedron count must lie in [1, " + std::to_string(kMaxOrder) + "]");
    if (cfg.census() && n < 3)
        throw ParameterError("census constraints need at least 3 tetrahedra; use relaxed mode for n < 3");
}

std::string_view prune_reason_name(PruneReason r) {
    switch (r) {
        case PruneReason::edge_reversed: return "edge_reversed";
        case PruneReason::vertex_link_nonorientable: return "vertex_link_nonorientable";
        case PruneReason::edge_degree_low: return "edge_degree_low";
        case PruneReason::edge_degree3_distinct_tets: return "edge_degree3_distinct_tets";
        case PruneReason::vertex_link_closed_early: return "vertex_link_closed_early";
        case PruneReason::face_cone: return "face_cone";
        case PruneReason::face_all_edges_identified: return "face_all_edges_identified";
        case PruneReason::vertex_class_bound: return "vertex_class_bound";
        case PruneReason::edge_class_bound: return "edge_class_bound";
        case PruneReason::orientation_parity: return "orientation_parity";
    }
    return "unknown";
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    nodes += o.nodes;
    for (int i = 0; i < kPruneReasons; ++i) prunes[i] += o.prunes[i];
    leaves += o.leaves;
    survivors += o.survivors;
    return *this;
}

SearchState::SearchState(const FacePairing& pairing, const SearchConfig& cfg)
    : pairing_(&pairing),
      cfg_(cfg),
      n_(pairing.size()),
      tri_(pairing.size()),
      edge_uf_(6 * pairing.size(), LinkMode::edge),
      vertex_uf_(4 * pairing.size(), LinkMode::vertex, 3),
      orient_uf_(pairing.size(), LinkMode::edge) {
    check_config(n_, cfg_);
    history_.reserve(2 * n_);
    for (const SlotPair& sp : pairing.pair_order()) {
        std::array<Perm4, 6> c{};
        int found = 0;
        for (int code = 0; code < 24; ++code) {
            const Perm4 p = Perm4::from_code(code);
            if (p[sp.first % 4] == sp.second % 4) c[found++] = p;
        }
        candidates_.push_back(c);
        std::array<Induced, 6> ind{};
        for (int i = 0; i < 6; ++i)
            ind[i] = {induced_edge_identifications(sp.first, sp.second, c[i]),
                      induced_vertex_identifications(sp.first, sp.second, c[i])};
        induced_.push_back(ind);
    }
}

std::optional<Perm4> SearchState::chosen(int pair) const {
    if (pair < 0 || pair >= k_) return std::nullopt;
    return tri_.gluing(pairing_->pair_order()[pair].first);
}

int SearchState::tet_sign(int tet) const {
    if (cfg_.mode != OrientationMode::orientable) return 0;
    return orient_uf_.find(tet).parity ? -1 : 1;
}

GlueOutcome SearchState::try_glue(Perm4 perm) {
    if (complete()) throw ContractError("every pair is already glued");
    const SlotPair sp = pairing_->pair_order()[k_];
    if (perm[sp.first % 4] != sp.second % 4)
        throw ContractError("permutation does not carry the pair's first face onto its second");
    Undo undo;
    if (const auto reason = apply(perm, undo)) {
        revert(undo);
        ++stats_.prunes[static_cast<int>(*reason)];
        return {false, *reason};
    }
    history_.push_back(undo);
    ++k_;
    ++stats_.nodes;
    return {true, PruneReason::edge_reversed};
}

void SearchState::unglue() {
    if (k_ == 0) throw ContractError("nothing to unglue");
    --k_;
    revert(history_.back());
    history_.pop_back();
}

void SearchState::revert(const Undo& undo) {
    for (int i = 0; i < undo.vertex_unions; ++i) vertex_uf_.undo();
    for (int i = 0; i < undo.edge_unions; ++i) edge_uf_.undo();
    if (undo.oriented) orient_uf_.undo();
    if (undo.glued) tri_.unglue(pairing_->pair_order()[k_].first);
}

std::optional<PruneReason> SearchState::apply(Perm4 perm, Undo& undo) {
    const SlotPair sp = pairing_->pair_order()[k_];
    const bool census = cfg_.census();
    const std::array<Perm4, 6>& cands = candidates_[k_];
    undo.choice = static_cast<int>(std::find(cands.begin(), cands.end(), perm) - cands.begin());

    if (cfg_.mode == OrientationMode::orientable) {
        // Signs s_t, s_u must satisfy s_t * s_u * sign(perm) = -1: equal
        // signs need an odd gluing.
        undo.oriented = true;
        if (orient_uf_.unite(sp.first / 4, sp.second / 4, perm.even()) == UnionOutcome::redundant_conflict)
            return PruneReason::orientation_parity;
    }

    tri_.glue(sp.first, sp.second, perm);
    undo.glued = true;

    const auto& [edges, corners] = induced_[k_][undo.choice];

    if (cfg_.track_edge_links) {
        for (const EdgeIdentification& e : edges) {
            ++undo.edge_unions;
            if (edge_uf_.unite(e.slot_a, e.slot_b, e.reversed) == UnionOutcome::redundant_conflict)
                return PruneReason::edge_reversed;
        }
    }
    if (cfg_.track_vertex_links) {
        for (const CornerIdentification& c : corners) {
            ++undo.vertex_unions;
            if (vertex_uf_.unite(c.slot_a, c.slot_b, c.link_reversed) == UnionOutcome::redundant_conflict)
                return PruneReason::vertex_link_nonorientable;
        }
    }
    if (!census) return std::nullopt;

    for (const EdgeIdentification& e : edges) {
        const auto r = cfg_.track_edge_links ? check_completed_edge(e.slot_a) : check_local_edge(e.slot_a);
        if (r) return r;
    }

    const int k_after = k_ + 1;
    if (cfg_.track_vertex_links && k_after < 2 * n_) {
        for (const CornerIdentification& c : corners)
            if (vertex_uf_.boundary_arcs(vertex_uf_.find(c.slot_a).root) == 0)
                return PruneReason::vertex_link_closed_early;
    }

    if (cfg_.track_edge_links) {
        if (const auto r = scan_faces()) return r;
    }

    const int remaining = 2 * n_ - k_after;
    if (cfg_.track_vertex_links && vertex_uf_.num_classes() > 1 + 3 * remaining)
        return PruneReason::vertex_class_bound;
    if (cfg_.track_edge_links) {
        const int classes = edge_uf_.num_classes();
        // Each remaining gluing merges at most three classes, and merges never
        // split a class, so the window only narrows.
        if (classes > n_ + 1 + 3 * remaining || classes < n_ + 1) return PruneReason::edge_class_bound;
    }
    return std::nullopt;
}

SearchState::EdgeWalk SearchState::walk_edge(int slot, int max_steps) const {
    EdgeWalk walk;
    const int t0 = slot / 6;
    const int e0 = slot % 6;
    int tet = t0;
    int x = kEdgeVertices[e0][0], y = kEdgeVertices[e0][1];
    // The two faces containing edge xy are those opposite the other two
    // vertices; leave through `exit`, the other one is `other`.
    int exit = -1, other = -1;
    for (int w = 0; w < 4; ++w)
        if (w != x && w != y) (exit < 0 ? exit : other) = w;
    walk.tets[0] = t0;
    while (walk.degree < max_steps) {
        const int s = face_slot(tet, exit);
        if (!tri_.glued(s)) return walk;
        const Perm4 p = tri_.gluing(s);
        tet = tri_.partner(s) / 4;
        const int nx = p[x], ny = p[y];
        const int next_exit = p[other];
        other = p[exit];
        exit = next_exit;
        x = nx;
        y = ny;
        ++walk.degree;
        if (tet == t0 && edge_index(x, y) == e0) {
            walk.closed = true;
            walk.reversed = x > y;
            return walk;
        }
        if (walk.degree < 3) walk.tets[walk.degree] = tet;
    }
    return walk;
}

namespace {

bool distinct3(const std::array<int, 3>& t) { return t[0] != t[1] && t[0] != t[2] && t[1] != t[2]; }

}  // namespace

std::optional<PruneReason> SearchState::check_completed_edge(int slot) const {
    const int root = edge_uf_.find(slot).root;
    if (!edge_uf_.is_complete(root)) return std::nullopt;
    const int degree = edge_uf_.class_size(root);
    if (degree <= 2) return PruneReason::edge_degree_low;
    if (degree == 3 && distinct3(walk_edge(slot, 3).tets)) return PruneReason::edge_degree3_distinct_tets;
    return std::nullopt;
}

std::optional<PruneReason> SearchState::check_local_edge(int slot) const {
    const EdgeWalk walk = walk_edge(slot, 3);
    if (!walk.closed) return std::nullopt;
    if (walk.degree <= 2) return PruneReason::edge_degree_low;
    if (distinct3(walk.tets)) return PruneReason::edge_degree3_distinct_tets;
    return std::nullopt;
}

std::optional<PruneReason> SearchState::scan_faces() const {
    // Around face a < b < c read as a->b->c->a, edge ac runs against its
    // low-to-high orientation; `dir` is each edge's sense relative to its
    // class root when read this way.
    static constexpr std::array<std::array<int, 3>, 4> kFaceEdges{{
        {3, 5, 4},  // face 0: 12, 23, 13
        {1, 5, 2},  // face 1: 02, 23, 03
        {0, 4, 2},  // face 2: 01, 13, 03
        {0, 3, 1},  // face 3: 01, 12, 02
    }};
    for (int tet = 0; tet < n_; ++tet)
        for (int f = 0; f < 4; ++f) {
            std::array<int, 3> root{};
            std::array<bool, 3> dir{};
            for (int i = 0; i < 3; ++i) {
                const auto found = edge_uf_.find(edge_slot(tet, kFaceEdges[f][i]));
                root[i] = found.root;
                dir[i] = found.parity ^ (i == 2);
            }
            const bool s01 = root[0] == root[1], s12 = root[1] == root[2], s02 = root[0] == root[2];
            if ((s01 && dir[0] != dir[1]) || (s12 && dir[1] != dir[2]) || (s02 && dir[0] != dir[2]))
                return PruneReason::face_cone;
            if (s01 && s12) return PruneReason::face_all_edges_identified;
        }
    return std::nullopt;
}

template <typename Pick>
int SearchState::rebuild_count(int size, Pick pick) const {
    std::array<int, 6 * kMaxOrder> parent{};
    for (int i = 0; i < size; ++i) parent[i] = i;
    const auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int classes = size;
    for (int pair = 0; pair < k_; ++pair)
        for (const auto& id : pick(induced_[pair][history_[pair].choice])) {
            const int a = find(id.slot_a), b = find(id.slot_b);
            if (a != b) {
                parent[a] = b;
                --classes;
            }
        }
    return classes;
}

int SearchState::edge_class_count() const {
    if (cfg_.track_edge_links) return edge_uf_.num_classes();
    return rebuild_count(6 * n_, [](const Induced& ind) -> const auto& { return ind.edges; });
}

int SearchState::vertex_class_count() const {
    if (cfg_.track_vertex_links) return vertex_uf_.num_classes();
    return rebuild_count(4 * n_, [](const Induced& ind) -> const auto& { return ind.corners; });
}

bool SearchState::same_state(const SearchState& other) const {
    return pairing_ == other.pairing_ && k_ == other.k_ && tri_ == other.tri_ && edge_uf_ == other.edge_uf_ &&
           vertex_uf_ == other.vertex_uf_ && orient_uf_ == other.orient_uf_ &&
           edge_uf_.log_size() == other.edge_uf_.log_size() &&
           vertex_uf_.log_size() == other.vertex_uf_.log_size() &&
           orient_uf_.log_size() == other.orient_uf_.log_size() && history_.size() == other.history_.size();
}

bool accept_final(const Triangulation& t, const SearchConfig& cfg) {
    const ClosedReport r = validate_closed(t);
    if (!r.is_3mfd) return false;
    if (cfg.mode == OrientationMode::orientable && !r.orientable) return false;
    if (cfg.mode == OrientationMode::nonorientable && r.orientable) return false;
    if (!cfg.census()) return true;
    return r.vertices == 1 && r.edges == t.size() + 1 && census_properties(t).all();
}

namespace {

void search(SearchState& s, PairingResult& out, const SurvivorHook* hook) {
    if (s.complete()) {
        ++s.stats().leaves;
        // Cheap necessary conditions first; most complete gluings fail them.
        const int e = s.edge_class_count();
        if (s.config().census() && e != s.n() + 1) return;
        const int v = s.vertex_class_count();
        if (v - e + s.n() != 0) return;
        if (s.config().census() && v != 1) return;
        if (!accept_final(s.triangulation(), s.config())) return;
        ++s.stats().survivors;
        out.signatures.insert(iso_signature(s.triangulation()));
        if (hook && *hook) (*hook)(s.triangulation());
        return;
    }
    for (const Perm4 p : s.candidates(s.k())) {
        if (!s.try_glue(p).accepted) continue;
        search(s, out, hook);
        s.unglue();
    }
}

void collect(SearchState& s, int depth, WorkUnit& prefix, std::vector<WorkUnit>& out) {
    if (s.k() == depth) {
        out.push_back(prefix);
        return;
    }
    for (const Perm4 p : s.candidates(s.k())) {
        if (!s.try_glue(p).accepted) continue;
        prefix.prefix.push_back(static_cast<std::uint8_t>(p.code()));
        collect(s, depth, prefix, out);
        prefix.prefix.pop_back();
        s.unglue();
    }
}

}  // namespace

std::vector<WorkUnit> partition_work(const FacePairing& pairing, const SearchConfig& cfg, int depth) {
    if (depth < 0 || depth > 2 * pairing.size()) throw ParameterError("partition depth out of range");
    SearchState s(pairing, cfg);
    std::vector<WorkUnit> out;
    WorkUnit prefix;
    collect(s, depth, prefix, out);
    return out;
}

PairingResult run_unit(const FacePairing& pairing, const SearchConfig& cfg, const WorkUnit& unit,
                       const SurvivorHook& hook) {
    SearchState s(pairing, cfg);
    if (unit.prefix.size() > static_cast<std::size_t>(2 * pairing.size()))
        throw ContractError("work unit prefix is longer than the pairing");
    for (const std::uint8_t code : unit.prefix) {
        if (code >= 24 || !s.try_glue(Perm4::from_code(code)).accepted)
            throw ContractError("work unit prefix is not an accepted gluing sequence");
    }
    s.stats() = SearchStats{};
    PairingResult out;
    search(s, out, &hook);
    out.stats = s.stats();
    return out;
}

PairingResult run_unit(const FacePairing& pairing, const SearchConfig& cfg, const WorkUnit& unit) {
    return run_unit(pairing, cfg, unit, SurvivorHook{});
}

PairingResult process_pairing(const FacePairing& pairing, const SearchConfig& cfg) {
    return run_unit(pairing, cfg, WorkUnit{});
}

CensusResult run_census(int n, const SearchConfig& cfg, bool use_graph_filter) {
    check_config(n, cfg);
    CensusResult out;
    for (Multigraph& g : enumerate_graphs(n)) {
        GraphResult gr;
        gr.verdict = filter_verdict(g);
        gr.processed = !use_graph_filter || gr.verdict.kept;
        if (gr.processed) {
            gr.result = process_pairing(realize_pairing(g), cfg);
            out.signatures.insert(gr.result.signatures.begin(), gr.result.signatures.end());
            out.stats += gr.result.stats;
        }
        gr.graph = std::move(g);
        out.graphs.push_back(std::move(gr));
    }
    return out;
}

}  // namespace fpc
