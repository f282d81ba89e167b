#include "fpcensus.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "fpcensus/error.hpp"
#include "fpcensus/graphfilter.hpp"
#include "fpcensus/multigraph.hpp"
#include "fpcensus/search.hpp"
#include "fpcensus/triangulation.hpp"

struct fpc_graph_list {
    std::vector<fpc::Multigraph> graphs;
};

struct fpc_pairing {
    fpc::FacePairing pairing;
};

struct fpc_unit_list {
    std::vector<fpc::WorkUnit> units;
};

struct fpc_result {
    std::vector<std::string> signatures;
    fpc::SearchStats stats;
};

namespace {

thread_local std::string last_error;

fpc_status fail(fpc_status status, const std::string& what) {
    last_error = what;
    return status;
}

template <typename F>
fpc_status guarded(F&& body) {
    try {
        body();
        last_error.clear();
        return FPC_OK;
    } catch (const fpc::CensusError& e) {
        switch (e.kind()) {
            case fpc::ErrorKind::parameter: return fail(FPC_ERR_PARAMETER, e.what());
            case fpc::ErrorKind::contract: return fail(FPC_ERR_CONTRACT, e.what());
            case fpc::ErrorKind::incomplete: return fail(FPC_ERR_INCOMPLETE, e.what());
            default: return fail(FPC_ERR_FORMAT, e.what());
        }
    } catch (const std::bad_alloc&) {
        return fail(FPC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(FPC_ERR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const fpc::Multigraph& graph_at(const fpc_graph_list* list, size_t index) {
    if (!list || index >= list->graphs.size()) throw fpc::ContractError("graph index out of range");
    return list->graphs[index];
}

fpc::SearchConfig to_config(const fpc_search_config* cfg) {
    if (!cfg) throw fpc::ContractError("null search config");
    if (cfg->mode < FPC_BOTH || cfg->mode > FPC_NONORIENTABLE) throw fpc::ParameterError("bad orientation mode");
    fpc::SearchConfig c;
    c.mode = static_cast<fpc::OrientationMode>(cfg->mode);
    c.track_vertex_links = cfg->track_vertex_links != 0;
    c.track_edge_links = cfg->track_edge_links != 0;
    c.census_constraints = cfg->census_constraints != 0;
    c.relaxed = cfg->relaxed != 0;
    return c;
}

fpc_result* to_result(const fpc::PairingResult& r) {
    auto* out = new fpc_result;
    out->stats = r.stats;
    out->signatures.reserve(r.signatures.size());
    for (const fpc::IsoSignature& s : r.signatures) out->signatures.push_back(fpc::render_signature(s));
    std::sort(out->signatures.begin(), out->signatures.end());
    return out;
}

template <typename T>
void require_out(T** out) {
    if (!out) throw fpc::ContractError("null output pointer");
}

}  // namespace

extern "C" {

const char* fpc_version(void) { return "1.0.0"; }

const char* fpc_last_error(void) { return last_error.c_str(); }

void fpc_string_free(char* s) { std::free(s); }

fpc_status fpc_graphs_enumerate(int n, fpc_graph_list** out) {
    return guarded([&] {
        require_out(out);
        *out = new fpc_graph_list{fpc::enumerate_graphs(n)};
    });
}

fpc_status fpc_graphs_parse(const char* text, size_t len, fpc_graph_list** out) {
    return guarded([&] {
        require_out(out);
        if (!text && len) throw fpc::ContractError("null text");
        *out = new fpc_graph_list{fpc::parse_graph_list(std::string_view(text ? text : "", len))};
    });
}

void fpc_graphs_free(fpc_graph_list* list) { delete list; }

size_t fpc_graphs_count(const fpc_graph_list* list) { return list ? list->graphs.size() : 0; }

int fpc_graph_order(const fpc_graph_list* list, size_t index) {
    if (!list || index >= list->graphs.size()) return -1;
    return list->graphs[index].order();
}

fpc_status fpc_graph_render(const fpc_graph_list* list, size_t index, char** out) {
    return guarded([&] {
        require_out(out);
        *out = copy_string(fpc::render_graph(graph_at(list, index)));
    });
}

fpc_status fpc_graph_code(const fpc_graph_list* list, size_t index, char** out) {
    return guarded([&] {
        require_out(out);
        const fpc::GraphCode code = fpc::canonical_code(graph_at(list, index));
        static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
        std::string s = std::to_string(code.order) + ":";
        for (const std::uint8_t b : code.bytes) s += kDigits[b];
        *out = copy_string(s);
    });
}

fpc_status fpc_graph_filter(const fpc_graph_list* list, size_t index, fpc_filter_verdict* out) {
    return guarded([&] {
        if (!out) throw fpc::ContractError("null output pointer");
        const fpc::FilterVerdict v = fpc::filter_verdict(graph_at(list, index));
        *out = {v.eliminated_old, v.eliminated_straybigon, v.eliminated_square, v.eliminated_mountains, v.kept};
    });
}

void fpc_search_config_default(fpc_search_config* cfg) {
    if (cfg) *cfg = {FPC_BOTH, 1, 1, 1, 0};
}

fpc_status fpc_check_config(int n, const fpc_search_config* cfg) {
    return guarded([&] { fpc::check_config(n, to_config(cfg)); });
}

fpc_status fpc_pairing_from_graph(const fpc_graph_list* list, size_t index, fpc_pairing** out) {
    return guarded([&] {
        require_out(out);
        *out = new fpc_pairing{fpc::realize_pairing(graph_at(list, index))};
    });
}

void fpc_pairing_free(fpc_pairing* pairing) { delete pairing; }

fpc_status fpc_partition(const fpc_pairing* pairing, const fpc_search_config* cfg, int depth,
                         fpc_unit_list** out) {
    return guarded([&] {
        require_out(out);
        if (!pairing) throw fpc::ContractError("null pairing");
        if (depth < 0) throw fpc::ParameterError("negative partition depth");
        depth = std::min(depth, 2 * pairing->pairing.size());
        *out = new fpc_unit_list{fpc::partition_work(pairing->pairing, to_config(cfg), depth)};
    });
}

void fpc_units_free(fpc_unit_list* units) { delete units; }

size_t fpc_units_count(const fpc_unit_list* units) { return units ? units->units.size() : 0; }

fpc_status fpc_run_unit(const fpc_pairing* pairing, const fpc_search_config* cfg, const fpc_unit_list* units,
                        size_t index, fpc_result** out) {
    return guarded([&] {
        require_out(out);
        if (!pairing || !units || index >= units->units.size()) throw fpc::ContractError("bad work unit");
        *out = to_result(fpc::run_unit(pairing->pairing, to_config(cfg), units->units[index]));
    });
}

fpc_status fpc_run_pairing(const fpc_pairing* pairing, const fpc_search_config* cfg, fpc_result** out) {
    return guarded([&] {
        require_out(out);
        if (!pairing) throw fpc::ContractError("null pairing");
        *out = to_result(fpc::process_pairing(pairing->pairing, to_config(cfg)));
    });
}

void fpc_result_free(fpc_result* result) { delete result; }

size_t fpc_result_signature_count(const fpc_result* result) { return result ? result->signatures.size() : 0; }

const char* fpc_result_signature(const fpc_result* result, size_t index) {
    if (!result || index >= result->signatures.size()) return nullptr;
    return result->signatures[index].c_str();
}

void fpc_result_stats(const fpc_result* result, fpc_stats* out) {
    if (!result || !out) return;
    out->nodes = result->stats.nodes;
    for (int i = 0; i < FPC_PRUNE_REASONS; ++i) out->prunes[i] = result->stats.prunes[i];
    out->leaves = result->stats.leaves;
    out->survivors = result->stats.survivors;
}

const char* fpc_prune_reason_name(int reason) {
    if (reason < 0 || reason >= FPC_PRUNE_REASONS) return nullptr;
    return fpc::prune_reason_name(static_cast<fpc::PruneReason>(reason)).data();
}

fpc_status fpc_signature_report(const char* signature, fpc_closed_report* out) {
    return guarded([&] {
        if (!signature || !out) throw fpc::ContractError("null argument");
        const fpc::ClosedReport r =
            fpc::validate_closed(fpc::decode_signature(fpc::parse_signature(signature)));
        *out = {r.is_3mfd, r.vertices, r.edges, r.orientable};
    });
}

fpc_status fpc_signature_census_ok(const char* signature, int* out) {
    return guarded([&] {
        if (!signature || !out) throw fpc::ContractError("null argument");
        *out = fpc::satisfies_census(fpc::decode_signature(fpc::parse_signature(signature)));
    });
}

}  // extern "C"
