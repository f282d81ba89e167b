// Command-line driver. Talks to the engine only through fpcensus.h.

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <csignal>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fpcensus.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParameter = 2;
constexpr int kExitFormat = 3;
constexpr int kExitCheckpoint = 4;

constexpr int kPartitionDepth = 2;

struct ExitError : std::runtime_error {
    ExitError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
    int code;
};

int exit_code_for(fpc_status s) {
    switch (s) {
        case FPC_ERR_PARAMETER: return kExitParameter;
        case FPC_ERR_FORMAT: return kExitFormat;
        default: return kExitFailure;
    }
}

void check(fpc_status s) {
    if (s != FPC_OK) throw ExitError(exit_code_for(s), fpc_last_error());
}

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using GraphList = std::unique_ptr<fpc_graph_list, Deleter<fpc_graph_list, fpc_graphs_free>>;
using Pairing = std::unique_ptr<fpc_pairing, Deleter<fpc_pairing, fpc_pairing_free>>;
using Units = std::unique_ptr<fpc_unit_list, Deleter<fpc_unit_list, fpc_units_free>>;
using Result = std::unique_ptr<fpc_result, Deleter<fpc_result, fpc_result_free>>;

std::string take_string(char* s) {
    std::string out(s);
    fpc_string_free(s);
    return out;
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw ExitError(kExitFailure, "sha256 failed");
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += kHex[md[i] >> 4];
        out += kHex[md[i] & 15];
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ExitError(kExitFailure, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes to `path`, or stdout when it is empty or "-".
void write_output(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << body) || !out.flush()) throw ExitError(kExitFailure, "cannot write " + path);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

// Strips and checks the "count N" trailer of a line-oriented file; blank
// lines and '#' comments are skipped.
std::vector<std::string> body_with_count(const std::string& text, const std::string& what) {
    std::vector<std::string> rows;
    bool counted = false;
    for (const std::string& line : lines_of(text)) {
        if (line.empty() || line[0] == '#') continue;
        if (counted) throw ExitError(kExitFormat, what + ": content after count trailer");
        if (line.rfind("count ", 0) == 0) {
            std::size_t expected = 0;
            try {
                expected = std::stoul(line.substr(6));
            } catch (const std::exception&) {
                throw ExitError(kExitFormat, what + ": malformed count trailer");
            }
            if (expected != rows.size())
                throw ExitError(kExitFormat, what + ": count trailer does not match " + std::to_string(rows.size()) +
                                                 " rows");
            counted = true;
            continue;
        }
        rows.push_back(line);
    }
    if (!counted && !rows.empty()) throw ExitError(kExitFormat, what + ": missing count trailer");
    return rows;
}

std::string with_count(const std::vector<std::string>& rows) {
    std::string out;
    for (const std::string& r : rows) out += r + "\n";
    out += "count " + std::to_string(rows.size()) + "\n";
    return out;
}

GraphList load_graphs(const std::string& path) {
    const std::string text = read_file(path);
    fpc_graph_list* raw = nullptr;
    const fpc_status s = fpc_graphs_parse(text.data(), text.size(), &raw);
    if (s != FPC_OK) throw ExitError(exit_code_for(s), path + ": " + fpc_last_error());
    return GraphList(raw);
}

GraphList enumerate(int n) {
    fpc_graph_list* raw = nullptr;
    check(fpc_graphs_enumerate(n, &raw));
    return GraphList(raw);
}

std::vector<std::string> rendered(const fpc_graph_list* list) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < fpc_graphs_count(list); ++i) {
        char* s = nullptr;
        check(fpc_graph_render(list, i, &s));
        out.push_back(take_string(s));
    }
    return out;
}

// ---- graphs ---------------------------------------------------------------

int cmd_graphs(int n, const std::string& out_path) {
    GraphList list = enumerate(n);
    write_output(out_path, with_count(rendered(list.get())));
    return kExitOk;
}

// ---- filter ---------------------------------------------------------------

int cmd_filter(const std::string& in_path, const std::string& out_path, const std::string& report_path) {
    GraphList list = load_graphs(in_path);
    struct Row {
        int total = 0, old = 0, straybigon = 0, square = 0, mountains = 0, new_union = 0, all_union = 0, kept = 0;
    };
    std::map<int, Row> rows;
    std::vector<std::string> kept;
    const std::vector<std::string> lines = rendered(list.get());
    for (std::size_t i = 0; i < fpc_graphs_count(list.get()); ++i) {
        fpc_filter_verdict v{};
        check(fpc_graph_filter(list.get(), i, &v));
        Row& r = rows[fpc_graph_order(list.get(), i)];
        const bool any_new = v.straybigon || v.square || v.mountains;
        ++r.total;
        r.old += v.old;
        r.straybigon += v.straybigon;
        r.square += v.square;
        r.mountains += v.mountains;
        r.new_union += any_new;
        r.all_union += v.old || any_new;
        r.kept += v.kept;
        if (v.kept) kept.push_back(lines[i]);
    }
    std::string report = "n,total,old,straybigon,square,mountains,new_union,all_union,kept\n";
    for (const auto& [n, r] : rows) {
        std::ostringstream line;
        line << n << ',' << r.total << ',' << r.old << ',' << r.straybigon << ',' << r.square << ',' << r.mountains
             << ',' << r.new_union << ',' << r.all_union << ',' << r.kept << '\n';
        report += line.str();
    }
    if (!out_path.empty()) write_output(out_path, with_count(kept));
    write_output(report_path, report);
    return kExitOk;
}

// ---- census ---------------------------------------------------------------

struct CensusOptions {
    int n = 0;
    bool orientable = false;
    bool nonorientable = false;
    bool both = false;
    std::string track = "both";
    bool no_graph_filter = false;
    bool relaxed = false;
    std::string partition = "0/1";
    std::string checkpoint;
    int jobs = 1;
    std::string out = "-";
    std::string stats;
    std::string graphs;
    std::optional<std::uint64_t> seed_order;
    int stop_after = -1;
};

struct UnitRecord {
    int graph = -1;
    fpc_stats stats{};
    std::vector<std::string> signatures;
};

std::string stats_fields(const fpc_stats& s) {
    std::string out = std::to_string(s.nodes);
    for (int i = 0; i < FPC_PRUNE_REASONS; ++i) out += " " + std::to_string(s.prunes[i]);
    out += " " + std::to_string(s.leaves) + " " + std::to_string(s.survivors);
    return out;
}

void add_stats(fpc_stats& into, const fpc_stats& s) {
    into.nodes += s.nodes;
    for (int i = 0; i < FPC_PRUNE_REASONS; ++i) into.prunes[i] += s.prunes[i];
    into.leaves += s.leaves;
    into.survivors += s.survivors;
}

// "unit <index> <graph> <stats...> <sigs|-> <sha256 of everything before it>"
std::string unit_line(std::size_t index, const UnitRecord& r) {
    std::string body = "unit " + std::to_string(index) + " " + std::to_string(r.graph) + " " + stats_fields(r.stats) + " ";
    if (r.signatures.empty()) {
        body += "-";
    } else {
        for (std::size_t i = 0; i < r.signatures.size(); ++i) body += (i ? "," : "") + r.signatures[i];
    }
    return body + " " + sha256_hex(body);
}

std::pair<std::size_t, UnitRecord> parse_unit_line(const std::string& line) {
    const std::size_t cut = line.rfind(' ');
    if (cut == std::string::npos || line.substr(cut + 1) != sha256_hex(line.substr(0, cut)))
        throw ExitError(kExitCheckpoint, "checkpoint record fails its digest check");
    std::istringstream in(line.substr(0, cut));
    std::string tag, sigs;
    std::size_t index = 0;
    UnitRecord r;
    in >> tag >> index >> r.graph >> r.stats.nodes;
    for (int i = 0; i < FPC_PRUNE_REASONS; ++i) in >> r.stats.prunes[i];
    in >> r.stats.leaves >> r.stats.survivors >> sigs;
    if (!in || tag != "unit") throw ExitError(kExitCheckpoint, "malformed checkpoint record");
    if (sigs != "-") r.signatures = split(sigs, ',');
    return {index, r};
}

fpc_search_config make_config(const CensusOptions& o) {
    fpc_search_config cfg;
    fpc_search_config_default(&cfg);
    if (int(o.orientable) + int(o.nonorientable) + int(o.both) > 1)
        throw ExitError(kExitParameter, "choose at most one of --orientable, --non-orientable, --both");
    cfg.mode = o.orientable ? FPC_ORIENTABLE : o.nonorientable ? FPC_NONORIENTABLE : FPC_BOTH;
    cfg.track_vertex_links = o.track == "vertex" || o.track == "both";
    cfg.track_edge_links = o.track == "edge" || o.track == "both";
    cfg.relaxed = o.relaxed;
    const fpc_status s = fpc_check_config(o.n, &cfg);
    if (s != FPC_OK) throw ExitError(kExitParameter, fpc_last_error());
    return cfg;
}

std::pair<int, int> parse_partition(const std::string& spec) {
    const std::vector<std::string> parts = split(spec, '/');
    try {
        if (parts.size() == 2) {
            std::size_t used_i = 0, used_m = 0;
            const int i = std::stoi(parts[0], &used_i);
            const int m = std::stoi(parts[1], &used_m);
            if (used_i == parts[0].size() && used_m == parts[1].size() && m >= 1 && i >= 0 && i < m) return {i, m};
        }
    } catch (const std::exception&) {
    }
    throw ExitError(kExitParameter, "--partition expects i/m with 0 <= i < m");
}

std::string iso_now() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

class Checkpoint {
public:
    Checkpoint(std::string path, std::string header) : path_(std::move(path)), header_(std::move(header)) {}

    // Loads finished units. A trailing line without its newline is a torn
    // write and is dropped; anything else that does not verify is fatal.
    std::map<std::size_t, UnitRecord> load(std::size_t unit_count, int part, int parts) {
        std::map<std::size_t, UnitRecord> done;
        if (!std::filesystem::exists(path_)) {
            std::ofstream out(path_, std::ios::binary);
            out << header_ << "\n# started " << iso_now() << "\n";
            if (!out.flush()) throw ExitError(kExitFailure, "cannot write " + path_);
            return done;
        }
        std::string text = read_file(path_);
        const std::size_t complete = text.rfind('\n') == std::string::npos ? 0 : text.rfind('\n') + 1;
        if (complete != text.size()) {
            text.resize(complete);
            std::filesystem::resize_file(path_, complete);
        }
        const std::vector<std::string> lines = lines_of(text);
        if (lines.empty() || lines[0] != header_)
            throw ExitError(kExitCheckpoint, "checkpoint " + path_ + " belongs to a different run");
        for (std::size_t i = 1; i < lines.size(); ++i) {
            if (lines[i].empty() || lines[i][0] == '#') continue;
            auto [index, record] = parse_unit_line(lines[i]);
            if (index >= unit_count || static_cast<int>(index % parts) != part)
                throw ExitError(kExitCheckpoint, "checkpoint names a unit outside this partition");
            done[index] = std::move(record);
        }
        return done;
    }

    void append(const std::string& line) {
        std::ofstream out(path_, std::ios::binary | std::ios::app);
        out << line << "\n";
        if (!out.flush()) throw ExitError(kExitFailure, "cannot append to " + path_);
    }

    // Test hook: leave half a record behind, then die as if killed.
    [[noreturn]] void crash(const std::string& line) {
        {
            std::ofstream out(path_, std::ios::binary | std::ios::app);
            out << line.substr(0, line.size() / 2);
        }
        std::raise(SIGKILL);
        std::_Exit(137);
    }

private:
    std::string path_;
    std::string header_;
};

struct GraphWork {
    std::string code;
    Pairing pairing;
    Units units;
};

int cmd_census(const CensusOptions& o) {
    const fpc_search_config cfg = make_config(o);
    const auto [part, parts] = parse_partition(o.partition);
    if (o.jobs < 1) throw ExitError(kExitParameter, "--jobs must be at least 1");

    GraphList list = o.graphs.empty() ? enumerate(o.n) : load_graphs(o.graphs);
    const std::vector<std::string> graph_lines = rendered(list.get());
    std::string graph_text;
    for (std::size_t i = 0; i < graph_lines.size(); ++i) {
        if (fpc_graph_order(list.get(), i) != o.n)
            throw ExitError(kExitFormat, "graph " + std::to_string(i) + " does not have " + std::to_string(o.n) +
                                             " vertices");
        graph_text += graph_lines[i] + "\n";
    }

    // Global unit numbering: graphs in file order, units in search order.
    std::vector<GraphWork> work;
    std::vector<std::pair<int, std::size_t>> unit_of;  // global index -> (work slot, local unit)
    std::vector<int> graph_of_work;
    for (std::size_t g = 0; g < fpc_graphs_count(list.get()); ++g) {
        fpc_filter_verdict v{};
        check(fpc_graph_filter(list.get(), g, &v));
        if (!o.no_graph_filter && !v.kept) continue;
        GraphWork w;
        char* code = nullptr;
        check(fpc_graph_code(list.get(), g, &code));
        w.code = take_string(code);
        fpc_pairing* p = nullptr;
        check(fpc_pairing_from_graph(list.get(), g, &p));
        w.pairing.reset(p);
        fpc_unit_list* u = nullptr;
        check(fpc_partition(w.pairing.get(), &cfg, kPartitionDepth, &u));
        w.units.reset(u);
        for (std::size_t i = 0; i < fpc_units_count(w.units.get()); ++i)
            unit_of.push_back({static_cast<int>(work.size()), i});
        graph_of_work.push_back(static_cast<int>(g));
        work.push_back(std::move(w));
    }

    std::vector<std::size_t> mine;
    for (std::size_t i = 0; i < unit_of.size(); ++i)
        if (static_cast<int>(i % parts) == part) mine.push_back(i);

    std::map<std::size_t, UnitRecord> done;
    std::unique_ptr<Checkpoint> ckpt;
    if (!o.checkpoint.empty()) {
        std::ostringstream header;
        header << "fpcensus-checkpoint v1 tool=" << fpc_version() << " n=" << o.n << " mode=" << cfg.mode
               << " track=" << o.track << " filter=" << !o.no_graph_filter << " relaxed=" << o.relaxed
               << " partition=" << part << "/" << parts << " depth=" << kPartitionDepth
               << " units=" << unit_of.size() << " graphs=" << sha256_hex(graph_text);
        ckpt = std::make_unique<Checkpoint>(o.checkpoint, header.str());
        done = ckpt->load(unit_of.size(), part, parts);
    }

    std::vector<std::size_t> pending;
    for (std::size_t i : mine)
        if (!done.count(i)) pending.push_back(i);
    if (o.seed_order) std::shuffle(pending.begin(), pending.end(), std::mt19937_64(*o.seed_order));

    std::mutex mu;
    std::atomic<std::size_t> next{0};
    int finished_here = 0;
    std::string failure;
    int failure_code = kExitOk;
    const auto worker = [&] {
        while (true) {
            const std::size_t slot = next++;
            if (slot >= pending.size()) return;
            const std::size_t index = pending[slot];
            const auto [w, local] = unit_of[index];
            fpc_result* raw = nullptr;
            const fpc_status s = fpc_run_unit(work[w].pairing.get(), &cfg, work[w].units.get(), local, &raw);
            std::lock_guard<std::mutex> lock(mu);
            if (s != FPC_OK) {
                if (failure.empty()) {
                    failure = fpc_last_error();
                    failure_code = exit_code_for(s);
                }
                next = pending.size();
                return;
            }
            Result result(raw);
            UnitRecord r;
            r.graph = graph_of_work[w];
            fpc_result_stats(result.get(), &r.stats);
            for (std::size_t i = 0; i < fpc_result_signature_count(result.get()); ++i)
                r.signatures.emplace_back(fpc_result_signature(result.get(), i));
            const std::string line = unit_line(index, r);
            if (ckpt && o.stop_after >= 0 && finished_here == o.stop_after) ckpt->crash(line);
            if (ckpt) ckpt->append(line);
            done[index] = std::move(r);
            ++finished_here;
        }
    };
    std::vector<std::thread> threads;
    for (int j = 1; j < std::min<int>(o.jobs, static_cast<int>(pending.size())); ++j) threads.emplace_back(worker);
    worker();
    for (std::thread& t : threads) t.join();
    if (!failure.empty()) throw ExitError(failure_code, failure);

    std::set<std::string> signatures;
    std::map<int, fpc_stats> per_graph;
    fpc_stats total{};
    for (const auto& [index, r] : done) {
        signatures.insert(r.signatures.begin(), r.signatures.end());
        add_stats(per_graph[r.graph], r.stats);
        add_stats(total, r.stats);
    }
    write_output(o.out, with_count(std::vector<std::string>(signatures.begin(), signatures.end())));

    if (!o.stats.empty()) {
        std::string header = "graph\tnodes";
        for (int i = 0; i < FPC_PRUNE_REASONS; ++i) header += std::string("\t") + fpc_prune_reason_name(i);
        header += "\tleaves\tsurvivors";
        std::vector<std::string> rows{header};
        const auto row = [](const std::string& key, const fpc_stats& s) {
            std::string line = key + "\t" + stats_fields(s);
            std::replace(line.begin(), line.end(), ' ', '\t');
            return line;
        };
        for (std::size_t w = 0; w < work.size(); ++w) {
            const auto it = per_graph.find(graph_of_work[w]);
            if (it != per_graph.end()) rows.push_back(row(work[w].code, it->second));
        }
        rows.push_back(row("total", total));
        write_output(o.stats, with_count(rows));
    }
    return kExitOk;
}

// ---- stats ----------------------------------------------------------------

int cmd_stats(const std::vector<std::string>& paths, const std::string& out_path) {
    std::string header;
    std::vector<std::string> order;
    std::map<std::string, std::vector<std::uint64_t>> sums;
    for (const std::string& path : paths) {
        const std::vector<std::string> rows = body_with_count(read_file(path), path);
        if (rows.empty()) throw ExitError(kExitFormat, path + ": no header");
        if (header.empty()) header = rows[0];
        if (rows[0] != header) throw ExitError(kExitFormat, path + ": column schema differs from " + paths[0]);
        const std::size_t columns = split(header, '\t').size();
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const std::vector<std::string> cells = split(rows[i], '\t');
            if (cells.size() != columns) throw ExitError(kExitFormat, path + ": row has the wrong column count");
            if (cells[0] == "total") continue;
            auto [it, fresh] = sums.try_emplace(cells[0], columns - 1, 0);
            if (fresh) order.push_back(cells[0]);
            for (std::size_t c = 1; c < columns; ++c) {
                try {
                    it->second[c - 1] += std::stoull(cells[c]);
                } catch (const std::exception&) {
                    throw ExitError(kExitFormat, path + ": non-numeric cell '" + cells[c] + "'");
                }
            }
        }
    }
    if (header.empty()) throw ExitError(kExitFormat, "no stats rows");
    std::vector<std::string> rows{header};
    std::vector<std::uint64_t> total(split(header, '\t').size() - 1, 0);
    const auto render = [](const std::string& key, const std::vector<std::uint64_t>& v) {
        std::string line = key;
        for (std::uint64_t x : v) line += "\t" + std::to_string(x);
        return line;
    };
    for (const std::string& key : order) {
        rows.push_back(render(key, sums[key]));
        for (std::size_t c = 0; c < total.size(); ++c) total[c] += sums[key][c];
    }
    rows.push_back(render("total", total));
    write_output(out_path, with_count(rows));
    return kExitOk;
}

// ---- merge ----------------------------------------------------------------

int cmd_merge(const std::vector<std::string>& paths, const std::string& out_path) {
    std::set<std::string> all;
    for (const std::string& path : paths)
        for (const std::string& row : body_with_count(read_file(path), path)) all.insert(row);
    write_output(out_path, with_count(std::vector<std::string>(all.begin(), all.end())));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Census of closed 3-manifold triangulations by face pairing graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fpc_version()));

    int graphs_n = 0;
    std::string graphs_out = "-";
    auto* graphs = app.add_subcommand("graphs", "Enumerate connected 4-valent multigraphs on n vertices");
    graphs->add_option("n", graphs_n, "Number of vertices")->required();
    graphs->add_option("-o,--output", graphs_out, "Output file (default stdout)");

    std::string filter_in, filter_out, filter_report = "-";
    auto* filter = app.add_subcommand("filter", "Drop graphs that cannot be census face pairing graphs");
    filter->add_option("input", filter_in, "Graph file")->required();
    filter->add_option("-o,--output", filter_out, "Write kept graphs here");
    filter->add_option("-r,--report", filter_report, "CSV report (default stdout)");

    CensusOptions co;
    auto* census = app.add_subcommand("census", "Search face gluings and emit surviving triangulations");
    census->add_option("n", co.n, "Number of tetrahedra")->required();
    census->add_flag("--orientable", co.orientable, "Orientable triangulations only");
    census->add_flag("--non-orientable", co.nonorientable, "Non-orientable triangulations only");
    census->add_flag("--both", co.both, "Both orientabilities (default)");
    census->add_option("--track-links", co.track, "Link tracking: none, edge, vertex or both")
        ->check(CLI::IsMember({"none", "edge", "vertex", "both"}));
    census->add_flag("--no-graph-filter", co.no_graph_filter, "Search every graph, including eliminated ones");
    census->add_flag("--relaxed", co.relaxed, "Keep only closed 3-manifold validity rules");
    census->add_option("--partition", co.partition, "Run partition i of m (round-robin over work units)");
    census->add_option("--checkpoint", co.checkpoint, "Append-only completion log; resumes if present");
    census->add_option("-j,--jobs", co.jobs, "Worker threads");
    census->add_option("-o,--output", co.out, "Signature file (default stdout)");
    census->add_option("--stats", co.stats, "Per-graph statistics TSV");
    census->add_option("--graphs", co.graphs, "Read graphs from this file instead of enumerating");
    census->add_option("--seed-order", co.seed_order, "Shuffle unit processing order with this seed");
    census->add_option("--stop-after", co.stop_after, "Testing: die after this many units")->group("");

    std::vector<std::string> stats_in;
    std::string stats_out = "-";
    auto* stats = app.add_subcommand("stats", "Sum statistics files");
    stats->add_option("files", stats_in, "Statistics TSV files")->required();
    stats->add_option("-o,--output", stats_out, "Output file (default stdout)");

    std::vector<std::string> merge_in;
    std::string merge_out = "-";
    auto* merge = app.add_subcommand("merge", "Union signature files from several partitions");
    merge->add_option("files", merge_in, "Signature files")->required();
    merge->add_option("-o,--output", merge_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParameter;
    }

    try {
        if (*graphs) return cmd_graphs(graphs_n, graphs_out);
        if (*filter) return cmd_filter(filter_in, filter_out, filter_report);
        if (*census) return cmd_census(co);
        if (*stats) return cmd_stats(stats_in, stats_out);
        if (*merge) return cmd_merge(merge_in, merge_out);
    } catch (const ExitError& e) {
        std::cerr << "fpcensus: " << e.what() << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "fpcensus: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
