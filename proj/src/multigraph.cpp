#include "fpcensus/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "fpcensus/error.hpp"

namespace fpc {

namespace {

using Matrix = std::array<std::array<std::uint8_t, kMaxOrder>, kMaxOrder>;

std::string edge_text(const Edge& e) {
    return std::to_string(e.a) + "-" + std::to_string(e.b);
}

// Key of the row a vertex would produce if it were labeled 0: its loop
// entries (0), then its neighbour multiplicities in non-increasing order mapped
// to labels 1, 2, ...; a trailing sentinel makes a longer row compare smaller,
// matching the flat pair ordering where (0, x) < (1, y).
using RowKey = std::array<std::uint8_t, 5>;

RowKey row_key(const Matrix& mult, int n, int v) {
    std::array<int, 4> ms{};
    int count = 0;
    for (int w = 0; w < n; ++w)
        if (w != v && mult[v][w] > 0) ms[count++] = mult[v][w];
    std::sort(ms.begin(), ms.begin() + count, std::greater<>());
    RowKey key;
    key.fill(0xff);
    int pos = 0;
    for (int i = 0; i < mult[v][v]; ++i) key[pos++] = 0;
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < ms[i]; ++j) key[pos++] = static_cast<std::uint8_t>(i + 1);
    return key;
}

// Branch-and-bound over breadth-first labelings. Row r of the code holds the
// pairs (r, b), b >= r, and is fixed once every neighbour of the vertex
// labeled r has a label. The next label always goes to an unlabeled neighbour
// of the lowest unfinished row, preferring the largest multiplicity; any other
// choice yields a strictly larger code, so only ties are branched.
class CanonicalSearch {
public:
    CanonicalSearch(const Matrix& mult, int n) : mult_(mult), n_(n) {}

    // Least code over all labelings; `labeling` receives vertex -> label.
    std::vector<std::uint8_t> least(std::vector<int>* labeling) {
        stop_at_improvement_ = false;
        has_best_ = false;
        improved_ = false;
        run();
        if (labeling) *labeling = best_label_;
        return best_;
    }

    // True iff no labeling beats `code`.
    bool is_least(const std::vector<std::uint8_t>& code) {
        stop_at_improvement_ = true;
        has_best_ = true;
        best_ = code;
        improved_ = false;
        run();
        return !improved_;
    }

private:
    void run() {
        std::array<RowKey, kMaxOrder> keys;
        RowKey top;
        top.fill(0xff);
        for (int v = 0; v < n_; ++v) {
            keys[v] = row_key(mult_, n_, v);
            top = std::min(top, keys[v]);
        }
        label_.assign(n_, -1);
        order_.assign(n_, -1);
        code_.clear();
        code_.reserve(4 * n_);
        for (int s = 0; s < n_ && !improved_; ++s) {
            if (keys[s] != top) continue;
            label_[s] = 0;
            order_[0] = s;
            recurse(0, 1, has_best_ ? 0 : -1);
            label_[s] = -1;
        }
    }

    // cmp: 0 while the emitted prefix equals best_, -1 once strictly below.
    void recurse(int row, int labeled, int cmp) {
        if (improved_) return;
        if (row == n_) {
            if (cmp < 0 || !has_best_) {
                best_ = code_;
                has_best_ = true;
                best_label_ = label_;
                ++updates_;
            }
            return;
        }
        if (row == labeled) return;  // disconnected; cannot happen for valid input
        const int v = order_[row];
        int top = 0;
        for (int w = 0; w < n_; ++w)
            if (label_[w] < 0 && mult_[v][w] > top) top = mult_[v][w];
        if (top == 0) {
            const std::size_t mark = code_.size();
            int c = cmp;
            if (emit_row(row, labeled, c)) recurse(row + 1, labeled, c);
            code_.resize(mark);
            return;
        }
        for (int w = 0; w < n_ && !improved_; ++w) {
            if (label_[w] >= 0 || mult_[v][w] != top) continue;
            label_[w] = labeled;
            order_[labeled] = w;
            const long seen = updates_;
            recurse(row, labeled + 1, cmp);
            // A new best below here shares our prefix exactly.
            if (updates_ != seen) cmp = 0;
            label_[w] = -1;
        }
    }

    // Appends row `row`; returns false when the prefix exceeds best_.
    bool emit_row(int row, int labeled, int& cmp) {
        const int v = order_[row];
        auto push = [&](int b) {
            const std::uint8_t a8 = static_cast<std::uint8_t>(row);
            const std::uint8_t b8 = static_cast<std::uint8_t>(b);
            const std::size_t pos = code_.size();
            code_.push_back(a8);
            code_.push_back(b8);
            if (cmp != 0) return true;
            const int d = a8 != best_[pos] ? (a8 < best_[pos] ? -1 : 1)
                                            : (b8 != best_[pos + 1] ? (b8 < best_[pos + 1] ? -1 : 1) : 0);
            if (d > 0) return false;
            if (d < 0) {
                cmp = -1;
                if (stop_at_improvement_) improved_ = true;
            }
            return true;
        };
        for (int i = 0; i < mult_[v][v]; ++i)
            if (!push(row)) return false;
        for (int j = row + 1; j < labeled; ++j) {
            const int w = order_[j];
            for (int i = 0; i < mult_[v][w]; ++i)
                if (!push(j)) return false;
        }
        return !improved_;
    }

    const Matrix& mult_;
    int n_;
    bool stop_at_improvement_ = false;
    bool has_best_ = false;
    bool improved_ = false;
    long updates_ = 0;
    std::vector<std::uint8_t> best_;
    std::vector<int> best_label_;
    std::vector<std::uint8_t> code_;
    std::vector<int> label_;
    std::vector<int> order_;
};

Matrix matrix_of(const Multigraph& g) {
    Matrix m{};
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) m[a][b] = static_cast<std::uint8_t>(g.multiplicity(a, b));
    return m;
}

// Orderly generation. Rows are filled in breadth-first label order: loops,
// then edges to labeled-but-unprocessed vertices, then brand new vertices with
// non-increasing multiplicities (the shape every canonical labeling has).
// Completed labelings are kept only if they are their own canonical form.
class Generator {
public:
    explicit Generator(int n) : n_(n) {}

    std::vector<Multigraph> run() {
        resid_.fill(0);
        resid_[0] = 4;
        labeled_ = 1;
        row(0);
        return std::move(out_);
    }

private:
    void row(int r) {
        if (r == labeled_) {
            if (labeled_ == n_) finish();
            return;
        }
        const int free = resid_[r];
        for (int loops = free / 2; loops >= 0; --loops) {
            mult_[r][r] = static_cast<std::uint8_t>(loops);
            resid_[r] = free - 2 * loops;
            existing(r, r + 1);
        }
        mult_[r][r] = 0;
        resid_[r] = free;
    }

    void existing(int r, int b) {
        if (b == labeled_) {
            fresh(r, 4);
            return;
        }
        const int cap = std::min(resid_[r], resid_[b]);
        for (int c = cap; c >= 0; --c) {
            set_mult(r, b, c);
            resid_[r] -= c;
            resid_[b] -= c;
            existing(r, b + 1);
            resid_[r] += c;
            resid_[b] += c;
        }
        set_mult(r, b, 0);
    }

    void fresh(int r, int cap) {
        if (resid_[r] == 0) {
            finish_row(r);
            return;
        }
        if (labeled_ == n_) return;
        const int w = labeled_;
        for (int c = std::min(cap, resid_[r]); c >= 1; --c) {
            set_mult(r, w, c);
            resid_[r] -= c;
            resid_[w] = 4 - c;
            ++labeled_;
            fresh(r, c);
            --labeled_;
            resid_[w] = 0;
            resid_[r] += c;
        }
        set_mult(r, w, 0);
    }

    void finish_row(int r) {
        // Vertex r is now complete; no vertex may beat vertex 0's row.
        if (r == 0) {
            key0_ = row_key(mult_, n_, 0);
        } else if (row_key(mult_, n_, r) < key0_) {
            return;
        }
        row(r + 1);
    }

    void set_mult(int a, int b, int c) {
        mult_[a][b] = mult_[b][a] = static_cast<std::uint8_t>(c);
    }

    void finish() {
        std::vector<std::uint8_t> code;
        code.reserve(4 * n_);
        for (int a = 0; a < n_; ++a)
            for (int b = a; b < n_; ++b)
                for (int i = 0; i < mult_[a][b]; ++i) {
                    code.push_back(static_cast<std::uint8_t>(a));
                    code.push_back(static_cast<std::uint8_t>(b));
                }
        CanonicalSearch search(mult_, n_);
        if (!search.is_least(code)) return;
        std::vector<Edge> edges;
        edges.reserve(2 * n_);
        for (std::size_t i = 0; i < code.size(); i += 2) edges.push_back({code[i], code[i + 1]});
        out_.emplace_back(n_, std::move(edges));
    }

    int n_;
    Matrix mult_{};
    std::array<int, kMaxOrder> resid_{};
    int labeled_ = 0;
    RowKey key0_{};
    std::vector<Multigraph> out_;
};

}  // namespace

Multigraph::Multigraph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
    if (order < 1 || order > kMaxOrder)
        throw GraphDegreeError("graph order " + std::to_string(order) + " outside [1, " +
                               std::to_string(kMaxOrder) + "]");
    std::array<int, kMaxOrder> degree{};
    for (Edge& e : edges_) {
        if (e.a >= order || e.b >= order)
            throw GraphDegreeError("edge " + edge_text(e) + " names a vertex outside [0, " +
                                   std::to_string(order) + ")");
        if (e.a > e.b) std::swap(e.a, e.b);
        degree[e.a] += 1;
        degree[e.b] += 1;
        if (e.a == e.b) {
            ++mult_[e.a][e.a];
        } else {
            ++mult_[e.a][e.b];
            ++mult_[e.b][e.a];
        }
    }
    std::sort(edges_.begin(), edges_.end());
    for (int v = 0; v < order; ++v)
        if (degree[v] != 4)
            throw GraphDegreeError("vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]));
    if (static_cast<int>(edges_.size()) != 2 * order)
        throw GraphDegreeError("expected " + std::to_string(2 * order) + " edges");

    std::vector<int> stack{0};
    std::vector<bool> seen(order, false);
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < order; ++w)
            if (!seen[w] && mult_[v][w] > 0) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != order)
        throw GraphDisconnectedError("graph is disconnected: " + std::to_string(reached) + " of " +
                                     std::to_string(order) + " vertices reachable from 0");
}

Multigraph relabel(const Multigraph& g, std::span<const int> perm) {
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        edges.push_back({static_cast<std::uint8_t>(perm[e.a]), static_cast<std::uint8_t>(perm[e.b])});
    return Multigraph(g.order(), std::move(edges));
}

GraphCode canonical_code(const Multigraph& g) {
    const Matrix m = matrix_of(g);
    CanonicalSearch search(m, g.order());
    return GraphCode{g.order(), search.least(nullptr)};
}

Multigraph canonical_form(const Multigraph& g) {
    const Matrix m = matrix_of(g);
    CanonicalSearch search(m, g.order());
    std::vector<int> labeling;
    search.least(&labeling);
    return relabel(g, labeling);
}

std::vector<Multigraph> enumerate_graphs(int n) {
    if (n < 1 || n > kMaxOrder)
        throw ParameterError("tetrahedron count must lie in [1, " + std::to_string(kMaxOrder) + "], got " +
                             std::to_string(n));
    std::vector<Multigraph> graphs = Generator(n).run();
    std::sort(graphs.begin(), graphs.end(),
              [](const Multigraph& x, const Multigraph& y) {
                  return std::lexicographical_compare(x.edges().begin(), x.edges().end(), y.edges().begin(),
                                                      y.edges().end());
              });
    return graphs;
}

namespace {

int parse_int(std::string_view tok, std::string_view what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
        throw GraphSyntaxError("bad " + std::string(what) + " '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

Multigraph parse_graph(std::string_view line) {
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw GraphSyntaxError("missing ':' after vertex count");
    const auto head = split_ws(line.substr(0, colon));
    if (head.size() != 1) throw GraphSyntaxError("missing vertex count");
    const int n = parse_int(head[0], "vertex count");
    if (n < 1 || n > kMaxOrder)
        throw GraphSyntaxError("vertex count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxOrder) +
                               "]");
    std::vector<Edge> edges;
    for (std::string_view tok : split_ws(line.substr(colon + 1))) {
        const std::size_t dash = tok.find('-');
        if (dash == std::string_view::npos) throw GraphSyntaxError("edge '" + std::string(tok) + "' lacks '-'");
        const int a = parse_int(tok.substr(0, dash), "vertex");
        const int b = parse_int(tok.substr(dash + 1), "vertex");
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw GraphSyntaxError("edge '" + std::string(tok) + "' names a vertex outside [0, " +
                                   std::to_string(n) + ")");
        edges.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
    }
    if (static_cast<int>(edges.size()) != 2 * n)
        throw GraphDegreeError("expected " + std::to_string(2 * n) + " edges, found " +
                               std::to_string(edges.size()));
    return Multigraph(n, std::move(edges));
}

std::string render_graph(const Multigraph& g) {
    std::string out = std::to_string(g.order()) + ":";
    for (const Edge& e : g.edges()) {
        out += ' ';
        out += edge_text(e);
    }
    return out;
}

std::vector<Multigraph> parse_graph_list(std::string_view text) {
    std::vector<Multigraph> graphs;
    std::size_t line_no = 0;
    bool saw_count = false;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        const auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '#') continue;
        try {
            if (saw_count) throw GraphSyntaxError("content after count trailer");
            if (toks[0] == "count") {
                if (toks.size() != 2) throw GraphSyntaxError("malformed count trailer");
                const int count = parse_int(toks[1], "count");
                if (count != static_cast<int>(graphs.size()))
                    throw GraphSyntaxError("count trailer says " + std::to_string(count) + " but " +
                                           std::to_string(graphs.size()) + " graphs were read");
                saw_count = true;
                continue;
            }
            graphs.push_back(parse_graph(line));
        } catch (const MalformedGraphError& e) {
            const std::string msg = "line " + std::to_string(line_no) + ": " + e.what();
            switch (e.kind()) {
                case ErrorKind::degree: throw GraphDegreeError(msg);
                case ErrorKind::disconnected: throw GraphDisconnectedError(msg);
                default: throw GraphSyntaxError(msg);
            }
        }
    }
    return graphs;
}

}  // namespace fpc
