#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fpc {

// Largest vertex count (tetrahedron count) the engine supports.
inline constexpr int kMaxOrder = 13;

struct Edge {
    std::uint8_t a = 0;
    std::uint8_t b = 0;

    auto operator<=>(const Edge&) const = default;
};

// Relabeling-invariant code: the lexicographically least sorted edge list over
// all vertex relabelings, flattened as (a, b) byte pairs.
struct GraphCode {
    int order = 0;
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const GraphCode&) const = default;
};

// Connected 4-valent multigraph on order() vertices. A loop adds 2 to the
// degree of its vertex. Edges are stored normalized (a <= b) and sorted.
class Multigraph {
public:
    Multigraph() = default;

    // Validates degree and connectivity; throws GraphDegreeError or
    // GraphDisconnectedError (both MalformedGraphError).
    Multigraph(int order, std::vector<Edge> edges);

    int order() const noexcept { return order_; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    // Number of edges joining a and b; for a == b, the number of loops.
    int multiplicity(int a, int b) const { return mult_[a][b]; }
    int loops(int v) const { return mult_[v][v]; }

    bool operator==(const Multigraph& other) const {
        return order_ == other.order_ && edges_ == other.edges_;
    }

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::array<std::array<std::uint8_t, kMaxOrder>, kMaxOrder> mult_{};
};

// Image of g under vertex relabeling v -> perm[v].
Multigraph relabel(const Multigraph& g, std::span<const int> perm);

GraphCode canonical_code(const Multigraph& g);

// g relabeled into its canonical labeling; its edge list equals the code.
Multigraph canonical_form(const Multigraph& g);

// One representative per isomorphism class of connected 4-valent multigraphs
// on n vertices, each in canonical labeling, sorted by GraphCode.
// Throws ParameterError unless 1 <= n <= kMaxOrder.
std::vector<Multigraph> enumerate_graphs(int n);

// Text format: "<n>: <a>-<b> <a>-<b> ..." with exactly 2n edges.
Multigraph parse_graph(std::string_view line);
std::string render_graph(const Multigraph& g);

// Parses a whole file body; blank lines and '#' comments are skipped.
// Errors carry the 1-based line number in their message.
std::vector<Multigraph> parse_graph_list(std::string_view text);

}  // namespace fpc
