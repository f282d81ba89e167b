#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpcensus/multigraph.hpp"
#include "fpcensus/perm4.hpp"

namespace fpc {

// Slot numbering. Face f of tetrahedron t is slot 4t + f (face f is opposite
// vertex f). Corner v of t is slot 4t + v. Edge e of t is slot 6t + e, with
// edges 01, 02, 03, 12, 13, 23 in that order, each oriented low to high.
inline constexpr int face_slot(int tet, int face) { return 4 * tet + face; }
inline constexpr int corner_slot(int tet, int vertex) { return 4 * tet + vertex; }
inline constexpr int edge_slot(int tet, int edge) { return 6 * tet + edge; }

inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline constexpr int edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    return a == 0 ? b - 1 : a + b;
}

struct SlotPair {
    int first;
    int second;
};

// Assignment of tetrahedron faces to the edges of a face pairing graph.
class FacePairing {
public:
    // `pairs` lists the 2n face-slot pairs in gluing order. Throws
    // ParameterError unless they partition the 4n slots.
    FacePairing(int n, std::vector<SlotPair> pairs);

    int size() const noexcept { return n_; }
    int partner(int slot) const { return partner_[slot]; }
    std::span<const SlotPair> pair_order() const noexcept { return pairs_; }

private:
    int n_;
    std::vector<int> partner_;
    std::vector<SlotPair> pairs_;
};

// Graph edges are taken in stored (sorted) order; each takes the lowest
// unused face at both endpoints. pair_order follows the edge order.
FacePairing realize_pairing(const Multigraph& g);

// The multigraph with one vertex per tetrahedron and one edge per pair.
Multigraph quotient(const FacePairing& pairing);

struct EdgeIdentification {
    int slot_a;
    int slot_b;
    bool reversed;
};

struct CornerIdentification {
    int slot_a;
    int slot_b;
    bool link_reversed;
};

// Identifications caused by gluing face slot `from` to face slot `to` via p,
// where p maps the vertices of tetrahedron from/4 to those of to/4.
// Throws ContractError unless p carries the face of `from` onto that of `to`.
std::array<EdgeIdentification, 3> induced_edge_identifications(int from, int to, Perm4 p);
std::array<CornerIdentification, 3> induced_vertex_identifications(int from, int to, Perm4 p);

std::array<EdgeIdentification, 3> induced_edge_identifications(const FacePairing& pairing, int pair, Perm4 p);
std::array<CornerIdentification, 3> induced_vertex_identifications(const FacePairing& pairing, int pair,
                                                                   Perm4 p);

// A (possibly partial) gluing of n tetrahedra.
class Triangulation {
public:
    explicit Triangulation(int n);

    int size() const noexcept { return n_; }

    bool glued(int slot) const { return partner_[slot] >= 0; }
    int partner(int slot) const { return partner_[slot]; }
    Perm4 gluing(int slot) const { return perm_[slot]; }

    // Glues face slot a to face slot b via p and b to a via p's inverse.
    // Throws ContractError if either slot is in use, a == b, or p does not
    // map face a to face b.
    void glue(int a, int b, Perm4 p);
    void unglue(int a);

    bool closed() const;

    bool operator==(const Triangulation&) const = default;

private:
    int n_;
    std::vector<int> partner_;
    std::vector<Perm4> perm_;
};

// Builds the triangulation with pair i of `pairing` glued by perms[i].
Triangulation assemble(const FacePairing& pairing, std::span<const Perm4> perms);

// Tetrahedron t becomes tet_perm[t]; vertex v of t becomes vertex_perms[t][v].
Triangulation relabel(const Triangulation& t, std::span<const int> tet_perm,
                      std::span<const Perm4> vertex_perms);

struct ClosedReport {
    bool is_3mfd = false;
    int vertices = 0;
    int edges = 0;
    bool orientable = false;
    bool edge_reversed = false;     // some edge identified with itself in reverse
    bool links_orientable = false;  // every vertex link admits an orientation
};

// Classes are rebuilt from scratch. Throws IncompleteError unless closed.
ClosedReport validate_closed(const Triangulation& t);

// Local properties every census triangulation must have.
struct CensusProperties {
    bool no_low_degree_edge = true;      // no edge of degree 1 or 2
    bool no_degree3_distinct = true;     // no degree-3 edge on three distinct tetrahedra
    bool no_cone_face = true;
    bool no_l31_face = true;

    bool all() const { return no_low_degree_edge && no_degree3_distinct && no_cone_face && no_l31_face; }
};

// Throws IncompleteError unless closed.
CensusProperties census_properties(const Triangulation& t);

// One-vertex, (n+1)-edge closed 3-manifold with all census properties.
bool satisfies_census(const Triangulation& t);

struct IsoSignature {
    std::vector<std::uint16_t> values;

    auto operator<=>(const IsoSignature&) const = default;
};

// Throws IncompleteError unless closed.
IsoSignature iso_signature(const Triangulation& t);

// Lowercase base 36: one digit for n, then two per face entry.
std::string render_signature(const IsoSignature& sig);
IsoSignature parse_signature(std::string_view text);

// Rebuilds a triangulation from its signature. Throws FormatError.
Triangulation decode_signature(const IsoSignature& sig);

// "n | u,g,p u,g,p u,g,p u,g,p | ..." with one block per tetrahedron and
// one entry per face: partner tetrahedron, partner face, permutation code.
std::string render_triangulation(const Triangulation& t);
Triangulation parse_triangulation(std::string_view line);

}  // namespace fpc
