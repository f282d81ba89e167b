#pragma once

// Slow reference implementations used to check the engine. They read
// triangulations only through Triangulation::partner/gluing and Perm4
// images, and rebuild everything else from first principles.

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "fpcensus/triangulation.hpp"

namespace oracle {

using Perm = std::array<int, 4>;

struct EdgeClass {
    int degree = 0;            // tetrahedron edges in the class
    bool reversed = false;     // identified with itself back to front
    int distinct_tets = 0;
};

struct VertexLink {
    int triangles = 0;
    int chi = 0;
    bool orientable = false;
    bool sphere() const { return orientable && chi == 2; }
};

struct Report {
    int vertices = 0;
    int edges = 0;
    std::vector<EdgeClass> edge_classes;
    std::vector<VertexLink> links;
    // vertex_of[4t+v]: link index of corner (t, v).
    std::vector<int> vertex_of;
    bool any_reversed = false;
    bool orientable = false;
    bool cone_face = false;
    bool l31_face = false;

    bool is_3mfd() const;
    bool census_local() const;  // degree, distinct tetrahedra, cone and L(3,1) rules
    bool census_valid(int n) const;
};

// Closed triangulations only.
Report analyze(const fpc::Triangulation& t);

// Builds the link of every vertex as an explicit triangle complex.
std::vector<VertexLink> link_surfaces(const fpc::Triangulation& t, std::vector<int>* vertex_of = nullptr);

// Orientability by orienting every face from its tetrahedron's sign.
bool orientable_by_faces(const fpc::Triangulation& t);

bool connected(const fpc::Triangulation& t);

// Combinatorial isomorphism, by trying every image of tetrahedron 0 and
// propagating through the gluings.
bool isomorphic(const fpc::Triangulation& a, const fpc::Triangulation& b);

// Every perfect matching of the 4n face slots whose quotient is connected.
std::vector<std::vector<std::array<int, 2>>> connected_matchings(int n);

// Calls `visit` on each of the 6^(2n) closed gluings of `matching`.
void for_each_gluing(int n, const std::vector<std::array<int, 2>>& matching,
                     const std::function<void(const fpc::Triangulation&)>& visit);

// Isomorphism classes of closed gluings accepted by `keep`, over all
// connected matchings of n tetrahedra.
std::vector<fpc::Triangulation> classes(int n, const std::function<bool(const fpc::Triangulation&)>& keep);

// Union-find reference: explicit labels and absolute parities rebuilt from
// the list of live relationships after every change.
class NaiveUnionFind {
public:
    NaiveUnionFind(int count, int initial_boundary) : count_(count), initial_boundary_(initial_boundary) {
        rebuild();
    }

    struct Outcome {
        bool merged;
        bool conflict;
    };

    Outcome unite(int x, int y, bool reversed);
    void undo();

    int label(int x) const { return label_[x]; }
    bool parity(int x) const { return parity_[x]; }
    int class_size(int x) const { return size_[label_[x]]; }
    int boundary(int x) const { return boundary_[label_[x]]; }
    bool complete(int x) const { return complete_[label_[x]]; }
    int classes() const { return classes_; }

private:
    struct Rel {
        int x, y;
        bool reversed;
        bool conflict;
        bool merged;
    };
    void rebuild();

    int count_;
    int initial_boundary_;
    std::vector<Rel> rels_;
    std::vector<int> label_, size_, boundary_;
    std::vector<bool> parity_, complete_;
    int classes_ = 0;
};

}  // namespace oracle
