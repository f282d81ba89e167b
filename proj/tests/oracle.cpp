#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

namespace oracle {
namespace {

using fpc::Triangulation;

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

Perm images(fpc::Perm4 p) { return {p[0], p[1], p[2], p[3]}; }

Perm compose(const Perm& a, const Perm& b) { return {a[b[0]], a[b[1]], a[b[2]], a[b[3]]}; }

Perm invert(const Perm& a) {
    Perm r{};
    for (int i = 0; i < 4; ++i) r[a[i]] = i;
    return r;
}

std::vector<Perm> all_perms() {
    std::vector<Perm> out;
    Perm p{0, 1, 2, 3};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Sign of the sequence (x, y, z) relative to its sorted order.
int sequence_sign(int x, int y, int z) {
    int inv = (x > y) + (x > z) + (y > z);
    return inv % 2 ? -1 : 1;
}

std::array<int, 3> face_vertices(int f) {
    std::array<int, 3> out{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f) out[k++] = v;
    return out;
}

int directed(int t, int a, int b) { return 16 * t + 4 * a + b; }

}  // namespace

bool Report::is_3mfd() const {
    if (any_reversed) return false;
    return std::all_of(links.begin(), links.end(), [](const VertexLink& l) { return l.sphere(); });
}

bool Report::census_local() const {
    for (const EdgeClass& e : edge_classes) {
        if (e.degree <= 2) return false;
        if (e.degree == 3 && e.distinct_tets == 3) return false;
    }
    return !cone_face && !l31_face;
}

bool Report::census_valid(int n) const {
    return is_3mfd() && vertices == 1 && edges == n + 1 && census_local();
}

std::vector<VertexLink> link_surfaces(const Triangulation& t, std::vector<int>* vertex_of) {
    const int n = t.size();
    // Triangle (tet, v) has corners labelled by the three vertices w != v.
    Dsu tris(4 * n);
    Dsu corners(16 * n);
    struct Side {
        int other;
        int dir_product;  // dir_A(x->y) * dir_B(px->py)
    };
    std::vector<std::vector<Side>> sides(4 * n);
    auto cyc_dir = [](int v, int x, int y) {
        std::array<int, 3> w{};
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != v) w[k++] = i;
        for (int i = 0; i < 3; ++i)
            if (w[i] == x) return w[(i + 1) % 3] == y ? 1 : -1;
        return 0;
    };
    for (int tet = 0; tet < n; ++tet) {
        for (int f = 0; f < 4; ++f) {
            const int slot = 4 * tet + f;
            const int other = t.partner(slot);
            const int u = other / 4;
            const Perm p = images(t.gluing(slot));
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                const int a = 4 * tet + v, b = 4 * u + p[v];
                tris.unite(a, b);
                int x = -1, y = -1;
                for (int w = 0; w < 4; ++w) {
                    if (w == v || w == f) continue;
                    corners.unite(directed(tet, v, w), directed(u, p[v], p[w]));
                    (x < 0 ? x : y) = w;
                }
                sides[a].push_back({b, cyc_dir(v, x, y) * cyc_dir(p[v], p[x], p[y])});
            }
        }
    }
    std::map<int, int> index;
    std::vector<VertexLink> links;
    std::vector<int> owner(4 * n);
    for (int c = 0; c < 4 * n; ++c) {
        const int r = tris.find(c);
        auto [it, fresh] = index.try_emplace(r, static_cast<int>(links.size()));
        if (fresh) links.emplace_back();
        owner[c] = it->second;
        ++links[it->second].triangles;
    }
    std::vector<std::set<int>> link_vertices(links.size());
    for (int c = 0; c < 4 * n; ++c)
        for (int w = 0; w < 4; ++w)
            if (w != c % 4) link_vertices[owner[c]].insert(corners.find(directed(c / 4, c % 4, w)));
    std::vector<int> sign(4 * n, 0);
    for (std::size_t i = 0; i < links.size(); ++i) {
        VertexLink& l = links[i];
        const int F = l.triangles;
        l.chi = static_cast<int>(link_vertices[i].size()) - 3 * F / 2 + F;
        l.orientable = true;
    }
    for (int start = 0; start < 4 * n; ++start) {
        if (sign[start]) continue;
        sign[start] = 1;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            const int a = q.front();
            q.pop();
            for (const Side& s : sides[a]) {
                const int want = -sign[a] * s.dir_product;
                if (!sign[s.other]) {
                    sign[s.other] = want;
                    q.push(s.other);
                } else if (sign[s.other] != want) {
                    links[owner[a]].orientable = false;
                }
            }
        }
    }
    if (vertex_of) *vertex_of = owner;
    return links;
}

bool orientable_by_faces(const Triangulation& t) {
    const int n = t.size();
    std::vector<int> sign(n, 0);
    bool ok = true;
    for (int start = 0; start < n; ++start) {
        if (sign[start]) continue;
        sign[start] = 1;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            const int tet = q.front();
            q.pop();
            for (int f = 0; f < 4; ++f) {
                const int other = t.partner(4 * tet + f);
                const int u = other / 4, g = other % 4;
                const Perm p = images(t.gluing(4 * tet + f));
                const auto fv = face_vertices(f);
                const int s = sequence_sign(p[fv[0]], p[fv[1]], p[fv[2]]);
                const int fg = (f + g) % 2 ? -1 : 1;
                const int want = -sign[tet] * fg * s;
                if (!sign[u]) {
                    sign[u] = want;
                    q.push(u);
                } else if (sign[u] != want) {
                    ok = false;
                }
            }
        }
    }
    return ok;
}

bool connected(const Triangulation& t) {
    const int n = t.size();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int tet = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            if (!t.glued(4 * tet + f)) continue;
            const int u = t.partner(4 * tet + f) / 4;
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

Report analyze(const Triangulation& t) {
    const int n = t.size();
    Report r;
    Dsu dir(16 * n);
    for (int slot = 0; slot < 4 * n; ++slot) {
        const int tet = slot / 4, f = slot % 4;
        const int u = t.partner(slot) / 4;
        const Perm p = images(t.gluing(slot));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                if (a != b && a != f && b != f) dir.unite(directed(tet, a, b), directed(u, p[a], p[b]));
    }
    // Undirected class of a tetrahedron edge: the unordered pair of
    // components of its two directions.
    std::map<std::pair<int, int>, int> index;
    std::vector<std::set<int>> tets;
    for (int tet = 0; tet < n; ++tet) {
        for (int a = 0; a < 4; ++a) {
            for (int b = a + 1; b < 4; ++b) {
                int x = dir.find(directed(tet, a, b)), y = dir.find(directed(tet, b, a));
                if (x > y) std::swap(x, y);
                auto [it, fresh] = index.try_emplace({x, y}, static_cast<int>(r.edge_classes.size()));
                if (fresh) {
                    r.edge_classes.emplace_back();
                    tets.emplace_back();
                }
                EdgeClass& e = r.edge_classes[it->second];
                ++e.degree;
                e.reversed = x == y;
                tets[it->second].insert(tet);
            }
        }
    }
    for (std::size_t i = 0; i < r.edge_classes.size(); ++i) {
        r.edge_classes[i].distinct_tets = static_cast<int>(tets[i].size());
        r.any_reversed = r.any_reversed || r.edge_classes[i].reversed;
    }
    r.edges = static_cast<int>(r.edge_classes.size());
    r.links = link_surfaces(t, &r.vertex_of);
    r.vertices = static_cast<int>(r.links.size());
    r.orientable = orientable_by_faces(t);

    for (int tet = 0; tet < n; ++tet) {
        for (int f = 0; f < 4; ++f) {
            const auto v = face_vertices(f);
            // Boundary of the face read once around: a->b, b->c, c->a.
            const std::array<std::pair<int, int>, 3> cyc{{{v[0], v[1]}, {v[1], v[2]}, {v[2], v[0]}}};
            auto comp = [&](int a, int b) { return dir.find(directed(tet, a, b)); };
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (comp(cyc[i].first, cyc[i].second) == comp(cyc[j].second, cyc[j].first)) r.cone_face = true;
            const int c0 = comp(cyc[0].first, cyc[0].second);
            if (c0 == comp(cyc[1].first, cyc[1].second) && c0 == comp(cyc[2].first, cyc[2].second)) r.l31_face = true;
        }
    }
    return r;
}

bool isomorphic(const Triangulation& a, const Triangulation& b) {
    const int n = a.size();
    if (b.size() != n) return false;
    static const std::vector<Perm> perms = all_perms();
    for (int start = 0; start < n; ++start) {
        for (const Perm& first : perms) {
            std::vector<int> sigma(n, -1);
            std::vector<bool> used(n, false);
            std::vector<Perm> pi(n);
            sigma[0] = start;
            used[start] = true;
            pi[0] = first;
            std::queue<int> q;
            q.push(0);
            bool ok = true;
            while (ok && !q.empty()) {
                const int tet = q.front();
                q.pop();
                for (int f = 0; f < 4 && ok; ++f) {
                    const int slot = 4 * tet + f;
                    const int other = a.partner(slot);
                    const int u = other / 4, g = other % 4;
                    const Perm p = images(a.gluing(slot));
                    const int image_slot = 4 * sigma[tet] + pi[tet][f];
                    const int image_other = b.partner(image_slot);
                    const Perm qp = images(b.gluing(image_slot));
                    // pi_u must equal q o pi_t o p^-1.
                    const Perm want = compose(compose(qp, pi[tet]), invert(p));
                    if (sigma[u] < 0) {
                        const int su = image_other / 4;
                        if (used[su]) {
                            ok = false;
                            break;
                        }
                        sigma[u] = su;
                        used[su] = true;
                        pi[u] = want;
                        q.push(u);
                    }
                    if (image_other != 4 * sigma[u] + pi[u][g] || pi[u] != want) ok = false;
                }
            }
            if (ok) return true;
        }
    }
    return false;
}

std::vector<std::vector<std::array<int, 2>>> connected_matchings(int n) {
    std::vector<std::vector<std::array<int, 2>>> out;
    std::vector<std::array<int, 2>> cur;
    std::vector<bool> used(4 * n, false);
    std::function<void()> rec = [&] {
        int first = 0;
        while (first < 4 * n && used[first]) ++first;
        if (first == 4 * n) {
            Dsu d(n);
            for (const auto& pr : cur) d.unite(pr[0] / 4, pr[1] / 4);
            bool conn = true;
            for (int i = 1; i < n; ++i) conn = conn && d.find(i) == d.find(0);
            if (conn) out.push_back(cur);
            return;
        }
        used[first] = true;
        for (int s = first + 1; s < 4 * n; ++s) {
            if (used[s]) continue;
            used[s] = true;
            cur.push_back({first, s});
            rec();
            cur.pop_back();
            used[s] = false;
        }
        used[first] = false;
    };
    rec();
    return out;
}

void for_each_gluing(int n, const std::vector<std::array<int, 2>>& matching,
                     const std::function<void(const Triangulation&)>& visit) {
    static const std::vector<Perm> perms = all_perms();
    std::vector<std::vector<fpc::Perm4>> choices;
    for (const auto& pr : matching) {
        std::vector<fpc::Perm4> c;
        for (const Perm& p : perms)
            if (p[pr[0] % 4] == pr[1] % 4) c.push_back(fpc::Perm4::from_images(p[0], p[1], p[2], p[3]));
        choices.push_back(c);
    }
    std::vector<int> digit(matching.size(), 0);
    while (true) {
        Triangulation t(n);
        for (std::size_t i = 0; i < matching.size(); ++i) t.glue(matching[i][0], matching[i][1], choices[i][digit[i]]);
        visit(t);
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == 6) digit[i++] = 0;
        if (i == digit.size()) break;
    }
}

std::vector<Triangulation> classes(int n, const std::function<bool(const Triangulation&)>& keep) {
    std::vector<Triangulation> reps;
    std::vector<std::pair<int, int>> keys;
    for (const auto& m : connected_matchings(n)) {
        for_each_gluing(n, m, [&](const Triangulation& t) {
            if (!keep(t)) return;
            const Report r = analyze(t);
            const std::pair<int, int> key{r.vertices, r.edges};
            for (std::size_t i = 0; i < reps.size(); ++i)
                if (keys[i] == key && isomorphic(t, reps[i])) return;
            reps.push_back(t);
            keys.push_back(key);
        });
    }
    return reps;
}

NaiveUnionFind::Outcome NaiveUnionFind::unite(int x, int y, bool reversed) {
    Outcome o{label_[x] != label_[y], false};
    if (!o.merged) o.conflict = (parity_[x] != parity_[y]) != reversed;
    rels_.push_back({x, y, reversed, o.conflict, o.merged});
    rebuild();
    return o;
}

void NaiveUnionFind::undo() {
    rels_.pop_back();
    rebuild();
}

void NaiveUnionFind::rebuild() {
    label_.assign(count_, 0);
    parity_.assign(count_, false);
    std::iota(label_.begin(), label_.end(), 0);
    std::vector<int> rel_count(count_, 0);
    std::vector<bool> closed(count_, false);
    for (const Rel& r : rels_) {
        const int lx = label_[r.x], ly = label_[r.y];
        if (lx != ly) {
            // Relabel y's class into x's, flipping parities as needed.
            const bool flip = (parity_[r.x] != parity_[r.y]) != r.reversed;
            for (int i = 0; i < count_; ++i) {
                if (label_[i] != ly) continue;
                label_[i] = lx;
                if (flip) parity_[i] = !parity_[i];
            }
            rel_count[lx] += rel_count[ly] + 1;
            closed[lx] = closed[lx] || closed[ly];
        } else if (!r.conflict) {
            ++rel_count[lx];
            closed[lx] = true;
        }
    }
    size_.assign(count_, 0);
    boundary_.assign(count_, 0);
    complete_.assign(count_, false);
    classes_ = 0;
    for (int i = 0; i < count_; ++i) {
        if (label_[i] == i) ++classes_;
        ++size_[label_[i]];
    }
    for (int i = 0; i < count_; ++i) {
        if (label_[i] != i) continue;
        boundary_[i] = initial_boundary_ * size_[i] - 2 * rel_count[i];
        complete_[i] = closed[i];
    }
}

}  // namespace oracle
