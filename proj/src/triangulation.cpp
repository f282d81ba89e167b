#include "fpcensus/triangulation.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

#include "fpcensus/error.hpp"

namespace fpc {

FacePairing::FacePairing(int n, std::vector<SlotPair> pairs)
    : n_(n), partner_(4 * n, -1), pairs_(std::move(pairs)) {
    if (n < 1) throw ParameterError("face pairing needs at least one tetrahedron");
    if (static_cast<int>(pairs_.size()) != 2 * n)
        throw ParameterError("face pairing on " + std::to_string(n) + " tetrahedra needs " +
                             std::to_string(2 * n) + " pairs");
    for (const SlotPair& p : pairs_) {
        if (p.first < 0 || p.first >= 4 * n || p.second < 0 || p.second >= 4 * n || p.first == p.second)
            throw ParameterError("bad face pair");
        if (partner_[p.first] >= 0 || partner_[p.second] >= 0)
            throw ParameterError("face slot used twice");
        partner_[p.first] = p.second;
        partner_[p.second] = p.first;
    }
}

FacePairing realize_pairing(const Multigraph& g) {
    std::vector<int> next(g.order(), 0);
    std::vector<SlotPair> pairs;
    pairs.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        const int s1 = face_slot(e.a, next[e.a]++);
        const int s2 = face_slot(e.b, next[e.b]++);
        pairs.push_back({s1, s2});
    }
    return FacePairing(g.order(), std::move(pairs));
}

Multigraph quotient(const FacePairing& pairing) {
    std::vector<Edge> edges;
    for (const SlotPair& p : pairing.pair_order())
        edges.push_back({static_cast<std::uint8_t>(p.first / 4), static_cast<std::uint8_t>(p.second / 4)});
    return Multigraph(pairing.size(), std::move(edges));
}

namespace {

void require_face_map(int from, int to, Perm4 p) {
    if (p[from % 4] != to % 4)
        throw ContractError("permutation " + std::to_string(p.code()) + " does not carry face " +
                            std::to_string(from % 4) + " onto face " + std::to_string(to % 4));
}

// The three vertices other than v, ascending.
std::array<int, 3> others(int v) {
    std::array<int, 3> out{};
    int k = 0;
    for (int w = 0; w < 4; ++w)
        if (w != v) out[k++] = w;
    return out;
}

// Parity of the bijection others(v) -> others(p[v]) induced by p, with both
// sides read in ascending order.
bool induced_odd(Perm4 p, int v) {
    const std::array<int, 3> src = others(v);
    const std::array<int, 3> img{p[src[0]], p[src[1]], p[src[2]]};
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (img[i] > img[j]) ++inversions;
    return inversions % 2 == 1;
}

}  // namespace

std::array<EdgeIdentification, 3> induced_edge_identifications(int from, int to, Perm4 p) {
    require_face_map(from, to, p);
    const int t = from / 4, u = to / 4;
    const std::array<int, 3> face = others(from % 4);
    std::array<EdgeIdentification, 3> out{};
    int k = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const int a = face[i], b = face[j];
            out[k++] = {edge_slot(t, edge_index(a, b)), edge_slot(u, edge_index(p[a], p[b])), p[a] > p[b]};
        }
    return out;
}

std::array<CornerIdentification, 3> induced_vertex_identifications(int from, int to, Perm4 p) {
    require_face_map(from, to, p);
    const int t = from / 4, u = to / 4;
    const std::array<int, 3> face = others(from % 4);
    std::array<CornerIdentification, 3> out{};
    for (int i = 0; i < 3; ++i) {
        const int v = face[i];
        // Ascending order is taken as each link triangle's reference
        // orientation. An order-preserving match makes the two triangles run
        // along their shared arc in the same direction, so one must flip.
        out[i] = {corner_slot(t, v), corner_slot(u, p[v]), !induced_odd(p, v)};
    }
    return out;
}

std::array<EdgeIdentification, 3> induced_edge_identifications(const FacePairing& pairing, int pair, Perm4 p) {
    const SlotPair sp = pairing.pair_order()[pair];
    return induced_edge_identifications(sp.first, sp.second, p);
}

std::array<CornerIdentification, 3> induced_vertex_identifications(const FacePairing& pairing, int pair,
                                                                   Perm4 p) {
    const SlotPair sp = pairing.pair_order()[pair];
    return induced_vertex_identifications(sp.first, sp.second, p);
}

Triangulation::Triangulation(int n) : n_(n), partner_(4 * n, -1), perm_(4 * n) {
    if (n < 1) throw ParameterError("triangulation needs at least one tetrahedron");
}

void Triangulation::glue(int a, int b, Perm4 p) {
    if (a < 0 || b < 0 || a >= 4 * n_ || b >= 4 * n_ || a == b) throw ContractError("bad face slots");
    if (glued(a) || glued(b)) throw ContractError("face slot already glued");
    require_face_map(a, b, p);
    partner_[a] = b;
    partner_[b] = a;
    perm_[a] = p;
    perm_[b] = p.inverse();
}

void Triangulation::unglue(int a) {
    if (!glued(a)) throw ContractError("face slot is not glued");
    const int b = partner_[a];
    partner_[a] = partner_[b] = -1;
    perm_[a] = perm_[b] = Perm4();
}

bool Triangulation::closed() const {
    return std::all_of(partner_.begin(), partner_.end(), [](int p) { return p >= 0; });
}

Triangulation assemble(const FacePairing& pairing, std::span<const Perm4> perms) {
    if (perms.size() != pairing.pair_order().size()) throw ContractError("one permutation per pair expected");
    Triangulation t(pairing.size());
    for (std::size_t i = 0; i < perms.size(); ++i)
        t.glue(pairing.pair_order()[i].first, pairing.pair_order()[i].second, perms[i]);
    return t;
}

Triangulation relabel(const Triangulation& t, std::span<const int> tet_perm,
                      std::span<const Perm4> vertex_perms) {
    const int n = t.size();
    Triangulation out(n);
    for (int s = 0; s < 4 * n; ++s) {
        if (!t.glued(s)) continue;
        const int r = t.partner(s);
        if (r < s) continue;
        const int tt = s / 4, u = r / 4;
        const Perm4 st = vertex_perms[tt], su = vertex_perms[u];
        out.glue(face_slot(tet_perm[tt], st[s % 4]), face_slot(tet_perm[u], su[r % 4]),
                 su * t.gluing(s) * st.inverse());
    }
    return out;
}

namespace {

void require_closed(const Triangulation& t) {
    if (!t.closed()) throw IncompleteError("triangulation has unglued faces");
}

// Connected components of a graph whose links carry a parity bit, with each
// node's parity relative to its component root and a conflict flag per
// component.
struct ParityClasses {
    std::vector<int> component;
    std::vector<bool> parity;
    std::vector<bool> conflict;
    std::vector<std::vector<int>> members;

    ParityClasses(int count, const std::vector<std::array<int, 3>>& links) : component(count, -1), parity(count) {
        std::vector<std::vector<std::pair<int, bool>>> adj(count);
        for (const auto& [a, b, rev] : links) {
            adj[a].push_back({b, rev != 0});
            adj[b].push_back({a, rev != 0});
        }
        for (int s = 0; s < count; ++s) {
            if (component[s] >= 0) continue;
            const int c = static_cast<int>(members.size());
            members.emplace_back();
            conflict.push_back(false);
            std::deque<int> queue{s};
            component[s] = c;
            while (!queue.empty()) {
                const int x = queue.front();
                queue.pop_front();
                members[c].push_back(x);
                for (const auto& [y, rev] : adj[x]) {
                    const bool want = parity[x] ^ rev;
                    if (component[y] < 0) {
                        component[y] = c;
                        parity[y] = want;
                        queue.push_back(y);
                    } else if (parity[y] != want) {
                        conflict[c] = true;
                    }
                }
            }
        }
    }

    int count() const { return static_cast<int>(members.size()); }
};

ParityClasses edge_classes(const Triangulation& t) {
    std::vector<std::array<int, 3>> links;
    for (int s = 0; s < 4 * t.size(); ++s)
        if (t.glued(s) && s < t.partner(s))
            for (const EdgeIdentification& e : induced_edge_identifications(s, t.partner(s), t.gluing(s)))
                links.push_back({e.slot_a, e.slot_b, e.reversed});
    return ParityClasses(6 * t.size(), links);
}

ParityClasses vertex_classes(const Triangulation& t) {
    std::vector<std::array<int, 3>> links;
    for (int s = 0; s < 4 * t.size(); ++s)
        if (t.glued(s) && s < t.partner(s))
            for (const CornerIdentification& c : induced_vertex_identifications(s, t.partner(s), t.gluing(s)))
                links.push_back({c.slot_a, c.slot_b, c.link_reversed});
    return ParityClasses(4 * t.size(), links);
}

bool orientable(const Triangulation& t) {
    const int n = t.size();
    std::vector<int> sign(n, 0);
    for (int start = 0; start < n; ++start) {
        if (sign[start]) continue;
        sign[start] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int f = 0; f < 4; ++f) {
                const int s = face_slot(x, f);
                if (!t.glued(s)) continue;
                const int u = t.partner(s) / 4;
                // Consistent iff sign[x] * sign[u] * sign(p) == -1.
                const int want = -sign[x] * t.gluing(s).sign();
                if (!sign[u]) {
                    sign[u] = want;
                    queue.push_back(u);
                } else if (sign[u] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

ClosedReport validate_closed(const Triangulation& t) {
    require_closed(t);
    const ParityClasses edges = edge_classes(t);
    const ParityClasses verts = vertex_classes(t);
    ClosedReport r;
    r.edges = edges.count();
    r.vertices = verts.count();
    r.edge_reversed = std::find(edges.conflict.begin(), edges.conflict.end(), true) != edges.conflict.end();
    r.links_orientable = std::find(verts.conflict.begin(), verts.conflict.end(), true) == verts.conflict.end();
    r.is_3mfd = !r.edge_reversed && r.links_orientable && r.vertices - r.edges + t.size() == 0;
    r.orientable = orientable(t);
    return r;
}

CensusProperties census_properties(const Triangulation& t) {
    require_closed(t);
    const ParityClasses edges = edge_classes(t);
    CensusProperties props;
    for (const std::vector<int>& m : edges.members) {
        if (m.size() <= 2) props.no_low_degree_edge = false;
        if (m.size() == 3 && m[0] / 6 != m[1] / 6 && m[0] / 6 != m[2] / 6 && m[1] / 6 != m[2] / 6)
            props.no_degree3_distinct = false;
    }
    for (int tet = 0; tet < t.size(); ++tet)
        for (int f = 0; f < 4; ++f) {
            // Walking around face a < b < c as a->b->c->a, edge ac is the one
            // traversed against its low-to-high orientation.
            const std::array<int, 3> v = others(f);
            const std::array<int, 3> slot{edge_slot(tet, edge_index(v[0], v[1])),
                                          edge_slot(tet, edge_index(v[1], v[2])),
                                          edge_slot(tet, edge_index(v[0], v[2]))};
            std::array<bool, 3> dir{};
            for (int i = 0; i < 3; ++i) dir[i] = edges.parity[slot[i]] ^ (i == 2);
            const auto same = [&](int i, int j) { return edges.component[slot[i]] == edges.component[slot[j]]; };
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (same(i, j) && dir[i] != dir[j]) props.no_cone_face = false;
            if (same(0, 1) && same(1, 2) && dir[0] == dir[1] && dir[1] == dir[2]) props.no_l31_face = false;
        }
    return props;
}

bool satisfies_census(const Triangulation& t) {
    const ClosedReport r = validate_closed(t);
    return r.is_3mfd && r.vertices == 1 && r.edges == t.size() + 1 && census_properties(t).all();
}

IsoSignature iso_signature(const Triangulation& t) {
    require_closed(t);
    const int n = t.size();
    std::vector<std::uint16_t> best;
    std::vector<std::uint16_t> seq;
    std::vector<int> label(n);
    std::vector<int> order(n);
    std::vector<Perm4> relabel_of(n);
    for (int start = 0; start < n; ++start)
        for (int code = 0; code < 24; ++code) {
            std::fill(label.begin(), label.end(), -1);
            seq.assign(1, static_cast<std::uint16_t>(n));
            label[start] = 0;
            order[0] = start;
            relabel_of[start] = Perm4::from_code(code);
            int found = 1;
            bool worse = false;
            bool tied = !best.empty();
            for (int i = 0; i < found && !worse; ++i) {
                const int x = order[i];
                const Perm4 sx = relabel_of[x];
                const Perm4 sx_inv = sx.inverse();
                for (int face = 0; face < 4; ++face) {
                    const int s = face_slot(x, sx_inv[face]);
                    const int u = t.partner(s) / 4;
                    const Perm4 p = t.gluing(s);
                    std::uint16_t value;
                    if (label[u] < 0) {
                        // Label u so that this gluing reads as the identity.
                        label[u] = found;
                        order[found++] = u;
                        relabel_of[u] = sx * p.inverse();
                        value = 0;
                    } else {
                        value = static_cast<std::uint16_t>(1 + 24 * label[u] + (relabel_of[u] * p * sx_inv).code());
                    }
                    seq.push_back(value);
                    // Abandon this labeling once it is lexicographically worse.
                    if (tied) {
                        const std::size_t k = seq.size() - 1;
                        if (seq[k] > best[k]) {
                            worse = true;
                            break;
                        }
                        tied = seq[k] == best[k];
                    }
                }
            }
            if (worse) continue;
            if (found != n) throw ContractError("triangulation is not connected");
            if (best.empty() || seq < best) best = seq;
        }
    return IsoSignature{std::move(best)};
}

namespace {

constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

}  // namespace

std::string render_signature(const IsoSignature& sig) {
    std::string out;
    if (sig.values.empty()) return out;
    out += kDigits[sig.values[0]];
    for (std::size_t i = 1; i < sig.values.size(); ++i) {
        out += kDigits[sig.values[i] / 36];
        out += kDigits[sig.values[i] % 36];
    }
    return out;
}

IsoSignature parse_signature(std::string_view text) {
    if (text.empty() || text.size() % 2 != 1) throw FormatError("bad signature length");
    IsoSignature sig;
    for (std::size_t i = 0; i < text.size(); i += (i == 0 ? 1 : 2)) {
        const int hi = digit_value(text[i]);
        if (i == 0) {
            if (hi < 1) throw FormatError("bad signature character");
            sig.values.push_back(static_cast<std::uint16_t>(hi));
            continue;
        }
        const int lo = digit_value(text[i + 1]);
        if (hi < 0 || lo < 0) throw FormatError("bad signature character");
        sig.values.push_back(static_cast<std::uint16_t>(hi * 36 + lo));
    }
    if (sig.values.size() != 1 + 4 * static_cast<std::size_t>(sig.values[0]))
        throw FormatError("signature length does not match its tetrahedron count");
    return sig;
}

Triangulation decode_signature(const IsoSignature& sig) {
    if (sig.values.empty()) throw FormatError("empty signature");
    const int n = sig.values[0];
    if (n < 1 || sig.values.size() != 1 + 4 * static_cast<std::size_t>(n))
        throw FormatError("signature length does not match its tetrahedron count");
    Triangulation t(n);
    int found = 1;
    for (int i = 0; i < n; ++i) {
        if (i >= found) throw FormatError("signature is not connected");
        for (int face = 0; face < 4; ++face) {
            const int value = sig.values[1 + 4 * i + face];
            const int s = face_slot(i, face);
            if (value == 0) {
                if (found >= n || t.glued(s)) throw FormatError("bad new-tetrahedron entry");
                t.glue(s, face_slot(found++, face), Perm4());
                continue;
            }
            const int u = (value - 1) / 24;
            const Perm4 p = Perm4::from_code((value - 1) % 24);
            if (u >= found) throw FormatError("entry refers to an undiscovered tetrahedron");
            const int r = face_slot(u, p[face]);
            if (t.glued(s)) {
                if (t.partner(s) != r || t.gluing(s) != p) throw FormatError("inconsistent gluing entry");
                continue;
            }
            if (r == s || t.glued(r)) throw FormatError("inconsistent gluing entry");
            t.glue(s, r, p);
        }
    }
    if (found != n) throw FormatError("signature is not connected");
    return t;
}

std::string render_triangulation(const Triangulation& t) {
    std::string out = std::to_string(t.size());
    for (int tet = 0; tet < t.size(); ++tet) {
        out += " |";
        for (int f = 0; f < 4; ++f) {
            const int s = face_slot(tet, f);
            out += ' ';
            if (!t.glued(s)) {
                out += '-';
                continue;
            }
            out += std::to_string(t.partner(s) / 4) + "," + std::to_string(t.partner(s) % 4) + "," +
                   std::to_string(t.gluing(s).code());
        }
    }
    return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s) {
    s = trim(s);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw FormatError("expected an integer, got '" + std::string(s) + "'");
    return value;
}

}  // namespace

Triangulation parse_triangulation(std::string_view line) {
    const std::vector<std::string_view> blocks = split(line, '|');
    const int n = parse_int(blocks[0]);
    if (n < 1 || n > kMaxOrder) throw FormatError("tetrahedron count out of range");
    if (static_cast<int>(blocks.size()) != n + 1) throw FormatError("expected one block per tetrahedron");

    struct Entry {
        int partner = -1;
        Perm4 perm;
    };
    std::vector<Entry> entries(4 * n);
    for (int tet = 0; tet < n; ++tet) {
        std::vector<std::string_view> items;
        for (std::string_view item : split(trim(blocks[tet + 1]), ' '))
            if (!trim(item).empty()) items.push_back(trim(item));
        if (items.size() != 4) throw FormatError("tetrahedron " + std::to_string(tet) + " needs 4 entries");
        for (int f = 0; f < 4; ++f) {
            if (items[f] == "-") continue;
            const std::vector<std::string_view> parts = split(items[f], ',');
            if (parts.size() != 3) throw FormatError("entry must be u,g,p");
            const int u = parse_int(parts[0]), g = parse_int(parts[1]), code = parse_int(parts[2]);
            if (u < 0 || u >= n || g < 0 || g > 3 || code < 0 || code > 23)
                throw FormatError("entry out of range");
            const Perm4 p = Perm4::from_code(code);
            if (p[f] != g) throw FormatError("permutation does not carry the face onto its partner");
            entries[face_slot(tet, f)] = {face_slot(u, g), p};
        }
    }
    Triangulation t(n);
    for (int s = 0; s < 4 * n; ++s) {
        const Entry& e = entries[s];
        if (e.partner < 0) continue;
        const Entry& back = entries[e.partner];
        if (e.partner == s || back.partner != s || back.perm != e.perm.inverse())
            throw FormatError("gluings are not mutually inverse");
        if (s < e.partner) t.glue(s, e.partner, e.perm);
    }
    return t;
}

}  // namespace fpc
