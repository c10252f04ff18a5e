// The constructive correspondence between tree-rooted cubic maps (map +
// spanning tree + marked directed non-tree edge) and glued triangulated
// polygons with a marked side. Around every map vertex sits a triangle;
// triangle edges fuse across spanning-tree edges into the diagonals of a
// 2(n+1)-gon, the remaining triangle edges become polygon sides, and sides
// crossed by the same non-tree map edge are glued. Both directions are
// implemented, plus round-trip checking and a deterministic fuzz harness.
//
// Orientation conventions (these pin down the pictorial construction):
// polygon vertices/sides counterclockwise; triangle corners around a map
// vertex follow the vertex rotation; the walk that lays out the polygon
// boundary starts at the base dart and the marked side is always side 0.
#pragma once

#include "map.hpp"
#include "polygon.hpp"

#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubicmaps {

struct NotGenusZero : std::runtime_error {
    explicit NotGenusZero(const std::string& what) : std::runtime_error(what) {}
};
struct NotMaximal : std::runtime_error {
    explicit NotMaximal(const std::string& what) : std::runtime_error(what) {}
};
struct InvalidRoot : std::runtime_error {
    explicit InvalidRoot(const std::string& what) : std::runtime_error(what) {}
};

struct TreeRootedMap {
    CubicMap map;
    SpanningTree tree;
    std::optional<int> base; // dart on a non-tree edge, when present
};

// Edge identifier of a dart (the smaller dart of its edge).
inline int edge_id_of(const CubicMap& m, int d) {
    return std::min(d, m.alpha[static_cast<size_t>(d)]);
}

// Structural validation; throws std::invalid_argument for malformed trees
// and InvalidRoot when the base dart lies on a tree edge.
inline void validate_tree_rooted(const TreeRootedMap& r) {
    validate_cubic_map(r.map);
    const auto vid = vertex_ids(r.map);
    const int nv = r.map.vertex_count();
    if (static_cast<int>(r.tree.edges.size()) != nv - 1)
        throw std::invalid_argument("TreeRootedMap: tree has wrong edge count");
    std::vector<int> parent(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i)
        parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    std::set<int> seen;
    for (int e : r.tree.edges) {
        if (e < 0 || e >= r.map.darts || e != edge_id_of(r.map, e) || !seen.insert(e).second)
            throw std::invalid_argument("TreeRootedMap: bad tree edge id");
        int a = find(vid[static_cast<size_t>(e)]);
        int b = find(vid[static_cast<size_t>(r.map.alpha[static_cast<size_t>(e)])]);
        if (a == b)
            throw std::invalid_argument("TreeRootedMap: tree contains a cycle");
        parent[static_cast<size_t>(a)] = b;
    }
    if (r.base) {
        if (*r.base < 0 || *r.base >= r.map.darts)
            throw InvalidRoot("TreeRootedMap: base dart out of range");
        for (int e : r.tree.edges)
            if (e == edge_id_of(r.map, *r.base))
                throw InvalidRoot("TreeRootedMap: base dart lies on a tree edge");
    }
}

// --- forward direction ------------------------------------------------------

// Lays the map out as a marked glued polygon. The boundary walk starts at
// the base dart; from a non-tree dart d the next boundary dart is found by
// turning to sigma(d) and diving across tree edges (t -> sigma(alpha(t)))
// until a non-tree dart appears. Corners of the fused triangles are tracked
// as dart classes: crossing tree dart t merges the corner before t with the
// corner after alpha(t).
inline GluedPolygon to_polygon(const TreeRootedMap& r) {
    validate_tree_rooted(r);
    if (!r.base)
        throw InvalidRoot("to_polygon: base dart required");
    const CubicMap& m = r.map;
    std::vector<char> tree_dart(static_cast<size_t>(m.darts), 0);
    for (int e : r.tree.edges) {
        tree_dart[static_cast<size_t>(e)] = 1;
        tree_dart[static_cast<size_t>(m.alpha[static_cast<size_t>(e)])] = 1;
    }
    const int sides = 2 * (m.n() + 1);

    std::vector<int> walk;
    walk.reserve(static_cast<size_t>(sides));
    std::vector<int> side_of(static_cast<size_t>(m.darts), -1);
    int d = *r.base;
    do {
        if (side_of[static_cast<size_t>(d)] != -1 || static_cast<int>(walk.size()) >= sides)
            throw std::logic_error("to_polygon: boundary walk does not close properly");
        side_of[static_cast<size_t>(d)] = static_cast<int>(walk.size());
        walk.push_back(d);
        int c = m.sigma[static_cast<size_t>(d)];
        while (tree_dart[static_cast<size_t>(c)])
            c = m.sigma[static_cast<size_t>(m.alpha[static_cast<size_t>(c)])];
        d = c;
    } while (d != *r.base);
    if (static_cast<int>(walk.size()) != sides)
        throw std::logic_error("to_polygon: boundary walk misses non-tree darts");

    std::vector<int> partner(static_cast<size_t>(sides));
    for (int k = 0; k < sides; ++k)
        partner[static_cast<size_t>(k)] =
            side_of[static_cast<size_t>(m.alpha[static_cast<size_t>(walk[static_cast<size_t>(k)])])];

    // corner classes: corner(d) lies between darts d and sigma(d) at d's vertex
    std::vector<int> parent(static_cast<size_t>(m.darts));
    for (int i = 0; i < m.darts; ++i)
        parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    std::vector<int> sigma_inv(static_cast<size_t>(m.darts));
    for (int i = 0; i < m.darts; ++i)
        sigma_inv[static_cast<size_t>(m.sigma[static_cast<size_t>(i)])] = i;
    for (int t = 0; t < m.darts; ++t)
        if (tree_dart[static_cast<size_t>(t)])
            parent[static_cast<size_t>(find(sigma_inv[static_cast<size_t>(t)]))] =
                find(m.alpha[static_cast<size_t>(t)]);

    std::vector<int> vert_of(static_cast<size_t>(m.darts), -1);
    for (int k = 0; k < sides; ++k) {
        int root = find(walk[static_cast<size_t>(k)]);
        if (vert_of[static_cast<size_t>(root)] != -1)
            throw std::logic_error("to_polygon: corner classes collide");
        vert_of[static_cast<size_t>(root)] = (k + 1) % sides;
    }

    std::vector<std::pair<int, int>> diags;
    diags.reserve(r.tree.edges.size());
    for (int e : r.tree.edges) {
        int u = vert_of[static_cast<size_t>(find(sigma_inv[static_cast<size_t>(e)]))];
        int v = vert_of[static_cast<size_t>(find(e))];
        if (u < 0 || v < 0)
            throw std::logic_error("to_polygon: tree edge between unplaced corners");
        diags.emplace_back(u, v);
    }

    GluedPolygon out(Triangulation(sides, std::move(diags)),
                     SideGluing(sides, std::move(partner)), 0);
    if (gluing_genus(out.glue) != 0)
        throw std::logic_error("to_polygon: produced a gluing of nonzero genus");
    return out;
}

// --- reverse direction ------------------------------------------------------

namespace detail {

// Triangles of a maximal triangulation, by recursive apex search from the
// closing side (0, k-1); deterministic order. Vertices of each triangle are
// returned in increasing (= counterclockwise) order.
inline std::vector<std::array<int, 3>> triangle_list(const Triangulation& t) {
    const int k = t.sides;
    std::set<std::pair<int, int>> diag(t.diagonals.begin(), t.diagonals.end());
    auto has_edge = [&](int a, int b) {
        if (b - a == 1 || (a == 0 && b == k - 1))
            return true;
        return diag.contains({a, b});
    };
    std::vector<std::array<int, 3>> tris;
    auto rec = [&](auto&& self, int i, int j) -> void {
        int apex = -1;
        for (int x = i + 1; x < j; ++x)
            if (has_edge(i, x) && has_edge(x, j)) {
                apex = x;
                break;
            }
        if (apex == -1)
            throw NotMaximal("triangle_list: interval (" + std::to_string(i) + "," +
                             std::to_string(j) + ") has no apex");
        tris.push_back({i, apex, j});
        if (apex - i >= 2)
            self(self, i, apex);
        if (j - apex >= 2)
            self(self, apex, j);
    };
    if (k >= 3)
        rec(rec, 0, k - 1);
    return tris;
}

} // namespace detail

// Rebuilds the tree-rooted map from a marked glued polygon: one map vertex
// per triangle, a tree edge per diagonal, a non-tree edge per glued side
// pair; the base dart crosses the marked side.
inline TreeRootedMap from_polygon(const GluedPolygon& p) {
    const int k = p.tri.sides;
    if (!p.marked_side)
        throw InvalidRoot("from_polygon: marked side required");
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("from_polygon: need an even polygon with at least 4 sides");
    if (static_cast<int>(p.tri.diagonals.size()) != k - 3)
        throw NotMaximal("from_polygon: triangulation is not maximal");
    if (gluing_genus(p.glue) != 0)
        throw NotGenusZero("from_polygon: gluing genus is " +
                           std::to_string(gluing_genus(p.glue)));

    const auto tris = detail::triangle_list(p.tri);
    const int darts = 3 * (k - 2);
    // dart 3*tau+e is the e-th counterclockwise directed side of triangle tau
    std::map<std::pair<int, int>, int> dart_of; // directed side (from,to) -> dart
    for (size_t tau = 0; tau < tris.size(); ++tau) {
        const auto& tr = tris[tau];
        for (int e = 0; e < 3; ++e) {
            auto key = std::make_pair(tr[static_cast<size_t>(e)], tr[static_cast<size_t>((e + 1) % 3)]);
            if (!dart_of.emplace(key, static_cast<int>(3 * tau) + e).second)
                throw std::logic_error("from_polygon: duplicate directed side");
        }
    }

    CubicMap m;
    m.darts = darts;
    m.sigma = template_sigma(darts);
    m.alpha.assign(static_cast<size_t>(darts), -1);
    std::vector<int> tree_edges;
    for (auto [a, b] : p.tri.diagonals) {
        int d1 = dart_of.at({a, b});
        int d2 = dart_of.at({b, a});
        m.alpha[static_cast<size_t>(d1)] = d2;
        m.alpha[static_cast<size_t>(d2)] = d1;
        tree_edges.push_back(std::min(d1, d2));
    }
    // polygon side s runs from vertex s to s+1 counterclockwise
    auto side_dart = [&](int s) { return dart_of.at({s, (s + 1) % k}); };
    for (int s = 0; s < k; ++s) {
        int t = p.glue.partner[static_cast<size_t>(s)];
        int d1 = side_dart(s);
        int d2 = side_dart(t);
        m.alpha[static_cast<size_t>(d1)] = d2;
        m.alpha[static_cast<size_t>(d2)] = d1;
    }
    validate_cubic_map(m);
    if (genus(m) != 0)
        throw std::logic_error("from_polygon: reconstructed map has nonzero genus");

    std::sort(tree_edges.begin(), tree_edges.end());
    TreeRootedMap r{std::move(m), SpanningTree{std::move(tree_edges)},
                    side_dart(*p.marked_side)};
    validate_tree_rooted(r);
    return r;
}

// Lenient entry point used by parsers and tests: checks maximality itself so
// short diagonal lists surface as NotMaximal rather than a type error.
inline TreeRootedMap from_polygon_parts(int k, std::vector<std::pair<int, int>> diags,
                                        const std::vector<std::pair<int, int>>& glue_pairs,
                                        std::optional<int> mark) {
    if (static_cast<int>(diags.size()) != std::max(k - 3, 0))
        throw NotMaximal("from_polygon_parts: expected " + std::to_string(std::max(k - 3, 0)) +
                         " diagonals, got " + std::to_string(diags.size()));
    return from_polygon(GluedPolygon(Triangulation(k, std::move(diags)),
                                     SideGluing::from_pairs(k, glue_pairs), mark));
}

// --- round trips ------------------------------------------------------------

// Isomorphism-invariant encoding of a based tree-rooted map: traversal code
// from the base dart plus per-label tree membership flags. Two based
// tree-rooted maps are isomorphic iff their encodings are equal.
struct RootedEncoding {
    std::vector<int> alpha_code;
    std::vector<char> tree_flags;

    friend bool operator==(const RootedEncoding&, const RootedEncoding&) = default;
};

inline RootedEncoding rooted_encoding(const TreeRootedMap& r) {
    if (!r.base)
        throw InvalidRoot("rooted_encoding: base dart required");
    auto t = detail::traverse(r.map, *r.base);
    if (!t.complete)
        throw std::invalid_argument("rooted_encoding: map is not connected");
    std::set<int> tree(r.tree.edges.begin(), r.tree.edges.end());
    RootedEncoding enc;
    enc.alpha_code = std::move(t.code);
    enc.tree_flags.reserve(static_cast<size_t>(r.map.darts));
    for (int L = 0; L < r.map.darts; ++L)
        enc.tree_flags.push_back(
            tree.contains(edge_id_of(r.map, t.order[static_cast<size_t>(L)])) ? 1 : 0);
    return enc;
}

inline bool isomorphic_rooted(const TreeRootedMap& a, const TreeRootedMap& b) {
    return rooted_encoding(a) == rooted_encoding(b);
}

// Both round-trip identities for one tree-rooted map; any exception counts
// as failure rather than propagating.
inline bool roundtrip_ok(const TreeRootedMap& r) {
    try {
        GluedPolygon p = to_polygon(r);
        TreeRootedMap back = from_polygon(p);
        if (!isomorphic_rooted(r, back))
            return false;
        return to_polygon(back) == p;
    } catch (const std::exception&) {
        return false;
    }
}

struct FuzzReport {
    int samples = 0;
    int passes = 0;
    int failures = 0;
    std::vector<std::string> failure_notes; // first few failures, for diagnosis
};

// Samples (census class, spanning tree, base dart) triples uniformly and
// round-trips each. Sampling uses plain modulo reduction on mt19937_64 so a
// fixed seed reproduces the same triples everywhere.
inline FuzzReport roundtrip_fuzz(int n, int samples, unsigned long long seed) {
    if (n < 1)
        throw std::invalid_argument("roundtrip_fuzz: n must be >= 1");
    if (samples < 0)
        throw std::invalid_argument("roundtrip_fuzz: samples must be >= 0");
    struct Prepared {
        CubicMap map;
        std::vector<SpanningTree> trees;
        unsigned long long weight; // trees * base darts
    };
    std::vector<Prepared> pool;
    unsigned long long total = 0;
    const unsigned long long bases = static_cast<unsigned long long>(2 * (n + 1));
    for (const auto& e : enumerate_maps(n)) {
        Prepared p{map_from_code(e.code.code), {}, 0};
        p.trees = enumerate_spanning_trees(p.map);
        p.weight = static_cast<unsigned long long>(p.trees.size()) * bases;
        total += p.weight;
        pool.push_back(std::move(p));
    }
    std::mt19937_64 rng(seed);
    FuzzReport rep;
    rep.samples = samples;
    for (int s = 0; s < samples; ++s) {
        unsigned long long pick = rng() % total;
        size_t idx = 0;
        while (pick >= pool[idx].weight) {
            pick -= pool[idx].weight;
            ++idx;
        }
        const auto& pr = pool[idx];
        const auto& tree = pr.trees[static_cast<size_t>(pick / bases)];
        unsigned long long base_index = pick % bases;
        std::set<int> in_tree(tree.edges.begin(), tree.edges.end());
        int base = -1;
        for (int d = 0; d < pr.map.darts; ++d) {
            if (in_tree.contains(edge_id_of(pr.map, d)))
                continue;
            if (base_index == 0) {
                base = d;
                break;
            }
            --base_index;
        }
        TreeRootedMap r{pr.map, tree, base};
        if (roundtrip_ok(r)) {
            ++rep.passes;
        } else {
            ++rep.failures;
            if (rep.failure_notes.size() < 5)
                rep.failure_notes.push_back("sample " + std::to_string(s) + ": map " +
                                            render_cubicmap(pr.map) + " base " +
                                            std::to_string(base));
        }
    }
    return rep;
}

} // namespace cubicmaps
