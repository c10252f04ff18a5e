// Rotation-system model of cubic maps: darts 0..6n-1, a vertex rotation
// composed of 2n disjoint 3-cycles (counterclockwise dart order at each
// vertex) and a fixed-point-free edge involution. Provides face tracing and
// genus, a canonical code with automorphism extraction, an exhaustive census
// of genus-0 maps up to isomorphism, spanning-tree enumeration, and the two
// census-side counting identities. This is the second independent oracle,
// entirely separate from the polygon constructions.
#pragma once

#include "exact.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubicmaps {

struct CubicMap {
    int darts = 0;              // 6n for 2n vertices
    std::vector<int> sigma;     // vertex rotation, 3-cycles only
    std::vector<int> alpha;     // edge involution, fixed-point-free

    int n() const { return darts / 6; }
    int vertex_count() const { return darts / 3; }
    int edge_count() const { return darts / 2; }

    friend bool operator==(const CubicMap&, const CubicMap&) = default;
};

// The fixed vertex rotation used for canonical labelings: (0,1,2)(3,4,5)...
inline std::vector<int> template_sigma(int darts) {
    std::vector<int> s(static_cast<size_t>(darts));
    for (int v = 0; v < darts; v += 3) {
        s[v] = v + 1;
        s[v + 1] = v + 2;
        s[v + 2] = v;
    }
    return s;
}

namespace detail {

// Deterministic traversal from a root dart. Vertices are discovered as whole
// 3-blocks (d, sigma d, sigma^2 d) -> labels (L, L+1, L+2); labels are then
// processed in increasing order following alpha. In the new labels the vertex
// rotation is always the fixed template, so the relabeled edge involution
// alone encodes the map.
struct Traversal {
    std::vector<int> code;  // relabeled alpha; code[L] = label of alpha(dart with label L)
    std::vector<int> order; // order[L] = original dart carrying label L
    std::vector<int> label; // inverse of order; -1 where unreached
    bool complete = false;  // false iff the map is disconnected
};

inline Traversal traverse(const CubicMap& m, int root) {
    Traversal t;
    t.label.assign(static_cast<size_t>(m.darts), -1);
    t.order.reserve(static_cast<size_t>(m.darts));
    auto open_block = [&](int d) {
        for (int i = 0; i < 3; ++i) {
            t.label[static_cast<size_t>(d)] = static_cast<int>(t.order.size());
            t.order.push_back(d);
            d = m.sigma[static_cast<size_t>(d)];
        }
    };
    open_block(root);
    for (size_t L = 0; L < t.order.size(); ++L) {
        int e = m.alpha[static_cast<size_t>(t.order[L])];
        if (t.label[static_cast<size_t>(e)] == -1)
            open_block(e);
    }
    t.complete = static_cast<int>(t.order.size()) == m.darts;
    if (t.complete) {
        t.code.resize(static_cast<size_t>(m.darts));
        for (int L = 0; L < m.darts; ++L)
            t.code[static_cast<size_t>(L)] =
                t.label[static_cast<size_t>(m.alpha[static_cast<size_t>(t.order[static_cast<size_t>(L)])])];
    }
    return t;
}

} // namespace detail

inline bool is_connected(const CubicMap& m) {
    return detail::traverse(m, 0).complete;
}

// Throws std::invalid_argument unless the fields form a connected cubic
// rotation system. Genus is deliberately not constrained here: the census
// generator and the genus tests need to hold nonplanar candidates too.
inline void validate_cubic_map(const CubicMap& m) {
    if (m.darts < 6 || m.darts % 6 != 0)
        throw std::invalid_argument("CubicMap: dart count must be a positive multiple of 6");
    if (static_cast<int>(m.sigma.size()) != m.darts || static_cast<int>(m.alpha.size()) != m.darts)
        throw std::invalid_argument("CubicMap: permutation size mismatch");
    std::vector<char> seen(static_cast<size_t>(m.darts), 0);
    for (int d = 0; d < m.darts; ++d) {
        int s = m.sigma[static_cast<size_t>(d)];
        if (s < 0 || s >= m.darts)
            throw std::invalid_argument("CubicMap: sigma out of range");
        if (!seen[static_cast<size_t>(d)]) {
            // walk the cycle through d and require length exactly 3
            int x = d, len = 0;
            do {
                if (x < 0 || x >= m.darts || (seen[static_cast<size_t>(x)] && x != d))
                    throw std::invalid_argument("CubicMap: sigma is not a permutation");
                seen[static_cast<size_t>(x)] = 1;
                x = m.sigma[static_cast<size_t>(x)];
                ++len;
            } while (x != d && len <= m.darts);
            if (len != 3)
                throw std::invalid_argument("CubicMap: sigma has a cycle of length " +
                                            std::to_string(len) + ", expected 3");
        }
    }
    for (int d = 0; d < m.darts; ++d) {
        int a = m.alpha[static_cast<size_t>(d)];
        if (a < 0 || a >= m.darts || a == d || m.alpha[static_cast<size_t>(a)] != d)
            throw std::invalid_argument("CubicMap: alpha is not a fixed-point-free involution");
    }
    if (!is_connected(m))
        throw std::invalid_argument("CubicMap: not connected");
}

// Face cycles of the rotation system: orbits of d -> sigma(alpha(d)).
inline std::vector<std::vector<int>> faces(const CubicMap& m) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<size_t>(m.darts), 0);
    for (int d = 0; d < m.darts; ++d) {
        if (seen[static_cast<size_t>(d)])
            continue;
        std::vector<int> cyc;
        int x = d;
        do {
            seen[static_cast<size_t>(x)] = 1;
            cyc.push_back(x);
            x = m.sigma[static_cast<size_t>(m.alpha[static_cast<size_t>(x)])];
        } while (x != d);
        out.push_back(std::move(cyc));
    }
    return out;
}

// Genus from Euler's formula: V - E + F = 2 - 2g with V = 2n, E = 3n.
inline int genus(const CubicMap& m) {
    int v = m.vertex_count(), e = m.edge_count(), f = static_cast<int>(faces(m).size());
    int chi = v - e + f;
    int g2 = 2 - chi;
    if (g2 < 0 || g2 % 2 != 0)
        throw std::logic_error("genus: Euler characteristic out of range");
    return g2 / 2;
}

struct CanonicalCode {
    std::vector<int> code; // relabeled alpha of the minimal rooted labeling
    int aut_order = 0;     // number of roots achieving the minimum

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

// Lexicographically minimal traversal code over all 6n roots. Orientation-
// preserving automorphisms act freely on darts, so the number of minimizing
// roots is exactly the automorphism group order.
inline CanonicalCode canonical_code(const CubicMap& m) {
    CanonicalCode best;
    for (int r = 0; r < m.darts; ++r) {
        auto t = detail::traverse(m, r);
        if (!t.complete)
            throw std::invalid_argument("canonical_code: map is not connected");
        if (best.code.empty() || t.code < best.code) {
            best.code = std::move(t.code);
            best.aut_order = 1;
        } else if (t.code == best.code) {
            ++best.aut_order;
        }
    }
    return best;
}

// Rebuilds the map a canonical code describes: alpha is the code itself and
// sigma is the fixed template.
inline CubicMap map_from_code(const std::vector<int>& code) {
    CubicMap m;
    m.darts = static_cast<int>(code.size());
    m.sigma = template_sigma(m.darts);
    m.alpha = code;
    validate_cubic_map(m);
    return m;
}

// All orientation-preserving automorphisms as dart permutations: for each
// minimizing root r, the permutation sending the reference minimal labeling
// to the one rooted at r.
inline std::vector<std::vector<int>> automorphisms(const CubicMap& m) {
    std::vector<int> best;
    std::vector<detail::Traversal> wins;
    for (int r = 0; r < m.darts; ++r) {
        auto t = detail::traverse(m, r);
        if (!t.complete)
            throw std::invalid_argument("automorphisms: map is not connected");
        if (best.empty() || t.code < best) {
            best = t.code;
            wins.clear();
            wins.push_back(std::move(t));
        } else if (t.code == best) {
            wins.push_back(std::move(t));
        }
    }
    std::vector<std::vector<int>> out;
    out.reserve(wins.size());
    const auto& ref = wins.front();
    for (const auto& w : wins) {
        std::vector<int> pi(static_cast<size_t>(m.darts));
        for (int d = 0; d < m.darts; ++d)
            pi[static_cast<size_t>(d)] = w.order[static_cast<size_t>(ref.label[static_cast<size_t>(d)])];
        out.push_back(std::move(pi));
    }
    return out;
}

// --- edges and spanning trees ----------------------------------------------

// Vertex id of each dart (index of its sigma 3-cycle, by smallest dart).
inline std::vector<int> vertex_ids(const CubicMap& m) {
    std::vector<int> vid(static_cast<size_t>(m.darts), -1);
    int next = 0;
    for (int d = 0; d < m.darts; ++d) {
        if (vid[static_cast<size_t>(d)] != -1)
            continue;
        int x = d;
        do {
            vid[static_cast<size_t>(x)] = next;
            x = m.sigma[static_cast<size_t>(x)];
        } while (x != d);
        ++next;
    }
    return vid;
}

// Edges as dart pairs (d, alpha d) with d < alpha d; the smaller dart is the
// edge identifier used everywhere.
inline std::vector<std::pair<int, int>> edges(const CubicMap& m) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m.edge_count()));
    for (int d = 0; d < m.darts; ++d)
        if (d < m.alpha[static_cast<size_t>(d)])
            out.emplace_back(d, m.alpha[static_cast<size_t>(d)]);
    return out;
}

struct SpanningTree {
    std::vector<int> edges; // edge ids (smaller dart of each pair), sorted

    friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
    friend auto operator<=>(const SpanningTree&, const SpanningTree&) = default;
};

// All spanning trees by filtered subset enumeration over non-loop edges
// (a loop can never be a tree edge). Desk scale: at most C(12,7) subsets.
inline std::vector<SpanningTree> enumerate_spanning_trees(const CubicMap& m) {
    const auto vid = vertex_ids(m);
    const int nv = m.vertex_count();
    std::vector<int> candidates;
    for (auto [d, a] : edges(m))
        if (vid[static_cast<size_t>(d)] != vid[static_cast<size_t>(a)])
            candidates.push_back(d);
    const int need = nv - 1;
    std::vector<SpanningTree> out;
    if (static_cast<int>(candidates.size()) < need)
        return out;
    std::vector<int> pick;
    std::vector<int> parent(static_cast<size_t>(nv));
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    auto rec = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(pick.size()) == need) {
            std::iota(parent.begin(), parent.end(), 0);
            for (int e : pick) {
                int a = find(vid[static_cast<size_t>(e)]);
                int b = find(vid[static_cast<size_t>(m.alpha[static_cast<size_t>(e)])]);
                if (a == b)
                    return; // cycle
                parent[static_cast<size_t>(a)] = b;
            }
            out.push_back(SpanningTree{pick});
            return;
        }
        if (from >= candidates.size())
            return;
        if (candidates.size() - from < static_cast<size_t>(need) - pick.size())
            return;
        pick.push_back(candidates[from]);
        self(self, from + 1);
        pick.pop_back();
        self(self, from + 1);
    };
    rec(rec, 0);
    return out;
}

// Orbits of the automorphism group acting on spanning trees.
inline ExactInt tree_orbit_count(const CubicMap& m) {
    const auto trees = enumerate_spanning_trees(m);
    const auto auts = automorphisms(m);
    std::set<std::vector<int>> seen;
    ExactInt orbits = 0;
    for (const auto& t : trees) {
        if (seen.contains(t.edges))
            continue;
        ++orbits;
        for (const auto& pi : auts) {
            std::vector<int> image;
            image.reserve(t.edges.size());
            for (int e : t.edges)
                image.push_back(std::min(pi[static_cast<size_t>(e)],
                                         pi[static_cast<size_t>(m.alpha[static_cast<size_t>(e)])]));
            std::sort(image.begin(), image.end());
            seen.insert(std::move(image));
        }
    }
    return orbits;
}

// --- census -----------------------------------------------------------------

struct CensusEntry {
    int vertices = 0;
    CanonicalCode code;
    int aut_order = 0;
    ExactInt spanning_tree_count;
    ExactInt tree_orbit_count;
};

namespace detail {

inline CensusEntry make_entry(const CubicMap& m, CanonicalCode code) {
    CensusEntry e;
    e.vertices = m.vertex_count();
    e.aut_order = code.aut_order;
    e.code = std::move(code);
    e.spanning_tree_count = static_cast<long long>(enumerate_spanning_trees(m).size());
    e.tree_orbit_count = cubicmaps::tree_orbit_count(m);
    return e;
}

} // namespace detail

// Exhaustive census of connected genus-0 cubic maps with 2n vertices, one
// entry per isomorphism class, sorted by canonical code.
//
// Generation walks edge involutions in traversal-canonical rooted form over
// the fixed sigma template: processing darts in label order, an unmatched
// dart may pair only with the first dart of a brand-new vertex block or with
// a later unmatched dart of an already-opened block. Each leaf is exactly one
// rooted connected map in its traversal labeling, so the search space is the
// number of rooted maps of any genus rather than all (6n-1)!! involutions.
// A leaf represents its isomorphism class iff its labeling is the canonical
// one, i.e. its alpha equals its own canonical code.
inline std::vector<CensusEntry> enumerate_maps(int n) {
    if (n < 1)
        throw std::invalid_argument("enumerate_maps: n must be >= 1");
    const int total = 6 * n;
    std::vector<int> alpha(static_cast<size_t>(total), -1);
    std::vector<CensusEntry> out;
    auto rec = [&](auto&& self, int i, int next_block) -> void {
        while (i < total && alpha[static_cast<size_t>(i)] != -1)
            ++i;
        if (i == total) {
            CubicMap m{total, template_sigma(total), alpha};
            if (genus(m) != 0)
                return;
            auto code = canonical_code(m);
            if (code.code == m.alpha)
                out.push_back(detail::make_entry(m, std::move(code)));
            return;
        }
        if (i == next_block)
            return; // dart of an unopened block reached: would disconnect
        if (next_block < total) {
            alpha[static_cast<size_t>(i)] = next_block;
            alpha[static_cast<size_t>(next_block)] = i;
            self(self, i + 1, next_block + 3);
            alpha[static_cast<size_t>(i)] = -1;
            alpha[static_cast<size_t>(next_block)] = -1;
        }
        for (int j = i + 1; j < next_block; ++j) {
            if (alpha[static_cast<size_t>(j)] != -1)
                continue;
            alpha[static_cast<size_t>(i)] = j;
            alpha[static_cast<size_t>(j)] = i;
            self(self, i + 1, next_block);
            alpha[static_cast<size_t>(i)] = -1;
            alpha[static_cast<size_t>(j)] = -1;
        }
    };
    rec(rec, 0, 3);
    std::sort(out.begin(), out.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.code < b.code; });
    return out;
}

// Slow cross-check: filter every fixed-point-free involution on 6n darts,
// keep connected genus-0 maps, deduplicate by canonical code. Feasible for
// n <= 2 only; retained to validate the canonical generator.
inline std::vector<CensusEntry> census_by_filter(int n) {
    if (n < 1)
        throw std::invalid_argument("census_by_filter: n must be >= 1");
    const int total = 6 * n;
    const auto sig = template_sigma(total);
    std::vector<int> alpha(static_cast<size_t>(total), -1);
    std::set<std::vector<int>> codes;
    std::vector<CensusEntry> out;
    auto rec = [&](auto&& self, int d) -> void {
        while (d < total && alpha[static_cast<size_t>(d)] != -1)
            ++d;
        if (d == total) {
            CubicMap m{total, sig, alpha};
            if (!is_connected(m) || genus(m) != 0)
                return;
            auto code = canonical_code(m);
            if (codes.insert(code.code).second) {
                CubicMap rep = map_from_code(code.code);
                out.push_back(detail::make_entry(rep, std::move(code)));
            }
            return;
        }
        for (int j = d + 1; j < total; ++j) {
            if (alpha[static_cast<size_t>(j)] != -1)
                continue;
            alpha[static_cast<size_t>(d)] = j;
            alpha[static_cast<size_t>(j)] = d;
            self(self, d + 1);
            alpha[static_cast<size_t>(d)] = -1;
            alpha[static_cast<size_t>(j)] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.code < b.code; });
    return out;
}

// --- census-side counting identities ---------------------------------------

// Rooted maps via the census: automorphisms act freely on darts, so each
// class contributes 6n/|Aut| rooted maps. Must equal the recurrence value F_n.
inline ExactInt rooted_count_identity(const std::vector<CensusEntry>& census, int n) {
    ExactRat sum = 0;
    for (const auto& e : census)
        sum += ExactRat(6 * n, e.aut_order);
    return rat_to_int(sum, "rooted_count_identity");
}

inline ExactInt rooted_count_identity(int n) {
    return rooted_count_identity(enumerate_maps(n), n);
}

// Tree-rooted maps with a marked directed non-tree edge: each class
// contributes trees * 2(n+1) / |Aut|. Must equal C_{n+1} * C_{2n}.
inline ExactInt marked_identity_check(const std::vector<CensusEntry>& census, int n) {
    ExactRat sum = 0;
    for (const auto& e : census)
        sum += ExactRat(e.spanning_tree_count * (2 * (n + 1)), ExactInt(e.aut_order));
    return rat_to_int(sum, "marked_identity_check");
}

inline ExactInt marked_identity_check(int n) {
    return marked_identity_check(enumerate_maps(n), n);
}

// --- text format ------------------------------------------------------------

// Line format, bit-exact:
//   cubicmap v1 n=<n> sigma=(a,b,c)... alpha=(a,b)...
// Cycles are written from their smallest dart and sorted by it; pairs are
// written (min,max) sorted by first element.
inline std::string render_cubicmap(const CubicMap& m) {
    std::ostringstream os;
    os << "cubicmap v1 n=" << m.n() << " sigma=";
    std::vector<char> seen(static_cast<size_t>(m.darts), 0);
    for (int d = 0; d < m.darts; ++d) {
        if (seen[static_cast<size_t>(d)])
            continue;
        os << '(';
        int x = d;
        bool first = true;
        do {
            if (!first)
                os << ',';
            first = false;
            os << x;
            seen[static_cast<size_t>(x)] = 1;
            x = m.sigma[static_cast<size_t>(x)];
        } while (x != d);
        os << ')';
    }
    os << " alpha=";
    for (int d = 0; d < m.darts; ++d)
        if (d < m.alpha[static_cast<size_t>(d)])
            os << '(' << d << ',' << m.alpha[static_cast<size_t>(d)] << ')';
    return os.str();
}

inline CubicMap parse_cubicmap(const std::string& line) {
    std::istringstream is(line);
    std::string magic, version, nf, sf, af;
    is >> magic >> version >> nf >> sf >> af;
    if (magic != "cubicmap" || version != "v1" || nf.rfind("n=", 0) != 0 ||
        sf.rfind("sigma=", 0) != 0 || af.rfind("alpha=", 0) != 0)
        throw std::invalid_argument("parse_cubicmap: malformed line: " + line);
    const int n = std::stoi(nf.substr(2));
    if (n < 1)
        throw std::invalid_argument("parse_cubicmap: n must be >= 1");
    CubicMap m;
    m.darts = 6 * n;
    m.sigma.assign(static_cast<size_t>(m.darts), -1);
    m.alpha.assign(static_cast<size_t>(m.darts), -1);
    auto parse_groups = [&](const std::string& body, std::vector<int>& perm, bool cycles) {
        size_t pos = 0;
        while (pos < body.size()) {
            if (body[pos] != '(')
                throw std::invalid_argument("parse_cubicmap: expected '('");
            size_t close = body.find(')', pos);
            if (close == std::string::npos)
                throw std::invalid_argument("parse_cubicmap: unbalanced parenthesis");
            std::vector<int> elems;
            size_t p = pos + 1;
            while (p < close) {
                size_t comma = body.find(',', p);
                if (comma == std::string::npos || comma > close)
                    comma = close;
                elems.push_back(std::stoi(body.substr(p, comma - p)));
                p = comma + 1;
            }
            if (cycles) {
                for (size_t i = 0; i < elems.size(); ++i) {
                    int from = elems[i], to = elems[(i + 1) % elems.size()];
                    if (from < 0 || from >= m.darts || perm[static_cast<size_t>(from)] != -1)
                        throw std::invalid_argument("parse_cubicmap: bad cycle element");
                    perm[static_cast<size_t>(from)] = to;
                }
            } else {
                if (elems.size() != 2)
                    throw std::invalid_argument("parse_cubicmap: alpha entries must be pairs");
                int a = elems[0], b = elems[1];
                if (a < 0 || b < 0 || a >= m.darts || b >= m.darts ||
                    perm[static_cast<size_t>(a)] != -1 || perm[static_cast<size_t>(b)] != -1)
                    throw std::invalid_argument("parse_cubicmap: bad alpha pair");
                perm[static_cast<size_t>(a)] = b;
                perm[static_cast<size_t>(b)] = a;
            }
            pos = close + 1;
        }
    };
    parse_groups(sf.substr(6), m.sigma, true);
    parse_groups(af.substr(6), m.alpha, false);
    validate_cubic_map(m);
    return m;
}

} // namespace cubicmaps
