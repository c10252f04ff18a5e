// Brute-force polygon laboratory: exhaustive enumeration of polygon
// triangulations and pairwise side gluings, genus of a gluing via the Euler
// characteristic of the quotient surface, rotation-symmetry filters, and the
// Burnside orbit count of (triangulation, genus-0 gluing) pairs that serves
// as an independent oracle for the tree-rooted map formula.
//
// Conventions: a k-gon has vertices 0..k-1 counterclockwise; side i joins
// vertex i to vertex i+1 (mod k). Rotation by s steps sends index i to i+s.
#pragma once

#include "exact.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubicmaps {

struct OddSides : std::runtime_error {
    explicit OddSides(const std::string& what) : std::runtime_error(what) {}
};
struct BadOrder : std::runtime_error {
    explicit BadOrder(const std::string& what) : std::runtime_error(what) {}
};

// Strict interior crossing of two chords, as index intervals.
inline bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
    auto [p, q] = std::minmax(a.first, a.second);
    auto [r, s] = std::minmax(b.first, b.second);
    return (p < r && r < q && q < s) || (r < p && p < s && s < q);
}

// A maximal set of pairwise non-crossing diagonals of a convex k-gon.
// Degenerate sizes: the 2-gon and the triangle both carry exactly the empty
// triangulation. The constructor validates everything, including maximality.
struct Triangulation {
    int sides = 0;
    std::vector<std::pair<int, int>> diagonals; // each (min,max), sorted

    Triangulation() = default;

    Triangulation(int k, std::vector<std::pair<int, int>> diags) : sides(k) {
        if (k < 2)
            throw std::invalid_argument("Triangulation: polygon needs at least 2 sides");
        for (auto& d : diags) {
            if (d.first > d.second)
                std::swap(d.first, d.second);
            if (d.first < 0 || d.second >= k || d.first == d.second)
                throw std::invalid_argument("Triangulation: diagonal endpoint out of range");
            if (d.second - d.first == 1 || (d.first == 0 && d.second == k - 1))
                throw std::invalid_argument("Triangulation: diagonal duplicates a polygon side");
        }
        std::sort(diags.begin(), diags.end());
        if (std::adjacent_find(diags.begin(), diags.end()) != diags.end())
            throw std::invalid_argument("Triangulation: duplicate diagonal");
        for (size_t i = 0; i < diags.size(); ++i)
            for (size_t j = i + 1; j < diags.size(); ++j)
                if (chords_cross(diags[i], diags[j]))
                    throw std::invalid_argument("Triangulation: crossing diagonals");
        if (static_cast<int>(diags.size()) != std::max(k - 3, 0))
            throw std::invalid_argument("Triangulation: not maximal (" +
                                        std::to_string(diags.size()) + " diagonals for a " +
                                        std::to_string(k) + "-gon)");
        diagonals = std::move(diags);
    }

    friend bool operator==(const Triangulation&, const Triangulation&) = default;
    friend auto operator<=>(const Triangulation&, const Triangulation&) = default;
};

// A fixed-point-free pairing of the k sides. Glued sides are identified
// head-to-tail (side i's end vertex lands on side j's start vertex), the
// orientation-reversing identification that keeps the quotient orientable.
struct SideGluing {
    int sides = 0;
    std::vector<int> partner; // partner[i] = side glued to side i

    SideGluing() = default;

    SideGluing(int k, std::vector<int> p) : sides(k), partner(std::move(p)) {
        if (k < 2 || k % 2 != 0)
            throw OddSides("SideGluing: side count must be even and >= 2, got " + std::to_string(k));
        if (static_cast<int>(partner.size()) != k)
            throw std::invalid_argument("SideGluing: partner table has wrong size");
        for (int i = 0; i < k; ++i) {
            if (partner[i] < 0 || partner[i] >= k || partner[i] == i || partner[partner[i]] != i)
                throw std::invalid_argument("SideGluing: not a fixed-point-free involution");
        }
    }

    static SideGluing from_pairs(int k, const std::vector<std::pair<int, int>>& pairs) {
        std::vector<int> p(static_cast<size_t>(std::max(k, 0)), -1);
        for (auto [a, b] : pairs) {
            if (a < 0 || b < 0 || a >= k || b >= k || p[a] != -1 || p[b] != -1)
                throw std::invalid_argument("SideGluing: bad pair list");
            p[a] = b;
            p[b] = a;
        }
        return SideGluing(k, std::move(p));
    }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < sides; ++i)
            if (i < partner[i])
                out.emplace_back(i, partner[i]);
        return out;
    }

    friend bool operator==(const SideGluing&, const SideGluing&) = default;
    friend auto operator<=>(const SideGluing&, const SideGluing&) = default;
};

// Triangulation plus gluing of one polygon, optionally with a marked side.
struct GluedPolygon {
    Triangulation tri;
    SideGluing glue;
    std::optional<int> marked_side;

    GluedPolygon() = default;
    GluedPolygon(Triangulation t, SideGluing g, std::optional<int> mark = std::nullopt)
        : tri(std::move(t)), glue(std::move(g)), marked_side(mark) {
        if (tri.sides != glue.sides)
            throw std::invalid_argument("GluedPolygon: triangulation and gluing disagree on side count");
        if (marked_side && (*marked_side < 0 || *marked_side >= tri.sides))
            throw std::invalid_argument("GluedPolygon: marked side out of range");
    }

    friend bool operator==(const GluedPolygon&, const GluedPolygon&) = default;
};

// --- enumeration ------------------------------------------------------------

// Visits every triangulation of the k-gon exactly once. Order: recursive ear
// decomposition rooted at the side (k-1, 0), apex ascending at each level, so
// the first triangulation of a hexagon is the fan {(1,5),(2,5),(3,5)}.
template <class F>
void for_each_triangulation(int k, F&& visit) {
    if (k < 2)
        throw std::invalid_argument("for_each_triangulation: k must be >= 2");
    std::vector<std::pair<int, int>> diags;
    std::vector<std::pair<int, int>> work; // intervals awaiting an apex, LIFO
    auto is_chord = [&](int a, int b) { return b - a >= 2 && !(a == 0 && b == k - 1); };
    // Recursive lambda over the interval stack.
    auto rec = [&](auto&& self) -> void {
        if (work.empty()) {
            visit(Triangulation(k, diags));
            return;
        }
        auto [i, j] = work.back();
        work.pop_back();
        if (j - i < 2) {
            self(self);
        } else {
            for (int t = i + 1; t < j; ++t) {
                size_t d0 = diags.size();
                if (is_chord(i, t))
                    diags.emplace_back(i, t);
                if (is_chord(t, j))
                    diags.emplace_back(t, j);
                size_t w0 = work.size();
                if (t - i >= 2)
                    work.emplace_back(i, t);
                if (j - t >= 2)
                    work.emplace_back(t, j);
                self(self);
                work.resize(w0);
                diags.resize(d0);
            }
        }
        work.emplace_back(i, j);
    };
    if (k >= 3)
        work.emplace_back(0, k - 1);
    rec(rec);
}

inline std::vector<Triangulation> enumerate_triangulations(int k) {
    std::vector<Triangulation> out;
    for_each_triangulation(k, [&](const Triangulation& t) { out.push_back(t); });
    return out;
}

// Visits all (k-1)!! fixed-point-free pairings of the k sides, smallest
// unmatched side first, partner ascending.
template <class F>
void for_each_gluing(int k, F&& visit) {
    if (k < 2 || k % 2 != 0)
        throw OddSides("for_each_gluing: side count must be even and >= 2, got " + std::to_string(k));
    std::vector<int> partner(static_cast<size_t>(k), -1);
    auto rec = [&](auto&& self, int from) -> void {
        while (from < k && partner[from] != -1)
            ++from;
        if (from == k) {
            visit(SideGluing(k, partner));
            return;
        }
        for (int j = from + 1; j < k; ++j) {
            if (partner[j] != -1)
                continue;
            partner[from] = j;
            partner[j] = from;
            self(self, from + 1);
            partner[from] = -1;
            partner[j] = -1;
        }
    };
    rec(rec, 0);
}

inline std::vector<SideGluing> enumerate_gluings(int k) {
    std::vector<SideGluing> out;
    for_each_gluing(k, [&](const SideGluing& g) { out.push_back(g); });
    return out;
}

// --- genus ------------------------------------------------------------------

// Genus of the closed orientable surface obtained by carrying out the
// identifications: Euler characteristic of the quotient CW-complex with
// V = polygon-vertex classes under the head-to-tail identification,
// E = k/2 glued sides, F = 1 (the polygon interior).
inline int gluing_genus(const SideGluing& g) {
    const int k = g.sides;
    std::vector<int> parent(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int i = 0; i < k; ++i) {
        int j = g.partner[i];
        // side i (i -> i+1) is glued to side j (j -> j+1) reversing direction
        unite(i, (j + 1) % k);
    }
    int v = 0;
    for (int i = 0; i < k; ++i)
        if (find(i) == i)
            ++v;
    int chi = v - k / 2 + 1;
    int genus2 = 2 - chi;
    if (genus2 < 0 || genus2 % 2 != 0)
        throw std::logic_error("gluing_genus: Euler characteristic out of range");
    return genus2 / 2;
}

template <class F>
void for_each_genus_zero_gluing(int k, F&& visit) {
    for_each_gluing(k, [&](const SideGluing& g) {
        if (gluing_genus(g) == 0)
            visit(g);
    });
}

inline std::vector<SideGluing> genus_zero_gluings(int k) {
    std::vector<SideGluing> out;
    for_each_genus_zero_gluing(k, [&](const SideGluing& g) { out.push_back(g); });
    return out;
}

// --- rotation action --------------------------------------------------------

inline Triangulation rotate(const Triangulation& t, int steps) {
    const int k = t.sides;
    int s = ((steps % k) + k) % k;
    std::vector<std::pair<int, int>> diags;
    diags.reserve(t.diagonals.size());
    for (auto [a, b] : t.diagonals)
        diags.emplace_back((a + s) % k, (b + s) % k);
    return Triangulation(k, std::move(diags));
}

inline SideGluing rotate(const SideGluing& g, int steps) {
    const int k = g.sides;
    int s = ((steps % k) + k) % k;
    std::vector<int> p(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        p[(i + s) % k] = (g.partner[i] + s) % k;
    return SideGluing(k, std::move(p));
}

inline GluedPolygon rotate(const GluedPolygon& p, int steps) {
    const int k = p.tri.sides;
    int s = ((steps % k) + k) % k;
    std::optional<int> mark = p.marked_side;
    if (mark)
        mark = (*mark + s) % k;
    return GluedPolygon(rotate(p.tri, s), rotate(p.glue, s), mark);
}

// Rotation moving the marked side to index 0 (identity when unmarked).
inline GluedPolygon normalize_mark(const GluedPolygon& p) {
    if (!p.marked_side || *p.marked_side == 0)
        return p;
    return rotate(p, p.tri.sides - *p.marked_side);
}

// --- symmetry counts --------------------------------------------------------

namespace detail {
inline int rotation_step_for_order(int k, int q, const char* op) {
    if (q < 2 || k % q != 0)
        throw BadOrder(std::string(op) + ": rotation order " + std::to_string(q) +
                       " does not divide polygon size " + std::to_string(k));
    return k / q;
}
} // namespace detail

// Triangulations of the labeled k-gon fixed by the rotation of order q.
// The labeled polygon already has distinguishable sides, so marking one side
// does not change this count; the `marked` flag is accepted for interface
// symmetry and documents which reading of the count is meant. Either way the
// value matches the marked-side closed forms (n choices of big diagonal or
// central triangle, times C_{n-1}).
inline ExactInt count_symmetric_triangulations(int k, int q, bool marked = false) {
    (void)marked;
    const int step = detail::rotation_step_for_order(k, q, "count_symmetric_triangulations");
    ExactInt count = 0;
    for_each_triangulation(k, [&](const Triangulation& t) {
        if (rotate(t, step) == t)
            ++count;
    });
    return count;
}

// Genus-0 gluings of the labeled k-gon fixed by the rotation of order q.
// Only q = 2 (any even k) and q = 3 (k divisible by 6) are meaningful here.
inline ExactInt count_symmetric_gluings(int k, int q) {
    if (q != 2 && q != 3)
        throw BadOrder("count_symmetric_gluings: order must be 2 or 3, got " + std::to_string(q));
    if (q == 3 && k % 6 != 0)
        throw BadOrder("count_symmetric_gluings: order 3 needs side count divisible by 6");
    const int step = detail::rotation_step_for_order(k, q, "count_symmetric_gluings");
    ExactInt count = 0;
    for_each_gluing(k, [&](const SideGluing& g) {
        // symmetry test first: it is much cheaper than the genus computation
        for (int i = 0; i < k; ++i)
            if (g.partner[(i + step) % k] != (g.partner[i] + step) % k)
                return;
        if (gluing_genus(g) == 0)
            ++count;
    });
    return count;
}

// --- Burnside oracle --------------------------------------------------------

// Orbit count of pairs (triangulation, genus-0 gluing) of the 2(n+1)-gon
// under the full rotation group, by Burnside's formula. Pairs fixed by a
// rotation factor into fixed triangulations times fixed gluings, so each
// group element costs one pass over each enumeration rather than a pass over
// all pairs. This equals the number of tree-rooted planar cubic maps with
// 2n vertices and is the polygon-side oracle for the closed formula.
inline ExactInt burnside_tree_rooted_count(int n) {
    if (n < 1)
        throw std::invalid_argument("burnside_tree_rooted_count: n must be >= 1");
    const int m = 2 * (n + 1);
    std::vector<ExactInt> tri_fixed(static_cast<size_t>(m), 0);
    std::vector<ExactInt> glue_fixed(static_cast<size_t>(m), 0);
    for_each_triangulation(m, [&](const Triangulation& t) {
        ++tri_fixed[0];
        for (int s = 1; s < m; ++s)
            if (rotate(t, s) == t)
                ++tri_fixed[s];
    });
    for_each_genus_zero_gluing(m, [&](const SideGluing& g) {
        ++glue_fixed[0];
        for (int s = 1; s < m; ++s)
            if (rotate(g, s) == g)
                ++glue_fixed[s];
    });
    ExactInt total = 0;
    for (int s = 0; s < m; ++s)
        total += tri_fixed[s] * glue_fixed[s];
    return exact_div(total, ExactInt(m), "burnside_tree_rooted_count");
}

// --- text format ------------------------------------------------------------

namespace detail {
inline std::string render_pairs(const std::vector<std::pair<int, int>>& ps) {
    if (ps.empty())
        return "-";
    std::string out;
    for (auto [a, b] : ps)
        out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return out;
}

inline std::vector<std::pair<int, int>> parse_pairs(const std::string& s, const char* what) {
    std::vector<std::pair<int, int>> out;
    if (s == "-")
        return out;
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '(')
            throw std::invalid_argument(std::string(what) + ": expected '(' in pair list");
        size_t comma = s.find(',', pos);
        size_t close = s.find(')', pos);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw std::invalid_argument(std::string(what) + ": malformed pair");
        int a = std::stoi(s.substr(pos + 1, comma - pos - 1));
        int b = std::stoi(s.substr(comma + 1, close - comma - 1));
        out.emplace_back(a, b);
        pos = close + 1;
    }
    return out;
}
} // namespace detail

// Line format: poly v1 k=<sides> diag=<pairs> glue=<pairs> mark=<index|->
// Empty pair lists render as "-". Round-trips bit-exactly.
inline std::string render_polygon(const GluedPolygon& p) {
    std::ostringstream os;
    os << "poly v1 k=" << p.tri.sides;
    os << " diag=" << detail::render_pairs(p.tri.diagonals);
    os << " glue=" << detail::render_pairs(p.glue.pairs());
    os << " mark=" << (p.marked_side ? std::to_string(*p.marked_side) : std::string("-"));
    return os.str();
}

inline GluedPolygon parse_polygon(const std::string& line) {
    std::istringstream is(line);
    std::string magic, version, kf, df, gf, mf;
    is >> magic >> version >> kf >> df >> gf >> mf;
    if (magic != "poly" || version != "v1" || kf.rfind("k=", 0) != 0 ||
        df.rfind("diag=", 0) != 0 || gf.rfind("glue=", 0) != 0 || mf.rfind("mark=", 0) != 0)
        throw std::invalid_argument("parse_polygon: malformed line: " + line);
    int k = std::stoi(kf.substr(2));
    Triangulation tri(k, detail::parse_pairs(df.substr(5), "parse_polygon diag"));
    SideGluing glue = SideGluing::from_pairs(k, detail::parse_pairs(gf.substr(5), "parse_polygon glue"));
    std::optional<int> mark;
    std::string ms = mf.substr(5);
    if (ms != "-")
        mark = std::stoi(ms);
    return GluedPolygon(std::move(tri), std::move(glue), mark);
}

} // namespace cubicmaps
