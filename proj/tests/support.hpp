// Shared test-side oracles. Everything here recomputes quantities by a
// different method than the library (convolution recurrences, Pascal's
// triangle, determinants) so agreement is meaningful.
#pragma once

#include <cubicmaps/exact.hpp>

#include <random>
#include <utility>
#include <vector>

namespace testsupport {

using cubicmaps::ExactInt;

// Catalan numbers by the convolution recurrence C_{k+1} = sum C_i C_{k-i};
// deliberately avoids the binomial closed form the library uses.
inline ExactInt oracle_catalan(int k) {
    static std::vector<ExactInt> c{1};
    while (static_cast<int>(c.size()) <= k) {
        ExactInt next = 0;
        int m = static_cast<int>(c.size()) - 1;
        for (int i = 0; i <= m; ++i)
            next += c[i] * c[m - i];
        c.push_back(next);
    }
    return c[k];
}

// Binomial coefficients from Pascal's triangle.
inline ExactInt oracle_binom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    static std::vector<std::vector<ExactInt>> rows{{1}};
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<ExactInt> row(prev.size() + 1, 1);
        for (size_t j = 1; j + 1 < row.size(); ++j)
            row[j] = prev[j - 1] + prev[j];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

// (k-1)!! — the number of perfect matchings of k labeled points.
inline ExactInt oracle_double_factorial_matchings(int k) {
    ExactInt r = 1;
    for (int i = k - 1; i >= 1; i -= 2)
        r *= i;
    return r;
}

// A pairing of sides 0..k-1 is non-crossing iff no two pairs interleave
// around the circle. Independent of the union-find genus computation.
inline bool oracle_noncrossing(const std::vector<int>& partner) {
    const int k = static_cast<int>(partner.size());
    for (int a = 0; a < k; ++a) {
        int b = partner[a];
        if (b <= a)
            continue;
        for (int c = a + 1; c < b; ++c) {
            int d = partner[c];
            if (d < a || d > b)
                return false;
        }
    }
    return true;
}

// Exact determinant of an integer matrix by fraction-free (Bareiss)
// elimination with row pivoting.
inline ExactInt oracle_determinant(std::vector<std::vector<ExactInt>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0)
        return 1;
    ExactInt prev = 1;
    int sign = 1;
    for (int c = 0; c < n - 1; ++c) {
        if (m[c][c] == 0) {
            int p = c + 1;
            while (p < n && m[p][c] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[c], m[p]);
            sign = -sign;
        }
        for (int i = c + 1; i < n; ++i)
            for (int j = c + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
        prev = m[c][c];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Spanning trees of an undirected multigraph by the matrix-tree theorem:
// determinant of the Laplacian with row/column 0 deleted. Loops are ignored
// (a loop never occurs in a spanning tree). `edges` lists endpoints, with
// multiplicity, of a graph on vertices 0..nv-1.
inline ExactInt oracle_spanning_trees(int nv, const std::vector<std::pair<int, int>>& edges) {
    if (nv <= 1)
        return 1;
    std::vector<std::vector<ExactInt>> lap(static_cast<size_t>(nv),
                                           std::vector<ExactInt>(static_cast<size_t>(nv), 0));
    for (auto [u, v] : edges) {
        if (u == v)
            continue;
        lap[u][u] += 1;
        lap[v][v] += 1;
        lap[u][v] -= 1;
        lap[v][u] -= 1;
    }
    std::vector<std::vector<ExactInt>> minor(static_cast<size_t>(nv - 1),
                                             std::vector<ExactInt>(static_cast<size_t>(nv - 1)));
    for (int i = 1; i < nv; ++i)
        for (int j = 1; j < nv; ++j)
            minor[i - 1][j - 1] = lap[i][j];
    return oracle_determinant(std::move(minor));
}

// Uniformly random permutation of 0..n-1.
inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        p[i] = i;
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> dist(0, i);
        std::swap(p[i], p[dist(rng)]);
    }
    return p;
}

} // namespace testsupport
