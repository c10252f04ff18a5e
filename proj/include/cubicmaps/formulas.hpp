// Closed-form and recurrence counts for tree-rooted planar cubic maps and
// the polygon configurations they correspond to:
//
//   - Catalan numbers and central binomial coefficients,
//   - the count of proper edge-rooted plane triangulations (2(4n-3)!/(n!(3n-1)!)),
//   - the quadratic recurrence for edge-rooted cubic maps F_n,
//   - rotation-symmetric triangulation counts n*C_{n-1},
//   - rotation-symmetric genus-0 gluing counts d_n, e_n,
//   - the marked tree-rooted count C_{n+1}*C_{2n},
//   - the four-case formula for the unmarked tree-rooted count t_n.
//
// Everything is exact; divisions that must come out whole are asserted
// (NonIntegerCount on failure).
#pragma once

#include "exact.hpp"

#include <stdexcept>
#include <vector>

namespace cubicmaps {

namespace detail {
inline void require_positive(int n, const char* op) {
    if (n < 1)
        throw std::invalid_argument(std::string(op) + ": n must be >= 1, got " + std::to_string(n));
}
} // namespace detail

// binom(2k, k) by the multiplicative formula; every intermediate division is exact.
inline ExactInt central_binom(int k) {
    if (k < 0)
        throw std::invalid_argument("central_binom: k must be >= 0");
    ExactInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= k + i;
        r /= i; // binom(k+i, i) is integral at each step
    }
    return r;
}

// Catalan number C_k with C_0 = 1, computed as binom(2k,k)/(k+1).
// Memo table is per-thread so concurrent callers never contend.
inline ExactInt catalan(int k) {
    if (k < 0)
        throw std::invalid_argument("catalan: k must be >= 0");
    thread_local std::vector<ExactInt> memo;
    if (static_cast<int>(memo.size()) <= k) {
        if (memo.empty())
            memo.push_back(1);
        for (int i = static_cast<int>(memo.size()); i <= k; ++i)
            memo.push_back(exact_div(central_binom(i), ExactInt(i + 1), "catalan"));
    }
    return memo[k];
}

// Proper edge-rooted plane triangulations with 2n faces: 2*(4n-3)! / (n! * (3n-1)!).
// Computed by plain product accumulation; no caching needed at these sizes.
inline ExactInt tutte_proper_count(int n) {
    detail::require_positive(n, "tutte_proper_count");
    auto factorial = [](int m) {
        ExactInt f = 1;
        for (int i = 2; i <= m; ++i)
            f *= i;
        return f;
    };
    ExactInt num = 2 * factorial(4 * n - 3);
    ExactInt den = factorial(n) * factorial(3 * n - 1);
    return exact_div(num, den, "tutte_proper_count");
}

// Edge-rooted cubic map counts F_1..F_{n_max} via the convolution recurrence
//   f_n = 4(3n+2)/(n+1) * sum_{i+j=n-2, i,j>=-1} f_i f_j,
// seeded with f_{-1} = 1/2, f_0 = 2, and F_n = f_n/(3n+2).
// The f_n are half-integers in general, so the whole computation runs in
// exact rationals; each F_n is asserted integral.
inline std::vector<ExactInt> goulden_jackson_F(int n_max) {
    detail::require_positive(n_max, "goulden_jackson_F");
    std::vector<ExactRat> f; // f[i] holds f_{i-1}
    f.emplace_back(1, 2);    // f_{-1}
    f.emplace_back(2);       // f_0
    std::vector<ExactInt> result;
    result.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        ExactRat sum = 0;
        for (int i = -1; i <= n - 1; ++i)
            sum += f[i + 1] * f[n - 2 - i + 1];
        ExactRat fn = ExactRat(4 * (3 * n + 2), n + 1) * sum;
        f.push_back(fn);
        result.push_back(rat_to_int(fn / (3 * n + 2), "goulden_jackson_F"));
    }
    return result;
}

// Triangulations of a 2n-gon with a marked side that are invariant under the
// half-turn: n choices of long diagonal times C_{n-1} fillings of one half.
inline ExactInt sym_tri_z2_marked(int n) {
    detail::require_positive(n, "sym_tri_z2_marked");
    return n * catalan(n - 1);
}

// Triangulations of a 3n-gon with a marked side invariant under the rotation
// of order three: n choices of central triangle times C_{n-1}.
inline ExactInt sym_tri_z3_marked(int n) {
    detail::require_positive(n, "sym_tri_z3_marked");
    return n * catalan(n - 1);
}

// Half-turn-symmetric genus-0 gluings of a 2n-gon with a marked side:
//   d_n = binom(2k,k)       if n = 2k,
//   d_n = binom(2k,k) / 2   if n = 2k-1.
inline ExactInt d_closed(int n) {
    detail::require_positive(n, "d_closed");
    if (n % 2 == 0)
        return central_binom(n / 2);
    return exact_div(central_binom((n + 1) / 2), ExactInt(2), "d_closed");
}

// Order-3-symmetric genus-0 gluings of a 6n-gon with a marked side: binom(2n,n).
inline ExactInt e_closed(int n) {
    detail::require_positive(n, "e_closed");
    return central_binom(n);
}

// Tree-rooted planar cubic maps with 2n vertices and a marked directed
// non-tree edge: C_{n+1} * C_{2n}.
inline ExactInt marked_tree_rooted_count(int n) {
    detail::require_positive(n, "marked_tree_rooted_count");
    return catalan(n + 1) * catalan(2 * n);
}

// The unmarked count t_n splits into four cases by the residue of n+1.
enum class TheoremTag { OddNot3, EvenNot3, ThreeTimesOdd, SixTimes };

struct TheoremCase {
    TheoremTag tag;
    int k; // case parameter: n+1 = 2k-1 | 2k | 3(2k-1) | 6k
    friend bool operator==(const TheoremCase&, const TheoremCase&) = default;
};

inline TheoremCase classify_theorem_case(int n) {
    detail::require_positive(n, "classify_theorem_case");
    const int m = n + 1;
    if (m % 6 == 0)
        return {TheoremTag::SixTimes, m / 6};
    if (m % 3 == 0)
        return {TheoremTag::ThreeTimesOdd, (m / 3 + 1) / 2}; // m/3 is odd here
    if (m % 2 == 0)
        return {TheoremTag::EvenNot3, m / 2};
    return {TheoremTag::OddNot3, (m + 1) / 2};
}

// Tree-rooted planar cubic maps with 2n vertices (no marked edge):
//   (2n+2) t_n = C_{n+1}C_{2n} + [half-turn term] + [order-3 term],
// where the correction terms depend on the case of n+1. The right-hand side
// accumulates in exact rationals (two cases carry a factor 1/2); both it and
// the final division by 2n+2 are asserted integral.
inline ExactInt theorem41_t(int n) {
    detail::require_positive(n, "theorem41_t");
    const TheoremCase c = classify_theorem_case(n);
    const int m = n + 1;
    ExactRat rhs = ExactRat(catalan(n + 1) * catalan(2 * n));
    switch (c.tag) {
    case TheoremTag::OddNot3:
        rhs += ExactRat(m * catalan(n) * central_binom(c.k), 2);
        break;
    case TheoremTag::EvenNot3:
        rhs += ExactRat(m * catalan(n) * central_binom(c.k));
        break;
    case TheoremTag::ThreeTimesOdd:
        rhs += ExactRat(4 * (2 * c.k - 1) * catalan(4 * c.k - 3) * central_binom(2 * c.k - 1));
        rhs += ExactRat(m * catalan(n) * central_binom(3 * c.k - 1), 2);
        break;
    case TheoremTag::SixTimes:
        rhs += ExactRat(8 * c.k * catalan(4 * c.k - 1) * central_binom(2 * c.k));
        rhs += ExactRat(m * catalan(n) * central_binom(3 * c.k));
        break;
    }
    ExactInt whole = rat_to_int(rhs, "theorem41_t rhs");
    return exact_div(whole, ExactInt(2 * m), "theorem41_t");
}

} // namespace cubicmaps
