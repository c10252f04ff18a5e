#pragma once

// Cross-validation engine: recomputes every quantity along two independent
// routes (closed formula vs direct enumeration) and reports agreement.  The
// check list is a deterministic function of max_n; workers pull checks from an
// atomic queue but results land in fixed slots, so output never depends on the
// number of jobs.

#include <cubicmaps/bijection.hpp>
#include <cubicmaps/formulas.hpp>
#include <cubicmaps/map.hpp>
#include <cubicmaps/polygon.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cubicmaps {

struct CheckResult {
    std::string name;
    std::string expected;
    std::string actual;
    bool passed = false;
    double elapsed_seconds = 0.0; // never printed in reports: they must not depend on timing
};

struct VerifyReport {
    int max_n = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    int passed_count() const {
        int p = 0;
        for (const auto& c : checks) p += c.passed ? 1 : 0;
        return p;
    }
};

using CensusProvider = std::function<std::vector<CensusEntry>(int)>;

inline std::string format_check_line(const CheckResult& c) {
    std::ostringstream os;
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": expected=" << c.expected
       << " actual=" << c.actual;
    return os.str();
}

namespace detail {

inline std::string dec(const ExactInt& v) { return v.str(); }

struct Check {
    std::string name;
    std::function<std::pair<std::string, std::string>()> compute; // (expected, actual)
};

} // namespace detail

inline VerifyReport run_verify(int max_n, int jobs = 1, CensusProvider census = {}) {
    if (max_n < 1) throw std::invalid_argument("run_verify: max_n must be positive");
    using detail::Check;
    using detail::dec;

    if (!census) census = [](int n) { return enumerate_maps(n); };
    const int census_cap = std::min(max_n, 3);
    auto tables = std::make_shared<std::map<int, std::vector<CensusEntry>>>();
    for (int n = 1; n <= census_cap; ++n) (*tables)[n] = census(n);

    std::vector<Check> checks;

    // closed formulas against pinned reference values
    static const long long tutte_ref[] = {1, 1, 3, 13, 68, 399};
    for (int n = 1; n <= 6; ++n)
        checks.push_back({"tutte[" + std::to_string(n) + "]", [n] {
                              return std::pair(std::to_string(tutte_ref[n - 1]),
                                               dec(tutte_proper_count(n)));
                          }});
    static const long long f_ref[] = {4, 32, 336, 4096, 54912};
    checks.push_back({"F[1..5]", [] {
                          const auto f = goulden_jackson_F(5);
                          std::string exp, act;
                          for (int n = 1; n <= 5; ++n) {
                              exp += (n > 1 ? "," : "") + std::to_string(f_ref[n - 1]);
                              act += (n > 1 ? "," : "") + dec(f[static_cast<size_t>(n - 1)]);
                          }
                          return std::pair(exp, act);
                      }});
    const int fcap = std::min(max_n, 20);
    checks.push_back({"tutte<=F[1.." + std::to_string(fcap) + "]", [fcap] {
                          const auto f = goulden_jackson_F(fcap);
                          for (int n = 1; n <= fcap; ++n)
                              if (tutte_proper_count(n) > f[static_cast<size_t>(n - 1)])
                                  return std::pair(std::string("bound holds"),
                                                   "violated at n=" + std::to_string(n));
                          return std::pair(std::string("bound holds"), std::string("bound holds"));
                      }});
    static const long long t_ref[] = {2, 16, 246, 6076, 185196};
    for (int n = 1; n <= std::min(max_n, 5); ++n)
        checks.push_back({"t[" + std::to_string(n) + "]", [n] {
                              return std::pair(std::to_string(t_ref[n - 1]),
                                               dec(theorem41_t(n)));
                          }});

    // polygon enumerations against closed formulas
    for (int n = 1; n <= std::min(max_n, 5); ++n)
        checks.push_back({"t.burnside[" + std::to_string(n) + "]", [n] {
                              return std::pair(dec(theorem41_t(n)),
                                               dec(burnside_tree_rooted_count(n)));
                          }});
    for (int n = 1; n <= std::min(max_n, 7); ++n)
        checks.push_back({"symtri2[" + std::to_string(n) + "]", [n] {
                              return std::pair(dec(sym_tri_z2_marked(n)),
                                               dec(count_symmetric_triangulations(2 * n, 2)));
                          }});
    for (int n = 1; n <= std::min(max_n, 4); ++n)
        checks.push_back({"symtri3[" + std::to_string(n) + "]", [n] {
                              return std::pair(dec(sym_tri_z3_marked(n)),
                                               dec(count_symmetric_triangulations(3 * n, 3)));
                          }});
    for (int n = 1; n <= std::min(max_n + 3, 8); ++n)
        checks.push_back({"d.glue[" + std::to_string(n) + "]", [n] {
                              return std::pair(dec(d_closed(n)),
                                               dec(count_symmetric_gluings(2 * n, 2)));
                          }});
    for (int n = 1; n <= (max_n >= 6 ? 3 : 2); ++n)
        checks.push_back({"e.glue[" + std::to_string(n) + "]", [n] {
                              return std::pair(dec(e_closed(n)),
                                               dec(count_symmetric_gluings(6 * n, 3)));
                          }});
    for (int k = 4; k <= std::min(2 * max_n + 2, 10); k += 2)
        checks.push_back({"gluing.catalan[" + std::to_string(k) + "]", [k] {
                              long long zero = 0;
                              for_each_genus_zero_gluing(k, [&](const SideGluing&) { ++zero; });
                              return std::pair(dec(catalan(k / 2)), std::to_string(zero));
                          }});

    // map census against the formulas and against itself
    static const long long census_ref[] = {2, 6, 26};
    for (int n = 1; n <= census_cap; ++n)
        checks.push_back({"census.size[" + std::to_string(n) + "]", [n, tables] {
                              return std::pair(std::to_string(census_ref[n - 1]),
                                               std::to_string(tables->at(n).size()));
                          }});
    for (int n = 1; n <= std::min(max_n, 2); ++n)
        checks.push_back({"census.filter[" + std::to_string(n) + "]", [n, tables] {
                              const auto naive = census_by_filter(n);
                              const auto& fast = tables->at(n);
                              bool same = naive.size() == fast.size();
                              for (size_t i = 0; same && i < naive.size(); ++i)
                                  same = naive[i].code == fast[i].code &&
                                         naive[i].spanning_tree_count == fast[i].spanning_tree_count &&
                                         naive[i].tree_orbit_count == fast[i].tree_orbit_count;
                              return std::pair(std::string("identical"),
                                               same ? "identical" : "mismatch");
                          }});
    for (int n = 1; n <= census_cap; ++n)
        checks.push_back({"census.rooted[" + std::to_string(n) + "]", [n, tables] {
                              const auto f = goulden_jackson_F(n);
                              return std::pair(dec(f[static_cast<size_t>(n - 1)]),
                                               dec(rooted_count_identity(tables->at(n), n)));
                          }});
    for (int n = 1; n <= census_cap; ++n)
        checks.push_back({"census.marked[" + std::to_string(n) + "]", [n, tables] {
                              return std::pair(dec(marked_tree_rooted_count(n)),
                                               dec(marked_identity_check(tables->at(n), n)));
                          }});
    for (int n = 1; n <= census_cap; ++n)
        checks.push_back({"t.orbits[" + std::to_string(n) + "]", [n, tables] {
                              ExactInt total = 0;
                              for (const auto& e : tables->at(n)) total += e.tree_orbit_count;
                              return std::pair(dec(theorem41_t(n)), dec(total));
                          }});

    // bijection between tree-rooted maps and marked glued polygons
    for (int n = 1; n <= census_cap; ++n)
        checks.push_back({"bij.roundtrip[" + std::to_string(n) + "]", [n, tables] {
                              ExactInt expected = 0;
                              long long passes = 0, total = 0;
                              for (const auto& e : tables->at(n)) {
                                  expected += e.spanning_tree_count * (2 * (n + 1));
                                  const CubicMap m = map_from_code(e.code.code);
                                  for (const auto& tree : enumerate_spanning_trees(m)) {
                                      std::set<int> in_tree(tree.edges.begin(), tree.edges.end());
                                      for (int d = 0; d < m.darts; ++d) {
                                          if (in_tree.contains(edge_id_of(m, d))) continue;
                                          ++total;
                                          if (roundtrip_ok({m, tree, d})) ++passes;
                                      }
                                  }
                              }
                              return std::pair(dec(expected) + " pass",
                                               std::to_string(total) + (passes == total
                                                   ? " pass"
                                                   : " (" + std::to_string(total - passes) + " fail)"));
                          }});
    for (int n = 1; n <= census_cap; ++n)
        checks.push_back({"bij.image[" + std::to_string(n) + "]", [n, tables] {
                              std::set<std::string> images;
                              for (const auto& e : tables->at(n)) {
                                  const CubicMap m = map_from_code(e.code.code);
                                  for (const auto& tree : enumerate_spanning_trees(m)) {
                                      std::set<int> in_tree(tree.edges.begin(), tree.edges.end());
                                      for (int d = 0; d < m.darts; ++d)
                                          if (!in_tree.contains(edge_id_of(m, d)))
                                              images.insert(render_polygon(to_polygon({m, tree, d})));
                                  }
                              }
                              return std::pair(dec(marked_tree_rooted_count(n)),
                                               std::to_string(images.size()));
                          }});
    if (max_n >= 3)
        checks.push_back({"bij.fuzz[3]", [] {
                              const auto r = roundtrip_fuzz(3, 1000, 7);
                              return std::pair(std::string("1000 pass"),
                                               std::to_string(r.passes) + " pass" +
                                                   (r.failures ? " +" + std::to_string(r.failures) + " fail"
                                                               : ""));
                          }});

    VerifyReport report;
    report.max_n = max_n;
    report.checks.resize(checks.size());

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= checks.size()) return;
            CheckResult r;
            r.name = checks[i].name;
            const auto t0 = std::chrono::steady_clock::now();
            try {
                auto [exp, act] = checks[i].compute();
                r.expected = std::move(exp);
                r.actual = std::move(act);
                r.passed = r.expected == r.actual;
            } catch (const std::exception& ex) {
                r.expected = "no exception";
                r.actual = std::string("exception: ") + ex.what();
                r.passed = false;
            }
            r.elapsed_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            report.checks[i] = std::move(r);
        }
    };
    const int pool = std::clamp(jobs, 1, 64);
    std::vector<std::thread> threads;
    for (int i = 1; i < pool; ++i) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    return report;
}

} // namespace cubicmaps
