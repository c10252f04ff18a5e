// Command line front end: counts (closed formulas), census (map tables),
// verify (formula/enumeration cross-checks), bijection (round-trip fuzzing).
// All report output is byte-deterministic; timings go to stderr only.

#include <CLI11.hpp>
#include <json.hpp>

#include <cubicmaps/bijection.hpp>
#include <cubicmaps/formulas.hpp>
#include <cubicmaps/map.hpp>
#include <cubicmaps/polygon.hpp>
#include <cubicmaps/verify.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace cubicmaps;

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// "A..B" or a single "N"
bool parse_range(const std::string& text, long long& lo, long long& hi) {
    const auto dots = text.find("..");
    try {
        size_t used = 0;
        if (dots == std::string::npos) {
            lo = hi = std::stoll(text, &used);
            if (used != text.size()) return false;
        } else {
            const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
            lo = std::stoll(a, &used);
            if (used != a.size()) return false;
            hi = std::stoll(b, &used);
            if (used != b.size()) return false;
        }
    } catch (...) {
        return false;
    }
    return lo >= 1 && lo <= hi && hi <= 100000;
}

int with_output(const std::string& out_path, const std::function<void(std::ostream&)>& emit) {
    if (out_path.empty()) {
        emit(std::cout);
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 2;
    }
    emit(out);
    return out.good() ? 0 : 2;
}

// ---- counts ----------------------------------------------------------------

int run_counts(const std::string& quantity, const std::string& range,
               const std::string& format, const std::string& out_path) {
    long long lo = 0, hi = 0;
    if (!parse_range(range, lo, hi)) {
        std::cerr << "error: --n expects N or A..B with 1 <= A <= B <= 100000\n";
        return 2;
    }
    std::vector<ExactInt> f;
    if (quantity == "F") f = goulden_jackson_F(static_cast<int>(hi));
    auto value = [&](long long n) -> ExactInt {
        const int m = static_cast<int>(n);
        if (quantity == "t") return theorem41_t(m);
        if (quantity == "F") return f[static_cast<size_t>(m - 1)];
        if (quantity == "tutte") return tutte_proper_count(m);
        if (quantity == "d") return d_closed(m);
        if (quantity == "e") return e_closed(m);
        if (quantity == "marked") return marked_tree_rooted_count(m);
        if (quantity == "symtri2") return sym_tri_z2_marked(m);
        return sym_tri_z3_marked(m); // symtri3
    };
    return with_output(out_path, [&](std::ostream& os) {
        if (format == "json") {
            ordered_json j;
            j["quantity"] = quantity;
            j["values"] = ordered_json::array();
            for (long long n = lo; n <= hi; ++n)
                j["values"].push_back({{"n", n}, {"value", value(n).str()}});
            os << j.dump(2) << "\n";
        } else {
            const char sep = format == "csv" ? ',' : ' ';
            os << "n" << sep << quantity << "\n";
            for (long long n = lo; n <= hi; ++n) os << n << sep << value(n).str() << "\n";
        }
    });
}

// ---- census ----------------------------------------------------------------

ordered_json census_json(int n, const std::vector<CensusEntry>& entries) {
    ordered_json j;
    j["format"] = "census_v1";
    j["n"] = n;
    j["entries"] = ordered_json::array();
    for (const auto& e : entries) {
        j["entries"].push_back({{"vertices", e.vertices},
                                {"code", render_cubicmap(map_from_code(e.code.code))},
                                {"aut_order", e.aut_order},
                                {"spanning_trees", e.spanning_tree_count.str()},
                                {"tree_orbits", e.tree_orbit_count.str()}});
    }
    return j;
}

std::optional<std::vector<CensusEntry>> census_from_json(const ordered_json& j, int n) {
    try {
        if (j.at("format").get<std::string>() != "census_v1" || j.at("n").get<int>() != n)
            return std::nullopt;
        std::vector<CensusEntry> out;
        for (const auto& e : j.at("entries")) {
            const CubicMap m = parse_cubicmap(e.at("code").get<std::string>());
            if (m.n() != n) return std::nullopt;
            CensusEntry entry;
            entry.vertices = e.at("vertices").get<int>();
            entry.aut_order = e.at("aut_order").get<int>();
            entry.code = CanonicalCode{m.alpha, entry.aut_order};
            entry.spanning_tree_count = ExactInt(e.at("spanning_trees").get<std::string>());
            entry.tree_orbit_count = ExactInt(e.at("tree_orbits").get<std::string>());
            out.push_back(std::move(entry));
        }
        if (out.empty()) return std::nullopt;
        return out;
    } catch (...) {
        return std::nullopt;
    }
}

fs::path cache_file(int n) {
    return fs::path(".census-cache") / ("census_v1_n" + std::to_string(n) + ".json");
}

std::vector<CensusEntry> load_census(int n, bool use_cache) {
    if (use_cache) {
        std::ifstream in(cache_file(n), std::ios::binary);
        if (in) {
            try {
                const auto parsed = census_from_json(ordered_json::parse(in), n);
                if (parsed) return *parsed;
            } catch (...) {
            }
        }
    }
    auto entries = enumerate_maps(n);
    if (use_cache) {
        std::error_code ec;
        fs::create_directories(".census-cache", ec);
        if (!ec) {
            // write-then-rename so concurrent readers never see a partial file
            const fs::path tmp =
                cache_file(n).string() + ".tmp." + std::to_string(::getpid());
            std::ofstream out(tmp, std::ios::binary);
            if (out) {
                out << census_json(n, entries).dump(2) << "\n";
                out.close();
                fs::rename(tmp, cache_file(n), ec);
                if (ec) fs::remove(tmp, ec);
            }
        }
    }
    return entries;
}

int run_census(int n, const std::string& format, const std::string& out_path, bool use_cache) {
    const auto entries = load_census(n, use_cache);
    return with_output(out_path, [&](std::ostream& os) {
        if (format == "json") {
            os << census_json(n, entries).dump(2) << "\n";
        } else if (format == "csv") {
            os << "vertices,code,aut_order,spanning_trees,tree_orbits\n";
            for (const auto& e : entries)
                os << e.vertices << ","
                   << csv_quote(render_cubicmap(map_from_code(e.code.code))) << ","
                   << e.aut_order << "," << e.spanning_tree_count.str() << ","
                   << e.tree_orbit_count.str() << "\n";
        } else {
            for (const auto& e : entries)
                os << render_cubicmap(map_from_code(e.code.code)) << " aut=" << e.aut_order
                   << " trees=" << e.spanning_tree_count.str()
                   << " orbits=" << e.tree_orbit_count.str() << "\n";
        }
    });
}

// ---- verify ----------------------------------------------------------------

int run_verify_cmd(int max_n, int jobs, const std::string& format, const std::string& out_path,
                   bool use_cache) {
    const auto start = std::chrono::steady_clock::now();
    const VerifyReport report =
        run_verify(max_n, jobs, [use_cache](int n) { return load_census(n, use_cache); });
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cerr << "verify: " << report.checks.size() << " checks in " << elapsed.count() << " ms\n";

    const int rc = with_output(out_path, [&](std::ostream& os) {
        if (format == "json") {
            ordered_json j;
            j["max_n"] = report.max_n;
            j["checks"] = ordered_json::array();
            for (const auto& c : report.checks)
                j["checks"].push_back({{"name", c.name},
                                       {"expected", c.expected},
                                       {"actual", c.actual},
                                       {"status", c.passed ? "pass" : "fail"}});
            j["passed"] = report.passed_count();
            j["total"] = report.checks.size();
            j["all_passed"] = report.all_passed();
            os << j.dump(2) << "\n";
        } else if (format == "csv") {
            os << "name,expected,actual,status\n";
            for (const auto& c : report.checks)
                os << csv_quote(c.name) << "," << csv_quote(c.expected) << ","
                   << csv_quote(c.actual) << "," << (c.passed ? "pass" : "fail") << "\n";
        } else {
            for (const auto& c : report.checks) os << format_check_line(c) << "\n";
            os << "verify: " << report.passed_count() << "/" << report.checks.size()
               << " checks passed\n";
        }
    });
    if (rc != 0) return rc;
    return report.all_passed() ? 0 : 1;
}

// ---- bijection -------------------------------------------------------------

int run_bijection(int n, int samples, unsigned long long seed, const std::string& format,
                  const std::string& out_path) {
    const FuzzReport report = roundtrip_fuzz(n, samples, seed);
    const int rc = with_output(out_path, [&](std::ostream& os) {
        if (format == "json") {
            ordered_json j;
            j["n"] = n;
            j["samples"] = report.samples;
            j["passes"] = report.passes;
            j["failures"] = report.failures;
            j["notes"] = report.failure_notes;
            os << j.dump(2) << "\n";
        } else if (format == "csv") {
            os << "n,samples,passes,failures,notes\n";
            std::string notes;
            for (const auto& s : report.failure_notes) {
                if (!notes.empty()) notes += "; ";
                notes += s;
            }
            os << n << "," << report.samples << "," << report.passes << "," << report.failures
               << "," << csv_quote(notes) << "\n";
        } else {
            os << "n=" << n << " samples=" << report.samples << " passes=" << report.passes
               << " failures=" << report.failures << "\n";
            for (const auto& s : report.failure_notes) os << "note: " << s << "\n";
        }
    });
    if (rc != 0) return rc;
    return report.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration toolkit for tree-rooted planar cubic maps"};
    app.require_subcommand(1);

    std::string quantity = "t", range = "1..5", format = "text", out_path;
    int census_n = 1, max_n = 5, jobs = 1, fuzz_n = 2, samples = 1000;
    unsigned long long seed = 7;
    bool no_cache = false;

    const auto formats = CLI::IsMember({"text", "csv", "json"});

    auto* counts = app.add_subcommand("counts", "closed-formula count sequences");
    counts->add_option("--quantity", quantity, "t|F|tutte|d|e|marked|symtri2|symtri3")
        ->check(CLI::IsMember({"t", "F", "tutte", "d", "e", "marked", "symtri2", "symtri3"}));
    counts->add_option("--n", range, "index or range A..B");
    counts->add_option("--format", format, "text|csv|json")->check(formats);
    counts->add_option("--out", out_path, "write report to file instead of stdout");

    auto* census = app.add_subcommand("census", "isomorphism classes of planar cubic maps");
    census->add_option("--n", census_n, "number of vertices is 2n")
        ->required()
        ->check(CLI::Range(1, 4));
    census->add_option("--format", format, "text|csv|json")->check(formats);
    census->add_option("--out", out_path, "write report to file instead of stdout");
    census->add_flag("--no-cache", no_cache, "ignore and do not write ./.census-cache");

    auto* verify = app.add_subcommand("verify", "cross-check formulas against enumerations");
    verify->add_option("--max-n", max_n, "largest index to verify")->check(CLI::Range(1, 1000));
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
    verify->add_option("--format", format, "text|csv|json")->check(formats);
    verify->add_option("--out", out_path, "write report to file instead of stdout");
    verify->add_flag("--no-cache", no_cache, "ignore and do not write ./.census-cache");

    auto* bijection = app.add_subcommand("bijection", "fuzz the tree-rooted map round trip");
    bijection->add_option("--n", fuzz_n, "number of vertices is 2n")
        ->required()
        ->check(CLI::Range(1, 4));
    bijection->add_option("--samples", samples, "number of random round trips")
        ->check(CLI::Range(0, 10000000));
    bijection->add_option("--seed", seed, "random seed");
    bijection->add_option("--format", format, "text|csv|json")->check(formats);
    bijection->add_option("--out", out_path, "write report to file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*counts) return run_counts(quantity, range, format, out_path);
        if (*census) return run_census(census_n, format, out_path, !no_cache);
        if (*verify) return run_verify_cmd(max_n, jobs, format, out_path, !no_cache);
        return run_bijection(fuzz_n, samples, seed, format, out_path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
