// Command-line front end: every verification workflow with machine-readable
// reports. Exit codes: 0 verified, 2 falsification (with a replayable dump),
// 1 usage or guard error.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "lcw/chromatic.hpp"
#include "lcw/graph.hpp"
#include "lcw/inequality.hpp"
#include "lcw/lemma_suite.hpp"
#include "lcw/product.hpp"

using nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1";

// FNV-1a over the normalized graph text plus operation parameters. The
// builder DSL always yields the normalized edge list, so equal expressions
// hash equally.
std::string cache_key(const lcw::Graph& g, const std::string& op, const std::string& params) {
    std::string data = g.to_text() + "\n" + op + "\n" + params;
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string cache_dir() {
    const char* env = std::getenv("LCW_CACHE_DIR");
    return env ? env : ".lcw-cache";
}

bool cache_load(const std::string& key, json& out) {
    std::ifstream in(cache_dir() + "/" + key + ".json");
    if (!in) return false;
    try {
        in >> out;
    } catch (...) {
        return false;
    }
    return out.value("schema_version", "") == kSchemaVersion;
}

void cache_store(const std::string& key, const json& j) {
    std::string dir = cache_dir();
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(dir + "/" + key + ".json");
    if (out) out << j.dump(2) << "\n";
}

void emit(const json& report, const std::string& output_path) {
    if (output_path.empty()) return;
    std::ofstream out(output_path);
    out << report.dump(2) << "\n";
}

std::string dump_falsification(const std::string& tag, const std::string& contents) {
    std::string path = "falsification-" + tag + ".txt";
    std::ofstream out(path);
    out << contents;
    return path;
}

int cmd_chi_list(const std::string& expr, bool no_cache, bool force, const std::string& output) {
    lcw::Graph g = lcw::parse_graph_expr(expr);
    std::string key = cache_key(g, "chi-list", "");
    json report;
    if (no_cache || !cache_load(key, report)) {
        lcw::EnumGuard guard;
        guard.force = force;
        lcw::ChiListResult r = lcw::list_chromatic_number(g, guard);
        report = {{"schema_version", kSchemaVersion},
                  {"operation", "chi-list"},
                  {"graph", expr},
                  {"value", r.value},
                  {"method", r.method},
                  {"hard_assignment", r.hard_assignment.to_text()}};
        if (!no_cache) cache_store(key, report);
    }
    std::cout << report["value"].get<int>() << "\n";
    std::cout << "method: " << report["method"].get<std::string>() << "\n";
    std::string hard = report["hard_assignment"].get<std::string>();
    if (!hard.empty())
        std::cout << "hard assignment (lists one size below):\n" << hard;
    emit(report, output);
    return 0;
}

int cmd_lcf(const std::string& expr, int k, bool no_cache, bool force, const std::string& output) {
    lcw::Graph g = lcw::parse_graph_expr(expr);
    std::string key = cache_key(g, "lcf", std::to_string(k));
    json report;
    if (no_cache || !cache_load(key, report)) {
        lcw::EnumGuard guard;
        guard.force = force;
        lcw::ListCountMinimum r = lcw::list_color_function(g, k, guard);
        report = {{"schema_version", kSchemaVersion},
                  {"operation", "lcf"},
                  {"graph", expr},
                  {"k", k},
                  {"value", r.value.get_str()},
                  {"minimizer", r.minimizer.to_text()}};
        if (!no_cache) cache_store(key, report);
    }
    std::cout << report["value"].get<std::string>() << "\n";
    std::cout << "minimizing assignment:\n" << report["minimizer"].get<std::string>();
    emit(report, output);
    return 0;
}

int cmd_chromatic(const std::string& expr, int k, const std::string& output) {
    lcw::Graph g = lcw::parse_graph_expr(expr);
    mpz_class v = lcw::chromatic_polynomial_value(g, k);
    json report = {{"schema_version", kSchemaVersion},
                   {"operation", "chromatic"},
                   {"graph", expr},
                   {"k", k},
                   {"value", v.get_str()}};
    std::cout << v.get_str() << "\n";
    emit(report, output);
    return 0;
}

int cmd_scc(const std::string& expr, bool force, const std::string& output) {
    lcw::Graph g = lcw::parse_graph_expr(expr);
    lcw::EnumGuard guard;
    guard.force = force;
    lcw::SccResult r = lcw::is_strongly_chromatic_choosable(g, guard);
    json report = {{"schema_version", kSchemaVersion},
                   {"operation", "scc"},
                   {"graph", expr},
                   {"value", r.value},
                   {"chromatic_number", r.k},
                   {"reason", r.reason}};
    if (r.counterexample) report["counterexample"] = r.counterexample->to_text();
    std::cout << (r.value ? "true" : "false") << " (chi = " << r.k << "): " << r.reason << "\n";
    if (r.counterexample)
        std::cout << "non-constant hard assignment:\n" << r.counterexample->to_text();
    emit(report, output);
    return 0;
}

int cmd_fa(const std::string& expr, int a, bool force, const std::string& output) {
    lcw::Graph g = lcw::parse_graph_expr(expr);
    lcw::CensusGuard guard;
    guard.force = force;
    mpz_class v = lcw::compute_fa(g, a, guard);
    json report = {{"schema_version", kSchemaVersion},
                   {"operation", "fa"},
                   {"graph", expr},
                   {"a", a},
                   {"value", v.get_str()}};
    std::cout << v.get_str() << "\n";
    emit(report, output);
    return 0;
}

int cmd_witness(int n, int a, bool verify, const std::string& output) {
    lcw::ExtremalWitness w = lcw::construct_extremal_assignment(n, a);
    json report = {{"schema_version", kSchemaVersion},
                   {"operation", "witness"},
                   {"n", n},
                   {"a", a},
                   {"b_star", w.b_star.get_str()},
                   {"assignment", w.L.to_text()}};
    std::cout << "b* = " << w.b_star.get_str() << " (" << w.h.prod.graph.num_vertices()
              << " vertices)\n";
    std::cout << w.L.to_text();
    int rc = 0;
    if (verify) {
        lcw::Certificate cert = lcw::certify_or_color(w.h, w.L, n + a - 1);
        report["certificate"] = json::parse(cert.to_json());
        if (cert.kind == "non-colorable-by-cover") {
            std::cout << "verified non-colorable (" << cert.kind << ")\n";
        } else {
            std::string path = dump_falsification("witness", w.L.to_text());
            std::cout << "FALSIFIED: certificate kind " << cert.kind << "; assignment dumped to "
                      << path << "\n";
            rc = 2;
        }
    }
    emit(report, output);
    return rc;
}

int cmd_certify(int n, int a, int b, const std::string& lists_path, int random_count,
                std::uint64_t seed, bool force, const std::string& output) {
    lcw::ProductInstance h = lcw::make_product_instance(lcw::complete_graph(n), a, b);
    int k = n + a - 1;
    lcw::CensusGuard guard;
    guard.force = force;
    json report = {{"schema_version", kSchemaVersion},
                   {"operation", "certify"},
                   {"n", n},
                   {"a", a},
                   {"b", b},
                   {"certificates", json::array()}};
    int rc = 0;
    auto run_one = [&](const lcw::ListAssignment& L, const std::string& tag) {
        try {
            lcw::Certificate cert = lcw::certify_or_color(h, L, k, guard);
            report["certificates"].push_back(json::parse(cert.to_json()));
            std::cout << tag << ": " << cert.kind << "\n";
        } catch (const std::exception& e) {
            std::string path = dump_falsification("certify", L.to_text());
            std::cout << tag << ": FALSIFIED: " << e.what() << "; assignment dumped to " << path
                      << "\n";
            rc = 2;
        }
    };
    if (!lists_path.empty()) {
        std::ifstream in(lists_path);
        if (!in) throw CLI::ValidationError("--lists", "cannot open " + lists_path);
        std::stringstream buf;
        buf << in.rdbuf();
        lcw::ListAssignment L =
            lcw::ListAssignment::from_text(buf.str(), h.prod.graph.num_vertices());
        run_one(L, lists_path);
    } else {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < random_count; ++t) {
            lcw::ListAssignment L = lcw::random_disjoint_row_assignment(h, rng);
            run_one(L, "random #" + std::to_string(t));
        }
    }
    emit(report, output);
    return rc;
}

int cmd_optlemma(const std::string& output) {
    json report = {{"schema_version", kSchemaVersion},
                   {"operation", "optlemma"},
                   {"checked", 0},
                   {"mismatches", json::array()}};
    long checked = 0;
    int rc = 0;
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= 6; ++k)
            for (int c = k + 1; c <= 12; ++c)
                for (int m = k + 1; m <= k * (n + 1); ++m) {
                    lcw::OptInstance inst(n, m, k, c);
                    mpz_class closed = lcw::optlemma_closed_form(inst);
                    mpz_class brute = lcw::optlemma_bruteforce(inst);
                    ++checked;
                    if (closed != brute) {
                        json bad = {{"n", n}, {"m", m},
                                    {"k", k}, {"C", c},
                                    {"closed_form", closed.get_str()},
                                    {"bruteforce", brute.get_str()}};
                        report["mismatches"].push_back(bad);
                        dump_falsification("optlemma", bad.dump(2));
                        std::cout << "MISMATCH " << bad.dump() << "\n";
                        rc = 2;
                    }
                }
    report["checked"] = checked;
    std::cout << "checked " << checked << " instances, " << report["mismatches"].size()
              << " mismatches\n";
    emit(report, output);
    return rc;
}

int cmd_key_sweep(int n_max, int a_max, int precision, const std::string& csv_path,
                  const std::string& output) {
    std::ofstream csv;
    std::ostream* os = &std::cout;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        os = &csv;
    }
    *os << "n,a,s,verdict,precision_bits,lhs_lower,lhs_upper\n";
    long holds = 0, fails = 0, inconclusive = 0;
    for (int n = 2; n <= n_max; ++n)
        for (int a = std::max(n, 1); a <= a_max; ++a)
            for (int s = 0; s <= a; ++s) {
                lcw::KeyVerdict v = lcw::key_inequality_check(n, a, s, precision);
                *os << n << "," << a << "," << s << "," << v.verdict << "," << v.precision_bits
                    << "," << v.lhs.lower_d() << "," << v.lhs.upper_d() << "\n";
                if (v.verdict == "holds")
                    ++holds;
                else if (v.verdict == "fails")
                    ++fails;
                else
                    ++inconclusive;
            }
    json report = {{"schema_version", kSchemaVersion},
                   {"operation", "key-sweep"},
                   {"n_max", n_max},
                   {"a_max", a_max},
                   {"holds", holds},
                   {"fails", fails},
                   {"inconclusive", inconclusive}};
    std::cout << report.dump() << "\n";
    emit(report, output);
    return (fails > 0 || inconclusive > 0) ? 2 : 0;
}

int cmd_facts(int precision, long grid_den, const std::string& output) {
    lcw::FactReport r = lcw::verify_analytic_facts(precision, grid_den);
    json report = {{"schema_version", kSchemaVersion},
                   {"operation", "facts"},
                   {"facts", r.facts},
                   {"cells", r.cells},
                   {"failures", r.failures},
                   {"inconclusive", r.inconclusive}};
    std::cout << r.facts << " facts, " << r.cells << " cells, " << r.failures.size()
              << " failures, " << r.inconclusive.size() << " inconclusive\n";
    for (const auto& f : r.failures) std::cout << "FAILURE: " << f << "\n";
    for (const auto& f : r.inconclusive) std::cout << "INCONCLUSIVE: " << f << "\n";
    emit(report, output);
    if (!r.failures.empty()) return 2;
    if (!r.inconclusive.empty()) return 1;
    return 0;
}

int cmd_lemma_suite(int samples, std::uint64_t seed, const std::string& output) {
    lcw::LemmaSuiteReport r = lcw::run_lemma_suite(samples, seed);
    json report = {{"schema_version", kSchemaVersion},
                   {"operation", "lemma-suite"},
                   {"samples", r.instances},
                   {"fiber_checks", r.fiber_checks},
                   {"tuple_checks", r.tuple_checks},
                   {"cover_checks", r.cover_checks},
                   {"violations", r.violations}};
    std::cout << r.instances << " instances, " << r.fiber_checks << " fiber checks, "
              << r.tuple_checks << " tuple checks, " << r.cover_checks << " cover checks, "
              << r.violations.size() << " violations\n";
    int rc = 0;
    if (!r.ok()) {
        std::string all;
        for (const auto& v : r.violations) all += v + "\n";
        std::string path = dump_falsification("lemma-suite", all);
        std::cout << "violations dumped to " << path << "\n";
        rc = 2;
    }
    emit(report, output);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"list-coloring verification toolkit"};
    app.require_subcommand(1);

    std::string expr, lists_path, csv_path, output;
    int k = 0, n = 0, a = 0, b = 0;
    int random_count = 0;
    int n_max = 50, a_max = 200;
    int precision = lcw::kDefaultPrecision;
    long grid_den = 64;
    int samples = 1000;
    std::uint64_t seed = 1;
    int workers = 1;
    bool no_cache = false, force = false, verify = false, grid = false;

    app.add_option("--workers", workers, "worker pool size (never affects verdicts)");
    app.add_option("--seed", seed, "seed for randomized suites");
    app.add_option("--output", output, "write a JSON report here");

    auto* c_chi = app.add_subcommand("chi-list", "list chromatic number with a hard assignment");
    c_chi->add_option("expr", expr)->required();
    c_chi->add_flag("--no-cache", no_cache);
    c_chi->add_flag("--force", force, "override enumeration guards");

    auto* c_lcf = app.add_subcommand("lcf", "minimum proper-coloring count over k-assignments");
    c_lcf->add_option("expr", expr)->required();
    c_lcf->add_option("k", k)->required();
    c_lcf->add_flag("--no-cache", no_cache);
    c_lcf->add_flag("--force", force);

    auto* c_chrom = app.add_subcommand("chromatic", "chromatic polynomial value P(G, k)");
    c_chrom->add_option("expr", expr)->required();
    c_chrom->add_option("k", k)->required();

    auto* c_scc = app.add_subcommand("scc", "strong chromatic-choosability decision");
    c_scc->add_option("expr", expr)->required();
    c_scc->add_flag("--force", force);

    auto* c_fa = app.add_subcommand("fa", "smallest non-choosable fiber count for a base graph");
    c_fa->add_option("expr", expr)->required();
    c_fa->add_option("a", a)->required();
    c_fa->add_flag("--force", force);

    auto* c_wit = app.add_subcommand("witness", "extremal hard assignment at the threshold");
    c_wit->add_option("n", n)->required();
    c_wit->add_option("a", a)->required();
    c_wit->add_flag("--verify", verify, "confirm non-colorability via the certifier");

    auto* c_cert = app.add_subcommand("certify", "certify or color a product assignment");
    c_cert->add_option("n", n)->required();
    c_cert->add_option("a", a)->required();
    c_cert->add_option("b", b)->required();
    c_cert->add_option("--lists", lists_path, "assignment file, one 'v: c1 c2 ...' line per vertex");
    c_cert->add_option("--random", random_count, "seeded random disjoint-row assignments");
    c_cert->add_flag("--force", force);

    auto* c_opt = app.add_subcommand("optlemma", "closed form vs brute force on the grid");
    c_opt->add_flag("--grid", grid, "sweep n,k <= 6, C <= 12, k < m <= k(n+1)");

    auto* c_sweep = app.add_subcommand("key-sweep", "key inequality over an (n, a, s) range");
    c_sweep->add_option("--n-max", n_max);
    c_sweep->add_option("--a-max", a_max);
    c_sweep->add_option("--precision", precision);
    c_sweep->add_option("--csv", csv_path, "write the CSV here (default: stdout)");

    auto* c_facts = app.add_subcommand("facts", "certified calculus-fact verification");
    c_facts->add_option("--precision", precision);
    c_facts->add_option("--grid-den", grid_den, "grid resolution denominator");

    auto* c_suite = app.add_subcommand("lemma-suite", "randomized product-machinery property suite");
    c_suite->add_option("--samples", samples);

    // Global options (--seed, --output, --workers) may follow the subcommand.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_chi->parsed()) return cmd_chi_list(expr, no_cache, force, output);
        if (c_lcf->parsed()) return cmd_lcf(expr, k, no_cache, force, output);
        if (c_chrom->parsed()) return cmd_chromatic(expr, k, output);
        if (c_scc->parsed()) return cmd_scc(expr, force, output);
        if (c_fa->parsed()) return cmd_fa(expr, a, force, output);
        if (c_wit->parsed()) return cmd_witness(n, a, verify, output);
        if (c_cert->parsed()) {
            if (lists_path.empty() && random_count <= 0)
                throw CLI::ValidationError("certify", "need --lists or --random");
            return cmd_certify(n, a, b, lists_path, random_count, seed, force, output);
        }
        if (c_opt->parsed()) {
            if (!grid) throw CLI::ValidationError("optlemma", "only --grid mode is implemented");
            return cmd_optlemma(output);
        }
        if (c_sweep->parsed()) return cmd_key_sweep(n_max, a_max, precision, csv_path, output);
        if (c_facts->parsed()) return cmd_facts(precision, grid_den, output);
        if (c_suite->parsed()) return cmd_lemma_suite(samples, seed, output);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
