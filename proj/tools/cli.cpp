#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "satforge/audit.hpp"
#include "satforge/construction.hpp"
#include "satforge/corpus_io.hpp"
#include "satforge/errors.hpp"
#include "satforge/graph6.hpp"
#include "satforge/saturation.hpp"
#include "satforge/search.hpp"

namespace satforge::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int n = 0;
    std::string n_range;
    int k = 6;
    std::string input;
    std::string out;
    std::uint64_t budget_nodes = 0;
    double budget_secs = 0;
    std::string dump_stages;
    bool strict_levels = false;
    bool witnesses = false;
};

std::pair<int, int> resolve_range(const RunConfig& cfg, const CLI::App& sub) {
    const bool has_n = sub.count("--n") > 0;
    const bool has_range = !cfg.n_range.empty();
    if (has_n == has_range) throw UsageError("give exactly one of --n or --n-range");
    if (has_n) return {cfg.n, cfg.n};
    const auto dots = cfg.n_range.find("..");
    if (dots == std::string::npos) throw UsageError("--n-range must look like A..B");
    try {
        const int a = std::stoi(cfg.n_range.substr(0, dots));
        const int b = std::stoi(cfg.n_range.substr(dots + 2));
        if (b < a) throw UsageError("--n-range is empty");
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("--n-range must look like A..B");
    }
}

std::vector<Graph> load_graphs(const std::string& path) {
    std::vector<Graph> graphs;
    try {
        graphs = read_graph6_file(path);
    } catch (const Graph6Error& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
    if (graphs.empty()) throw UsageError(path + ": no graphs in file");
    return graphs;
}

std::optional<std::filesystem::path> corpus_dir() {
    const char* env = std::getenv("SATFORGE_CORPUS");
    if (env == nullptr || *env == '\0') return std::nullopt;
    return std::filesystem::path(env);
}

int cmd_construct(const RunConfig& cfg, const CLI::App& sub, std::ostream& out) {
    const auto [first, last] = resolve_range(cfg, sub);
    if (first < 9) throw UsageError("the construction needs n >= 9");
    if (last > kMaxVertices) throw UsageError("the construction supports n <= 64");
    std::ofstream file;
    if (!cfg.out.empty()) {
        std::filesystem::path p(cfg.out);
        if (std::filesystem::is_directory(p)) {
            p /= first == last ? "construction_" + std::to_string(first) + ".g6"
                               : "construction_" + std::to_string(first) + "_" + std::to_string(last) + ".g6";
        }
        file.open(p);
        if (!file) throw UsageError("cannot write " + p.string());
    }
    bool all_ok = true;
    for (int n = first; n <= last; ++n) {
        const Graph g = build_construction(n).first;
        const int bound = upper_bound_edges(n);
        const bool saturated = is_saturated(g, 6);
        const bool ok = saturated && g.edge_count() == bound;
        all_ok = all_ok && ok;
        if (first != last) out << "n=" << n << ' ';
        out << "edges=" << g.edge_count() << " bound=" << bound << ' '
            << (ok ? "OK" : saturated ? "MISMATCH" : "NOT-SATURATED") << '\n';
        if (file.is_open()) file << to_graph6(g) << '\n';
    }
    return all_ok ? kOk : kVerdictFailure;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    if (cfg.k < 3) throw UsageError("--k must be at least 3");
    const auto graphs = load_graphs(cfg.input);
    bool all = true;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const SaturationReport r = check_saturated(graphs[i], cfg.k);
        out << "graph " << i + 1 << ": " << to_string(r.verdict);
        if (r.verdict == Verdict::not_free) {
            out << " cycle " << r.free_violation->str();
        } else if (r.verdict == Verdict::missing_witness) {
            out << " non-edges";
            for (const auto& [u, v] : r.missing) out << ' ' << u << '-' << v;
        } else {
            out << " (" << r.witnesses.size() << " witnesses)";
        }
        out << '\n';
        if (cfg.witnesses && r.saturated()) out << r.witness_lines();
        all = all && r.saturated();
    }
    return all ? kOk : kVerdictFailure;
}

int cmd_search(const RunConfig& cfg, const CLI::App& sub, std::ostream& out) {
    if (cfg.k < 3) throw UsageError("--k must be at least 3");
    const auto [first, last] = resolve_range(cfg, sub);
    if (first < 1 || last > 12) throw UsageError("search supports 1 <= n <= 12");
    const SearchBudget budget{cfg.budget_nodes, cfg.budget_secs};
    bool exhausted = false;
    for (int n = first; n <= last; ++n) {
        const SearchResult r = min_saturated_edges(n, cfg.k, budget);
        if (first != last) out << "n=" << n << ' ';
        if (r.sat) out << "sat=" << *r.sat << ' ';
        out << "status=" << to_string(r.status) << " explored=" << r.explored << " extremal=" << r.extremal.size()
            << '\n';
        if (!cfg.out.empty()) write_search_result(cfg.out, r);
        exhausted = exhausted || r.status == SearchStatus::budget_exhausted;
    }
    return exhausted ? kBudgetExhausted : kOk;
}

std::vector<Stage> parse_stages(const std::string& spec) {
    std::vector<Stage> stages;
    if (spec.empty()) return stages;
    std::istringstream is(spec);
    for (std::string token; std::getline(is, token, ',');) {
        if (token == "all") {
            for (int i = 0; i < kStageCount; ++i) stages.push_back(static_cast<Stage>(i));
            continue;
        }
        const auto s = parse_stage(token);
        if (!s) throw UsageError("unknown stage '" + token + "'");
        stages.push_back(*s);
    }
    return stages;
}

int cmd_audit(const RunConfig& cfg, std::ostream& out) {
    const auto stages = parse_stages(cfg.dump_stages);
    const auto graphs = load_graphs(cfg.input);
    std::vector<SummaryRow> corpus;
    if (const auto dir = corpus_dir()) corpus = read_summary(*dir);
    bool all = true;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs.size() > 1) out << "== graph " << i + 1 << " ==\n";
        DischargeAudit a;
        try {
            a = audit(graphs[i]);
        } catch (const PreconditionError& e) {
            out << "precondition failure: " << e.what() << '\n';
            all = false;
            continue;
        } catch (const BookkeepingError& e) {
            out << "bookkeeping failure: " << e.what() << '\n';
            all = false;
            continue;
        }
        if (cfg.strict_levels && a.ledger) {
            const bool valid = a.ledger->partition.is_valid_for(a.ledger->graph) && a.ledger->partition.depth() <= 5;
            a.checks.push_back({"level invariants", valid,
                                "depth " + std::to_string(a.ledger->partition.depth()) +
                                    (valid ? ", layering re-derived from scratch" : ", layering mismatch"),
                                false});
        }
        out << a.render();
        if (const auto row = find_row(corpus, a.n, 6); row && row->sat) {
            out << "corpus: sat(" << a.n << ", C6) = " << *row->sat << ", this graph has " << a.edges - *row->sat
                << " more edges\n";
        }
        if (!stages.empty()) {
            if (a.ledger) out << a.ledger->table(stages);
            else out << "no ledger: the " << to_string(a.branch) << " branch does not run the charges\n";
        }
        all = all && a.passed(cfg.strict_levels);
    }
    return all ? kOk : kVerdictFailure;
}

int cmd_table(const RunConfig& cfg, const CLI::App& sub, std::ostream& out) {
    const auto [first, last] = resolve_range(cfg, sub);
    if (first < 9 || last > kMaxVertices) throw UsageError("the table covers 9 <= n <= 64");
    std::vector<SummaryRow> corpus;
    if (const auto dir = corpus_dir()) corpus = read_summary(*dir);
    out << "n\tlower\tupper\tconstruction\texact\n";
    for (int n = first; n <= last; ++n) {
        const auto row = find_row(corpus, n, 6);
        out << n << '\t' << lower_bound_edges(n) << '\t' << upper_bound_edges(n) << '\t'
            << build_construction(n).first.edge_count() << '\t'
            << (row && row->sat && row->status == SearchStatus::complete ? std::to_string(*row->sat) : "-") << '\n';
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"C_k-saturation toolkit: constructions, certificates, exact search and charge audits", "satforge"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* construct = app.add_subcommand("construct", "build the extremal C_6-saturated family and check its size");
    construct->add_option("--n", cfg.n, "number of vertices");
    construct->add_option("--n-range", cfg.n_range, "range A..B of vertex counts");
    construct->add_option("--out", cfg.out, "graph6 output file or directory");

    auto* check = app.add_subcommand("check", "certify C_k-saturation of every graph in a graph6 file");
    check->add_option("file", cfg.input, "graph6 input")->required();
    check->add_option("--k", cfg.k, "cycle length");
    check->add_flag("--witnesses", cfg.witnesses, "print one witness cycle per non-edge");

    auto* search = app.add_subcommand("search", "exact sat(n, C_k) by exhaustive search");
    search->add_option("--n", cfg.n, "number of vertices");
    search->add_option("--n-range", cfg.n_range, "range A..B of vertex counts");
    search->add_option("--k", cfg.k, "cycle length");
    search->add_option("--out", cfg.out, "result directory (sat_{n}_{k}.g6 and summary.txt)");
    search->add_option("--budget-nodes", cfg.budget_nodes, "node limit, 0 for none");
    search->add_option("--budget-secs", cfg.budget_secs, "wall-clock limit in seconds, 0 for none");

    auto* audit_cmd = app.add_subcommand("audit", "audit the edge lower bound on C_6-saturated graphs");
    audit_cmd->add_option("file", cfg.input, "graph6 input")->required();
    audit_cmd->add_option("--dump-stages", cfg.dump_stages, "comma-separated stages to dump, e.g. g,g5,f7 or all");
    audit_cmd->add_flag("--strict-levels", cfg.strict_levels, "re-check the layering and fail on diagnostic checks");

    auto* table = app.add_subcommand("table", "bounds table for sat(n, C_6)");
    table->add_option("--n", cfg.n, "number of vertices");
    table->add_option("--n-range", cfg.n_range, "range A..B of vertex counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*construct) return cmd_construct(cfg, *construct, out);
        if (*check) return cmd_check(cfg, out);
        if (*search) return cmd_search(cfg, *search, out);
        if (*audit_cmd) return cmd_audit(cfg, out);
        if (*table) return cmd_table(cfg, *table, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("satforge");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace satforge::cli
