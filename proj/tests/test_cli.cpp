#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "satforge/construction.hpp"
#include "satforge/graph6.hpp"

using namespace satforge;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_g6(const std::string& name, const std::vector<std::string>& lines) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p);
    for (const auto& l : lines) f << l << '\n';
    return p;
}

}  // namespace

TEST_CASE("construct") {
    const Outcome a = run({"construct", "--n", "12"});
    CHECK(a.code == cli::kOk);
    CHECK(a.out == "edges=16 bound=16 OK\n");
    const Outcome b = run({"construct", "--n-range", "9..11"});
    CHECK(b.code == cli::kOk);
    CHECK(b.out == "n=9 edges=12 bound=12 OK\nn=10 edges=13 bound=13 OK\nn=11 edges=15 bound=15 OK\n");
    CHECK(run({"construct", "--n", "8"}).code == cli::kUsageError);
    CHECK(run({"construct", "--n", "9", "--n-range", "9..10"}).code == cli::kUsageError);
    CHECK(run({"construct", "--n-range", "10..9"}).code == cli::kUsageError);

    const auto out = std::filesystem::temp_directory_path() / "satforge_cli_construct.g6";
    CHECK(run({"construct", "--n", "9", "--out", out.string()}).code == cli::kOk);
    CHECK(read_graph6_file(out.string()) == std::vector<Graph>{build_construction(9).first});
}

TEST_CASE("check") {
    const auto file = write_g6("satforge_cli_check.g6", {"HtTS?D@", "EhEG", "Cl"});
    const Outcome r = run({"check", file.string()});
    CHECK(r.code == cli::kVerdictFailure);
    std::istringstream lines(r.out);
    std::string l1, l2, l3;
    std::getline(lines, l1);
    std::getline(lines, l2);
    std::getline(lines, l3);
    CHECK(l1 == "graph 1: saturated (24 witnesses)");
    CHECK(l2 == "graph 2: not-free cycle 0 5 4 3 2 1");
    CHECK(l3.rfind("graph 3: missing-witness non-edges 0-2 1-3", 0) == 0);

    const auto k4 = write_g6("satforge_cli_k4.g6", {"C~"});
    const Outcome w = run({"check", k4.string(), "--k", "5", "--witnesses"});
    CHECK(w.code == cli::kOk);
    CHECK(w.out == "graph 1: saturated (0 witnesses)\n");
    CHECK(run({"check", write_g6("satforge_cli_empty.g6", {}).string()}).code == cli::kUsageError);
    CHECK(run({"check", "/nonexistent.g6"}).code == cli::kUsageError);
    CHECK(run({"check", write_g6("satforge_cli_bad.g6", {"Clx"}).string()}).code == cli::kUsageError);
}

TEST_CASE("search") {
    const auto dir = std::filesystem::temp_directory_path() / "satforge_cli_search";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const Outcome r = run({"search", "--n", "6", "--k", "6", "--out", dir.string()});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.rfind("sat=9 status=complete explored=", 0) == 0);
    CHECK(std::filesystem::exists(dir / "sat_6_6.g6"));
    CHECK(std::filesystem::exists(dir / "summary.txt"));

    const Outcome b = run({"search", "--n", "10", "--k", "6", "--budget-nodes", "10"});
    CHECK(b.code == cli::kBudgetExhausted);
    CHECK(b.out.find("status=budget-exhausted") != std::string::npos);
    CHECK(run({"search", "--n", "13"}).code == cli::kUsageError);
    CHECK(run({"search", "--n", "6", "--k", "2"}).code == cli::kUsageError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("audit") {
    const auto k5 = write_g6("satforge_cli_k5.g6", {"D~{"});
    const Outcome a = run({"audit", k5.string()});
    CHECK(a.code == cli::kOk);
    CHECK(a.out.find("δ≥3 branch: 10 ≥ 7.5") != std::string::npos);
    CHECK(a.out.find("verdict: PASS") != std::string::npos);

    const auto g9 = write_g6("satforge_cli_g9.g6", {"HtTS?D@"});
    const Outcome b = run({"audit", g9.string(), "--dump-stages", "g,g*,f7", "--strict-levels"});
    CHECK(b.code == cli::kOk);
    CHECK(b.out.find("level invariants") != std::string::npos);
    CHECK(b.out.find("stage\tvertex\tlevel\tclass\tvalue") != std::string::npos);
    CHECK(b.out.find("f7\t1\t") != std::string::npos);

    const auto c7 = write_g6("satforge_cli_c7.g6", {to_graph6(Graph::cycle(7))});
    const Outcome c = run({"audit", c7.string()});
    CHECK(c.code == cli::kVerdictFailure);
    CHECK(c.out.rfind("precondition failure: ", 0) == 0);
    CHECK(run({"audit", g9.string(), "--dump-stages", "h9"}).code == cli::kUsageError);
}

TEST_CASE("table and usage") {
    const Outcome t = run({"table", "--n-range", "9..10"});
    CHECK(t.code == cli::kOk);
    CHECK(t.out.rfind("n\tlower\tupper\tconstruction\texact\n9\t10\t12\t12\t", 0) == 0);
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"frobnicate"}).code == cli::kUsageError);
    CHECK(run({"--help"}).code == cli::kOk);
}
