#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cylrig/constructions.hpp"
#include "cylrig/graph.hpp"
#include "cylrig/json_io.hpp"
#include "cylrig/reference_data.hpp"
#include "support.hpp"

using namespace cylrig;
using nlohmann::json;
using testsupport::RunResult;
using testsupport::run_command;

#ifndef CYLRIG_CLI_PATH
#error "CYLRIG_CLI_PATH must point at the built cylrig binary"
#endif

namespace {

std::string cli() { return std::string(CYLRIG_CLI_PATH); }

// Runs the CLI with stderr folded into the captured stream, so usage errors
// are assertable too.
RunResult run_cli(const std::string& args) {
    return run_command(cli() + " " + args + " 2>&1");
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

class TempFile {
public:
    TempFile(const std::string& name, const std::string& content)
        : path_("/tmp/cylrig_cli_" + name) {
        std::ofstream out(path_, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

TempFile graph_file(const std::string& name, const Graph& g) {
    return TempFile(name, graph_to_text(g));
}

} // namespace

TEST_CASE("cli: rigid exit codes and both output modes") {
    const TempFile yes = graph_file("k5e.txt", base_graph("K5-e"));
    const TempFile no = graph_file("path.txt", Graph(3, {{0, 1}, {1, 2}}));

    const RunResult pos = run_cli("rigid " + yes.path());
    CHECK(pos.status == 0);
    CHECK(contains(pos.out, "rigid: true"));

    const RunResult neg = run_cli("rigid " + no.path());
    CHECK(neg.status == 1);
    CHECK(contains(neg.out, "rigid: false"));

    const RunResult js = run_cli("--json rigid " + yes.path());
    CHECK(js.status == 0);
    const json j = json::parse(js.out);
    CHECK(j.at("answer") == true);
    CHECK(j.at("theorem") == "1.1");
    CHECK(j.at("format") == 1);

    // Global flags may follow the subcommand as well.
    const RunResult trailing = run_cli("rigid " + yes.path() + " --json");
    CHECK(trailing.status == 0);
    CHECK(json::parse(trailing.out) == j);
}

TEST_CASE("cli: global and circuit subcommands") {
    const TempFile k5e = graph_file("g_k5e.txt", base_graph("K5-e"));
    const TempFile bt =
        TempFile("bowtie.txt",
                 graph_to_text(Graph(
                     5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}})));
    const TempFile k4 = graph_file("g_k4.txt", base_graph("K4"));

    CHECK(run_cli("global " + k5e.path()).status == 0);
    const RunResult cut = run_cli("--json global " + bt.path());
    CHECK(cut.status == 1);
    CHECK(json::parse(cut.out).at("certificate").at("kind") == "cut-vertex");

    CHECK(run_cli("circuit " + k5e.path()).status == 0);
    CHECK(run_cli("circuit " + k4.path()).status == 1);
}

TEST_CASE("cli: vfree and vr subcommands") {
    const Graph pend = zero_extension(base_graph("K5-e"), 0, 1);
    const TempFile g = graph_file("pendant.txt", pend);

    CHECK(run_cli("vfree --vertex 0 " + g.path()).status == 0);
    CHECK(run_cli("vfree --vertex 5 " + g.path()).status == 1);
    CHECK(run_cli("vfree --vertex 9 " + g.path()).status == 2);

    const TempFile c4 =
        graph_file("c4.txt", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    CHECK(run_cli("vr " + c4.path()).status == 0);
    CHECK(run_cli("vr --property minimal " + c4.path()).status == 0);
    CHECK(run_cli("vr --property global " + c4.path()).status == 1);
    const RunResult bad = run_cli("vr --property verygid " + c4.path());
    CHECK(bad.status == 2);
}

TEST_CASE("cli: reduce emits a replayable trace") {
    const TempFile h2 = graph_file("h2.txt", base_graph("H2"));
    const RunResult r = run_cli("--json reduce " + h2.path());
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("base") == "H1");
    const ConstructionTrace t = trace_from_json(j);
    CHECK(replay(t) == base_graph("H2"));

    // Non-circuits are rejected with a reason on exit 1.
    const TempFile k4 = graph_file("r_k4.txt", base_graph("K4"));
    CHECK(run_cli("reduce " + k4.path()).status == 1);
}

TEST_CASE("cli: construct is seeded and deterministic") {
    const RunResult a = run_cli("--json --seed 5 construct --n 7");
    const RunResult b = run_cli("--json --seed 5 construct --n 7");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    const json j = json::parse(a.out);
    const Graph g = graph_from_json(j.at("graph"));
    CHECK(g.n == 7);
    CHECK(g.m() == 13);
    CHECK(replay(trace_from_json(j.at("trace"))) == g);

    const RunResult c = run_cli("--json --seed 6 construct --n 7");
    CHECK(c.out != a.out);

    CHECK(run_cli("construct --n 4").status == 2); // circuits need n >= 5
}

TEST_CASE("cli: stress finds the unique circuit stress") {
    const TempFile fw =
        TempFile("ref.json",
                 emit(framework_to_json(reference_case("K5-e").framework)));
    const RunResult r = run_cli("--json stress " + fw.path());
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("stress").at("omega").size() == 9);
    CHECK(j.at("rank_stress_matrix") == 9);

    // Independent edge sets have no stress: exit 1.
    Rng rng(3);
    const TempFile k4fw =
        TempFile("k4fw.json",
                 emit(framework_to_json(random_framework(base_graph("K4"), rng))));
    CHECK(run_cli("stress " + k4fw.path()).status == 1);
}

TEST_CASE("cli: verify-appendix passes and detects corruption") {
    const RunResult ok = run_cli("verify-appendix");
    CHECK(ok.status == 0);
    CHECK(contains(ok.out, "K5-e"));
    CHECK(contains(ok.out, "H2"));
    CHECK(!contains(ok.out, "FAIL"));

    const RunResult bad = run_cli("verify-appendix --corrupt-stress");
    CHECK(bad.status == 1);
    CHECK(contains(bad.out, "residual_zero"));

    const RunResult f64 = run_cli("--scalar f64 verify-appendix");
    CHECK(f64.status == 0);
}

TEST_CASE("cli: cross-validate is seeded and agrees") {
    const std::string args = "--json --seed 11 cross-validate --count 6 --n-max 5";
    const RunResult a = run_cli(args);
    CHECK(a.status == 0);
    const json j = json::parse(a.out);
    CHECK(j.at("all_agree") == true);
    CHECK(j.at("count") == 6);
    CHECK(j.at("graphs").size() == 6);

    const RunResult b = run_cli(args);
    CHECK(b.out == a.out);
}

TEST_CASE("cli: usage errors exit with code 2") {
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("frobnicate /tmp/x").status == 2);
    CHECK(run_cli("rigid").status == 2);               // missing file operand
    CHECK(run_cli("rigid /tmp/definitely_absent_graph.txt").status == 2);
    CHECK(run_cli("--scalar decimal verify-appendix").status == 2);
    const RunResult help = run_cli("--help");
    CHECK(help.status == 0);
    CHECK(contains(help.out, "rigid"));
}
