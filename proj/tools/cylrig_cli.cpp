// Command-line front end: file I/O and one subcommand per decider / engine
// feature, with human-readable text output by default and versioned JSON
// behind --json.  Exit codes: 0 = the queried property holds, 1 = it fails
// (or no certificate / agreement), 2 = input or usage error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cylrig/constructions.hpp"
#include "cylrig/decide.hpp"
#include "cylrig/framework.hpp"
#include "cylrig/json_io.hpp"
#include "cylrig/matrix.hpp"
#include "cylrig/reference_data.hpp"
#include "cylrig/sparsity.hpp"
#include "cylrig/stress.hpp"

using namespace cylrig;

namespace {

using nlohmann::json;

struct RunConfig {
    bool json = false;
    std::string scalar = "rational"; // rational | quadratic | f64
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    int cap = 24;

    bool exact() const { return scalar != "f64"; }
};

// Sampling width for the corpus subcommand: random rationals with numerators
// and denominators up to 2^16, small enough to keep exact ranks fast and wide
// enough that degenerate samples are vanishingly rare (and resampled).
constexpr int kCorpusBits = 16;

std::string bool_word(bool b) { return b ? "true" : "false"; }

std::string describe_certificate(const json& c) {
    const std::string kind = c.value("kind", "none");
    if (kind == "complete-small-graph")
        return "complete graph on " + std::to_string(c.value("n", 0)) +
               " vertices";
    if (kind == "rank-witness")
        return "rank-witness (rank " + std::to_string(c.value("rank", 0)) +
               " of " + std::to_string(c.value("required", 0)) + ")";
    if (kind == "cut-vertex")
        return "cut vertex " + std::to_string(c.value("vertex", -1));
    if (kind == "disconnected" && c.contains("vertices"))
        return "vertices " + c["vertices"][0].dump() + " and " +
               c["vertices"][1].dump() + " lie in different components";
    if (kind == "non-redundant-edge" && c.contains("edge"))
        return "non-redundant edge (" + c["edge"][0].dump() + ", " +
               c["edge"][1].dump() + ")";
    if (kind == "circuit-containing-vertex")
        return "circuit with " +
               std::to_string(c.value("circuit", json::array()).size()) +
               " edges through vertex " + std::to_string(c.value("vertex", -1));
    if (kind == "stress-with-rank")
        return "equilibrium stress with stress-matrix rank " +
               std::to_string(c.value("rank_stress_matrix", 0)) + " of " +
               std::to_string(c.value("max_rank", 0));
    std::string out = "none";
    if (c.contains("detail")) out += " (" + c.value("detail", "") + ")";
    return out;
}

int report_verdict(const RunConfig& cfg, const std::string& name,
                   const Verdict& v) {
    if (cfg.json) {
        std::cout << emit(verdict_to_json(v));
    } else {
        std::cout << name << ": " << bool_word(v.answer) << "   [rule "
                  << v.theorem << "]\n"
                  << "certificate: " << describe_certificate(v.certificate)
                  << "\n";
    }
    return v.answer ? 0 : 1;
}

int cmd_rigid(const RunConfig& cfg, const std::string& path) {
    return report_verdict(cfg, "rigid", rigid(load_graph(path)));
}

int cmd_global(const RunConfig& cfg, const std::string& path) {
    return report_verdict(cfg, "globally-rigid", globally_rigid(load_graph(path)));
}

int cmd_vfree(const RunConfig& cfg, const std::string& path, int vertex) {
    return report_verdict(cfg, "vfree-rigid", vfree_rigid(load_graph(path), vertex));
}

int cmd_vr(const RunConfig& cfg, const std::string& path,
           const std::string& property) {
    const VrVerdicts v = vr_deciders(load_graph(path));
    if (cfg.json) {
        std::cout << emit({{"minimally_rigid", verdict_to_json(v.minimally_rigid)},
                           {"rigid", verdict_to_json(v.rigid)},
                           {"globally_rigid", verdict_to_json(v.globally_rigid)}});
    } else {
        std::cout << "vr-minimally-rigid: " << bool_word(v.minimally_rigid.answer)
                  << "   [rule " << v.minimally_rigid.theorem << "]\n"
                  << "vr-rigid: " << bool_word(v.rigid.answer) << "   [rule "
                  << v.rigid.theorem << ", derived edge-count rule]\n"
                  << "vr-globally-rigid: " << bool_word(v.globally_rigid.answer)
                  << "   [rule " << v.globally_rigid.theorem << "]\n";
    }
    const Verdict& chosen = property == "minimal" ? v.minimally_rigid
                            : property == "global" ? v.globally_rigid
                                                   : v.rigid;
    return chosen.answer ? 0 : 1;
}

int cmd_circuit(const RunConfig& cfg, const std::string& path) {
    const Graph g = load_graph(path);
    CircuitWitness w;
    const bool answer = is_circuit(g, &w);
    if (cfg.json) {
        json j = {{"answer", answer}, {"vertices", g.n}, {"edges", g.m()}};
        if (answer) j["vertex_support"] = w.vertex_support;
        std::cout << emit(std::move(j));
    } else {
        std::cout << "circuit: " << bool_word(answer) << "   (" << g.n
                  << " vertices, " << g.m() << " edges)\n";
    }
    return answer ? 0 : 1;
}

void print_trace_text(const ConstructionTrace& t) {
    std::cout << "base: " << t.base << "\n"
              << "steps: " << t.steps.size() << "\n";
    for (std::size_t i = 0; i < t.steps.size(); ++i)
        std::cout << "  " << i + 1 << ". "
                  << step_kind_name(step_kind(t.steps[i])) << "\n";
}

int cmd_reduce(const RunConfig& cfg, const std::string& path) {
    const Graph g = load_graph(path);
    if (!is_circuit(g)) {
        if (cfg.json) {
            std::cout << emit({{"error", "input is not a circuit"},
                               {"vertices", g.n},
                               {"edges", g.m()}});
        } else {
            std::cout << "not reducible: the input is not a circuit (" << g.m()
                      << " edges on " << g.n << " vertices; a circuit has "
                      << "2n-1 edges with every proper subset independent)\n";
        }
        return 1;
    }
    try {
        const ConstructionTrace t = reduce_to_base(g);
        if (cfg.json) {
            std::cout << emit(trace_to_json(t));
        } else {
            print_trace_text(t);
        }
        return 0;
    } catch (const ReductionStuck& stuck) {
        if (cfg.json) {
            std::cout << emit({{"error", stuck.what()},
                               {"stuck", graph_to_json(stuck.graph)}});
        } else {
            std::cout << "stuck: " << stuck.what() << "\n"
                      << graph_to_text(stuck.graph);
        }
        return 1;
    }
}

int cmd_construct(const RunConfig& cfg, int n) {
    Rng rng(cfg.seed);
    const RandomCircuit rc = random_circuit(n, rng);
    if (cfg.json) {
        std::cout << emit({{"graph", graph_to_json(rc.graph)},
                           {"trace", trace_to_json(rc.trace)}});
    } else {
        std::cout << graph_to_text(rc.graph);
        print_trace_text(rc.trace);
    }
    return 0;
}

int cmd_stress(const RunConfig& cfg, const std::string& path, bool any) {
    const Framework<Quad> f = load_framework(path);
    const int n = f.graph.n;
    const int m = f.graph.m();
    const Mat<Quad> r = rigidity_matrix(f);
    const auto coker = left_nullspace(r);
    const int dim = static_cast<int>(coker.size());
    if (dim == 0 || (dim != 1 && !any)) {
        const std::string why =
            dim == 0 ? "no nonzero equilibrium stress exists"
                     : "cokernel dimension is " + std::to_string(dim) +
                           " (pass --any to pick one stress)";
        if (cfg.json)
            std::cout << emit({{"cokernel_dimension", dim}, {"error", why}});
        else
            std::cout << "no stress: " << why << "\n";
        return 1;
    }

    Stress<Quad> s;
    s.omega.assign(coker[0].begin(), coker[0].begin() + m);
    s.lambda.assign(coker[0].begin() + m, coker[0].end());
    int lead = -1;
    for (int i = 0; i < m && lead < 0; ++i)
        if (sign(s.omega[i]) != 0) lead = i;
    if (lead < 0) throw std::logic_error("stress with zero omega");
    const Quad scale = Quad(Rat(1)) / s.omega[lead];
    for (Quad& w : s.omega) w *= scale;
    for (Quad& l : s.lambda) l *= scale;
    if (!verify_stress(f, s))
        throw std::logic_error("cokernel vector fails the stress equations");

    const auto rep = stress_matrix_rank(f, s);
    int rank_r = (m + n) - dim;
    int rank_o = rep.rank_total;
    if (!cfg.exact()) {
        rank_r = rank_f64(to_f64(r), cfg.tolerance);
        rank_o = rank_f64(to_f64(rep.omega_cyl()), cfg.tolerance);
    }
    const bool max_rank = rank_o == 3 * n - 6;

    if (cfg.json) {
        std::cout << emit({{"cokernel_dimension", dim},
                           {"stress", stress_to_json(s)},
                           {"rank_rigidity", rank_r},
                           {"rank_stress_matrix", rank_o},
                           {"max_rank", max_rank}});
    } else {
        std::cout << "cokernel dimension: " << dim << "\n";
        std::cout << "omega:";
        for (const Quad& w : s.omega) std::cout << " " << quad_format(w);
        std::cout << "\nlambda:";
        for (const Quad& l : s.lambda) std::cout << " " << quad_format(l);
        std::cout << "\nrank R_cyl: " << rank_r << " (3n-2 = " << 3 * n - 2
                  << ")\n"
                  << "rank Omega_cyl: " << rank_o << " (3n-6 = " << 3 * n - 6
                  << ", maximum: " << (max_rank ? "yes" : "no") << ")\n";
    }
    return 0;
}

// One appendix case: rank of the rigidity matrix, exact-zero stress residual,
// stress-matrix rank, and projective agreement of the computed cokernel
// stress with the embedded one.  In f64 mode the two ranks come from singular
// values at --tolerance and the comparisons allow the same tolerance.
json verify_one_case(const ReferenceCase& c, const RunConfig& cfg, bool corrupt,
                     bool& case_pass) {
    Stress<Quad> published = c.stress;
    if (corrupt) published.omega[0] += Quad(Rat(1));
    const int n = c.framework.graph.n;
    json checks;
    case_pass = true;

    const Mat<Quad> r = rigidity_matrix(c.framework);
    const int rank_r =
        cfg.exact() ? rank_exact(r) : rank_f64(to_f64(r), cfg.tolerance);
    const bool rank_r_ok = rank_r == c.rank_rigidity;
    checks["rank_rigidity"] = {{"got", rank_r},
                               {"want", c.rank_rigidity},
                               {"pass", rank_r_ok}};
    case_pass = case_pass && rank_r_ok;

    bool residual_ok;
    if (cfg.exact()) {
        residual_ok = verify_stress(c.framework, published);
    } else {
        // Evaluate the equilibrium equations in double precision and compare
        // against the magnitude of the summed terms.
        residual_ok = true;
        const auto res = stress_residual(c.framework, published);
        double scale = 1.0;
        for (std::size_t e = 0; e < published.omega.size(); ++e)
            scale = std::max(scale, std::abs(quad_to_double(published.omega[e])));
        for (const auto& row : res)
            for (const Quad& comp : row)
                residual_ok = residual_ok &&
                              std::abs(quad_to_double(comp)) <=
                                  cfg.tolerance * 8 * scale;
    }
    checks["residual_zero"] = {{"pass", residual_ok}};
    case_pass = case_pass && residual_ok;

    if (residual_ok) {
        const auto rep = stress_matrix_rank(c.framework, published);
        const int rank_o = cfg.exact()
                               ? rep.rank_total
                               : rank_f64(to_f64(rep.omega_cyl()), cfg.tolerance);
        const bool rank_o_ok = rank_o == c.rank_stress_matrix &&
                               c.rank_stress_matrix == 3 * n - 6;
        checks["rank_stress_matrix"] = {{"got", rank_o},
                                        {"want", c.rank_stress_matrix},
                                        {"pass", rank_o_ok}};
        case_pass = case_pass && rank_o_ok;

        const Stress<Quad> computed = equilibrium_stress(c.framework);
        int lead = -1;
        for (std::size_t i = 0; i < computed.omega.size() && lead < 0; ++i)
            if (sign(computed.omega[i]) != 0) lead = static_cast<int>(i);
        bool proj = lead >= 0 && sign(published.omega[lead]) != 0;
        if (proj) {
            const Quad scale = Quad(Rat(1)) / published.omega[lead];
            auto close = [&](const Quad& a, const Quad& b) {
                if (cfg.exact()) return a == b;
                return std::abs(quad_to_double(a) - quad_to_double(b)) <=
                       cfg.tolerance * (1 + std::abs(quad_to_double(b)));
            };
            for (std::size_t i = 0; i < computed.omega.size(); ++i)
                proj = proj && close(published.omega[i] * scale, computed.omega[i]);
            for (std::size_t i = 0; i < computed.lambda.size(); ++i)
                proj = proj && close(published.lambda[i] * scale, computed.lambda[i]);
        }
        checks["cokernel_match"] = {{"pass", proj}};
        case_pass = case_pass && proj;
    }
    return checks;
}

int cmd_verify_appendix(const RunConfig& cfg, bool corrupt) {
    json cases = json::array();
    bool all = true;
    int passed = 0;
    for (const ReferenceCase& c : reference_cases()) {
        bool case_pass = false;
        json checks = verify_one_case(c, cfg, corrupt, case_pass);
        all = all && case_pass;
        passed += case_pass ? 1 : 0;
        if (!cfg.json) {
            std::cout << c.name << ":";
            for (const auto& [name, chk] : checks.items())
                std::cout << " " << name << " "
                          << (chk.value("pass", false) ? "ok" : "FAIL");
            std::cout << " -> " << (case_pass ? "pass" : "FAIL") << "\n";
        }
        cases.push_back({{"name", c.name},
                         {"checks", std::move(checks)},
                         {"pass", case_pass}});
    }
    if (cfg.json)
        std::cout << emit({{"cases", std::move(cases)}, {"pass", all}});
    else
        std::cout << "appendix: " << passed << "/3 pass\n";
    return all ? 0 : 1;
}

int cmd_cross_validate(const RunConfig& cfg, int n_max, int count) {
    if (n_max < 1 || count < 0)
        throw std::invalid_argument("cross-validate: need --n-max >= 1, --count >= 0");
    Rng rng(cfg.seed);
    struct Tally {
        int checked = 0, agree = 0, exempt = 0;
    };
    std::map<std::string, Tally> per_theorem;
    json graphs = json::array();
    bool all = true;
    int resampled_graphs = 0;
    for (int i = 0; i < count; ++i) {
        Rng item = rng.fork(static_cast<std::uint64_t>(i));
        const int n = 1 + static_cast<int>(item.next_below(n_max));
        Graph g;
        if (n >= 5 && item.next_below(4) == 0) {
            g = random_circuit(n, item).graph;
        } else {
            const int maxm = n * (n - 1) / 2;
            g = random_graph(n, static_cast<int>(item.next_below(maxm + 1)), item);
        }
        const CrossValidationReport rep = cross_validate(g, item, kCorpusBits);
        json row = {{"n", g.n},
                    {"m", g.m()},
                    {"all_agree", rep.all_agree},
                    {"resampled", rep.resampled}};
        json disagreements = json::array();
        for (const TheoremAgreement& t : rep.checks) {
            Tally& tally = per_theorem[t.theorem];
            if (t.exempt) {
                ++tally.exempt;
            } else {
                ++tally.checked;
                tally.agree += t.agree ? 1 : 0;
            }
            if (!t.agree)
                disagreements.push_back(
                    {{"theorem", t.theorem}, {"detail", t.detail}});
        }
        if (!disagreements.empty()) row["disagreements"] = std::move(disagreements);
        graphs.push_back(std::move(row));
        all = all && rep.all_agree;
        resampled_graphs += rep.resampled ? 1 : 0;
    }
    if (cfg.json) {
        json per = json::object();
        for (const auto& [name, t] : per_theorem)
            per[name] = {{"checked", t.checked},
                         {"agree", t.agree},
                         {"exempt", t.exempt}};
        std::cout << emit({{"count", count},
                           {"n_max", n_max},
                           {"seed", cfg.seed},
                           {"per_theorem", std::move(per)},
                           {"graphs", std::move(graphs)},
                           {"resampled_graphs", resampled_graphs},
                           {"all_agree", all}});
    } else {
        std::cout << "corpus: " << count << " graphs (seed " << cfg.seed
                  << ", n <= " << n_max << ")\n";
        for (const auto& [name, t] : per_theorem)
            std::cout << "theorem " << name << ": " << t.checked
                      << " checked, " << t.agree << " agree, " << t.exempt
                      << " exempt\n";
        std::cout << "resampled: " << resampled_graphs << " graphs\n"
                  << "all agree: " << (all ? "yes" : "no") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"rigidity of graphs and frameworks on the cylinder"};
    app.require_subcommand(1);
    app.add_flag("--json", cfg.json,
                 "emit versioned JSON (\"format\": 1) instead of text");
    app.add_option("--scalar", cfg.scalar,
                   "arithmetic for numeric checks: rational/quadratic are "
                   "exact, f64 uses --tolerance")
        ->check(CLI::IsMember({"rational", "quadratic", "f64"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for all randomised sampling")
        ->capture_default_str();
    app.add_option("--tolerance", cfg.tolerance,
                   "relative singular-value tolerance for --scalar f64")
        ->capture_default_str();
    app.add_option("--cap", cfg.cap,
                   "edge cap for circuit-enumeration diagnostics")
        ->capture_default_str();

    int exit_code = 0;

    std::string rigid_path;
    auto* c_rigid = app.add_subcommand("rigid", "decide rigidity on the cylinder");
    c_rigid->add_option("graph", rigid_path, "graph file (JSON or edge list)")
        ->required();
    c_rigid->callback([&] { exit_code = cmd_rigid(cfg, rigid_path); });

    std::string global_path;
    auto* c_global =
        app.add_subcommand("global", "decide generic global rigidity");
    c_global->add_option("graph", global_path, "graph file (JSON or edge list)")
        ->required();
    c_global->callback([&] { exit_code = cmd_global(cfg, global_path); });

    std::string circuit_path;
    auto* c_circuit =
        app.add_subcommand("circuit", "test whether the edge set is a circuit");
    c_circuit->add_option("graph", circuit_path, "graph file (JSON or edge list)")
        ->required();
    c_circuit->callback([&] { exit_code = cmd_circuit(cfg, circuit_path); });

    std::string reduce_path;
    auto* c_reduce = app.add_subcommand(
        "reduce", "reduce a circuit to a base graph, emitting the trace");
    c_reduce->add_option("graph", reduce_path, "graph file (JSON or edge list)")
        ->required();
    c_reduce->callback([&] { exit_code = cmd_reduce(cfg, reduce_path); });

    int construct_n = 0;
    auto* c_construct = app.add_subcommand(
        "construct", "construct a seeded random circuit with its trace");
    c_construct->add_option("--n", construct_n, "vertex count (>= 5)")
        ->required();
    c_construct->callback([&] { exit_code = cmd_construct(cfg, construct_n); });

    std::string stress_path;
    bool stress_any = false;
    auto* c_stress = app.add_subcommand(
        "stress", "equilibrium stress and stress-matrix ranks of a framework");
    c_stress->add_option("framework", stress_path, "framework JSON file")
        ->required();
    c_stress->add_flag("--any", stress_any,
                       "pick a stress even when the cokernel dimension is not 1");
    c_stress->callback(
        [&] { exit_code = cmd_stress(cfg, stress_path, stress_any); });

    std::string vfree_path;
    int vfree_vertex = 0;
    auto* c_vfree =
        app.add_subcommand("vfree", "decide v-free rigidity for a vertex");
    c_vfree->add_option("graph", vfree_path, "graph file (JSON or edge list)")
        ->required();
    c_vfree->add_option("--vertex", vfree_vertex, "the designated vertex")
        ->required();
    c_vfree->callback(
        [&] { exit_code = cmd_vfree(cfg, vfree_path, vfree_vertex); });

    std::string vr_path;
    std::string vr_property = "rigid";
    auto* c_vr = app.add_subcommand(
        "vr", "decide the vertically-restricted rigidity properties");
    c_vr->add_option("graph", vr_path, "graph file (JSON or edge list)")
        ->required();
    c_vr->add_option("--property", vr_property,
                     "which verdict drives the exit code")
        ->check(CLI::IsMember({"minimal", "rigid", "global"}))
        ->capture_default_str();
    c_vr->callback([&] { exit_code = cmd_vr(cfg, vr_path, vr_property); });

    bool corrupt = false;
    auto* c_va = app.add_subcommand(
        "verify-appendix",
        "check the embedded reference frameworks, stresses and ranks");
    c_va->add_flag("--corrupt-stress", corrupt)->group(""); // test hook
    c_va->callback([&] { exit_code = cmd_verify_appendix(cfg, corrupt); });

    int xv_nmax = 8;
    int xv_count = 200;
    auto* c_xv = app.add_subcommand(
        "cross-validate",
        "seeded corpus agreement between combinatorial and numeric verdicts");
    c_xv->add_option("--n-max", xv_nmax, "largest vertex count in the corpus")
        ->capture_default_str();
    c_xv->add_option("--count", xv_count, "number of corpus graphs")
        ->capture_default_str();
    c_xv->callback([&] { exit_code = cmd_cross_validate(cfg, xv_nmax, xv_count); });

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
        return exit_code;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
