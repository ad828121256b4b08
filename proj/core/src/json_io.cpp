#include "cylrig/json_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cylrig {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

void check_format(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("format")) return;
    const json& f = j.at("format");
    if (!f.is_number_integer() || f.get<int>() != 1)
        fail(where, "unsupported format version");
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end())
        fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number_integer())
        fail(where + "." + key, "expected an integer");
    return v.get<int>();
}

std::string string_field(const json& j, const char* key,
                         const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_string()) fail(where + "." + key, "expected a string");
    return v.get<std::string>();
}

std::vector<int> int_vector_field(const json& j, const char* key,
                                  const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_array()) fail(where + "." + key, "expected an integer array");
    std::vector<int> out;
    for (const json& x : v) {
        if (!x.is_number_integer())
            fail(where + "." + key, "expected an integer array");
        out.push_back(x.get<int>());
    }
    return out;
}

template <std::size_t N>
std::array<int, N> int_array_field(const json& j, const char* key,
                                   const std::string& where) {
    const std::vector<int> v = int_vector_field(j, key, where);
    if (v.size() != N)
        fail(where + "." + key,
             "expected exactly " + std::to_string(N) + " integers");
    std::array<int, N> out{};
    std::copy(v.begin(), v.end(), out.begin());
    return out;
}

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Scalar context of a framework / stress file: "rational" leaves d = 0,
// "quadratic" requires a square-free d >= 2.
long scalar_context(const json& j, const std::string& where) {
    const std::string scalar = string_field(j, "scalar", where);
    if (scalar == "rational") return 0;
    if (scalar != "quadratic")
        fail(where + ".scalar", "expected \"rational\" or \"quadratic\"");
    const json& dj = field(j, "d", where);
    if (!dj.is_number_integer()) fail(where + ".d", "expected an integer");
    const long d = dj.get<long>();
    if (d < 2 || !is_square_free(d))
        fail(where + ".d", "expected a square-free integer >= 2");
    return d;
}

Quad parse_scalar(const json& v, long d, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a string literal");
    try {
        if (d == 0) return Quad(rat_parse(v.get<std::string>()));
        return quad_parse(v.get<std::string>(), d);
    } catch (const std::invalid_argument& ex) {
        fail(where, ex.what());
    }
}

// First nonzero extension discriminant in a list of values (0 if none):
// decides whether an exact object serialises as "rational" or "quadratic".
long found_d(long current, const Quad& q) { return current != 0 ? current : q.d; }

json step_to_json(const Step& s) {
    json params;
    switch (step_kind(s)) {
        case StepKind::ZeroExt: {
            const auto& p = std::get<ZeroExtStep>(s);
            params = {{"u", p.u}, {"w", p.w}};
            break;
        }
        case StepKind::OneExt: {
            const auto& p = std::get<OneExtStep>(s);
            params = {{"x", p.x}, {"y", p.y}, {"z", p.z}};
            break;
        }
        case StepKind::K4MinusExt: {
            const auto& p = std::get<K4MinusExtStep>(s);
            params = {{"v1", p.v1}, {"v2", p.v2}};
            break;
        }
        case StepKind::GenVertexSplit: {
            const auto& p = std::get<GenVertexSplitStep>(s);
            params = {{"v", p.v}, {"n1", p.n1}, {"x", p.x}};
            break;
        }
        case StepKind::Join1: {
            const auto& p = std::get<Join1Step>(s);
            params = {{"a1", p.a1},
                      {"b1", p.b1},
                      {"other", graph_to_json(p.other)},
                      {"quad2", p.quad2}};
            break;
        }
        case StepKind::Join2: {
            const auto& p = std::get<Join2Step>(s);
            params = {{"quad1", p.quad1},
                      {"other", graph_to_json(p.other)},
                      {"quad2", p.quad2}};
            break;
        }
        case StepKind::Join3: {
            const auto& p = std::get<Join3Step>(s);
            params = {{"v1", p.v1},
                      {"nbr1", p.nbr1},
                      {"other", graph_to_json(p.other)},
                      {"v2", p.v2},
                      {"nbr2", p.nbr2}};
            break;
        }
    }
    return {{"kind", std::string(step_kind_name(step_kind(s)))},
            {"params", std::move(params)}};
}

Step step_from_json(const json& j, const std::string& where) {
    const std::string name = string_field(j, "kind", where);
    const auto kind = step_kind_from_name(name);
    if (!kind) fail(where + ".kind", "unknown step kind \"" + name + "\"");
    const json& p = field(j, "params", where);
    const std::string pw = where + ".params";
    switch (*kind) {
        case StepKind::ZeroExt:
            return ZeroExtStep{int_field(p, "u", pw), int_field(p, "w", pw)};
        case StepKind::OneExt:
            return OneExtStep{int_field(p, "x", pw), int_field(p, "y", pw),
                              int_field(p, "z", pw)};
        case StepKind::K4MinusExt:
            return K4MinusExtStep{int_field(p, "v1", pw),
                                  int_field(p, "v2", pw)};
        case StepKind::GenVertexSplit: {
            GenVertexSplitStep st;
            st.v = int_field(p, "v", pw);
            st.n1 = int_vector_field(p, "n1", pw);
            st.x = int_field(p, "x", pw);
            return st;
        }
        case StepKind::Join1: {
            Join1Step st;
            st.a1 = int_field(p, "a1", pw);
            st.b1 = int_field(p, "b1", pw);
            st.other = graph_from_json(field(p, "other", pw));
            st.quad2 = int_array_field<4>(p, "quad2", pw);
            return st;
        }
        case StepKind::Join2: {
            Join2Step st;
            st.quad1 = int_array_field<4>(p, "quad1", pw);
            st.other = graph_from_json(field(p, "other", pw));
            st.quad2 = int_array_field<4>(p, "quad2", pw);
            return st;
        }
        case StepKind::Join3: {
            Join3Step st;
            st.v1 = int_field(p, "v1", pw);
            st.nbr1 = int_array_field<3>(p, "nbr1", pw);
            st.other = graph_from_json(field(p, "other", pw));
            st.v2 = int_field(p, "v2", pw);
            st.nbr2 = int_array_field<3>(p, "nbr2", pw);
            return st;
        }
    }
    throw std::logic_error("step_from_json: bad kind");
}

} // namespace

json graph_to_json(const Graph& g) {
    json es = json::array();
    for (const Edge& e : g.edges) es.push_back(json::array({e.first, e.second}));
    return {{"n", g.n}, {"edges", std::move(es)}};
}

Graph graph_from_json(const json& j) {
    const std::string where = "graph";
    check_format(j, where);
    const int n = int_field(j, "n", where);
    const json& es = field(j, "edges", where);
    if (!es.is_array()) fail(where + ".edges", "expected an array");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
        const json& e = es[i];
        const std::string ew = where + ".edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            fail(ew, "expected an integer pair [u, v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        fail(where, ex.what());
    }
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << g.n << "\n";
    for (const Edge& e : g.edges) out << e.first << " " << e.second << "\n";
    return out.str();
}

Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_n = false;
    long long n = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line)) continue;
        const std::string where = "line " + std::to_string(lineno);
        std::istringstream ls(line);
        if (!have_n) {
            if (!(ls >> n) || n < 0) fail(where, "expected the vertex count");
            have_n = true;
        } else {
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) fail(where, "expected an edge \"u v\"");
            if (u < 0 || v < 0 || u >= n || v >= n)
                fail(where, "edge endpoint out of range");
            if (u == v) fail(where, "loop edge not allowed");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        std::string junk;
        if (ls >> junk) fail(where, "unexpected trailing \"" + junk + "\"");
    }
    if (!have_n)
        fail("input", "empty edge list (first line must be the vertex count)");
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& ex) {
        fail("edge list", ex.what());
    }
}

Graph load_graph(const std::string& path) {
    const std::string content = read_file(path);
    try {
        const std::size_t i = content.find_first_not_of(" \t\r\n");
        if (i != std::string::npos && content[i] == '{')
            return graph_from_json(json::parse(content));
        return graph_from_text(content);
    } catch (const json::parse_error& ex) {
        throw ParseError(path + ": " + ex.what());
    } catch (const ParseError& ex) {
        throw ParseError(path + ": " + ex.what());
    }
}

json framework_to_json(const Framework<Rat>& f) {
    json points = json::array();
    for (const auto& p : f.points)
        points.push_back({{"x", rat_format(p[0])},
                          {"y", rat_format(p[1])},
                          {"z", rat_format(p[2])}});
    json radii = json::array();
    for (const Rat& r : f.radii) radii.push_back(rat_format(r));
    return {{"graph", graph_to_json(f.graph)},
            {"scalar", "rational"},
            {"points", std::move(points)},
            {"radii", std::move(radii)}};
}

json framework_to_json(const Framework<Quad>& f) {
    long d = 0;
    for (const auto& p : f.points)
        for (const Quad& c : p) d = found_d(d, c);
    for (const Quad& r : f.radii) d = found_d(d, r);
    json points = json::array();
    for (const auto& p : f.points)
        points.push_back({{"x", quad_format(p[0])},
                          {"y", quad_format(p[1])},
                          {"z", quad_format(p[2])}});
    json radii = json::array();
    for (const Quad& r : f.radii) radii.push_back(quad_format(r));
    json out = {{"graph", graph_to_json(f.graph)},
                {"scalar", d == 0 ? "rational" : "quadratic"},
                {"points", std::move(points)},
                {"radii", std::move(radii)}};
    if (d != 0) out["d"] = d;
    return out;
}

Framework<Quad> framework_from_json(const json& j) {
    const std::string where = "framework";
    check_format(j, where);
    Framework<Quad> f;
    f.graph = graph_from_json(field(j, "graph", where));
    const long d = scalar_context(j, where);
    const json& pts = field(j, "points", where);
    if (!pts.is_array() || static_cast<int>(pts.size()) != f.graph.n)
        fail(where + ".points",
             "expected one point per vertex (" + std::to_string(f.graph.n) + ")");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string pw = where + ".points[" + std::to_string(i) + "]";
        const json& p = pts[i];
        f.points.push_back({parse_scalar(field(p, "x", pw), d, pw + ".x"),
                            parse_scalar(field(p, "y", pw), d, pw + ".y"),
                            parse_scalar(field(p, "z", pw), d, pw + ".z")});
    }
    if (j.contains("radii")) {
        const json& rs = j.at("radii");
        if (!rs.is_array() || static_cast<int>(rs.size()) != f.graph.n)
            fail(where + ".radii", "expected one radius per vertex (" +
                                       std::to_string(f.graph.n) + ")");
        for (std::size_t i = 0; i < rs.size(); ++i)
            f.radii.push_back(parse_scalar(
                rs[i], d, where + ".radii[" + std::to_string(i) + "]"));
    } else {
        f.radii.assign(f.graph.n, Quad(Rat(1)));
    }
    try {
        f.validate();
    } catch (const std::invalid_argument& ex) {
        fail(where, ex.what());
    }
    return f;
}

Framework<Quad> load_framework(const std::string& path) {
    try {
        return framework_from_json(load_json(path));
    } catch (const ParseError& ex) {
        const std::string what = ex.what();
        if (what.rfind(path, 0) == 0) throw; // already carries the path
        throw ParseError(path + ": " + what);
    }
}

json stress_to_json(const Stress<Rat>& s) {
    json omega = json::array(), lambda = json::array();
    for (const Rat& w : s.omega) omega.push_back(rat_format(w));
    for (const Rat& l : s.lambda) lambda.push_back(rat_format(l));
    return {{"scalar", "rational"},
            {"omega", std::move(omega)},
            {"lambda", std::move(lambda)}};
}

json stress_to_json(const Stress<Quad>& s) {
    long d = 0;
    for (const Quad& w : s.omega) d = found_d(d, w);
    for (const Quad& l : s.lambda) d = found_d(d, l);
    json omega = json::array(), lambda = json::array();
    for (const Quad& w : s.omega) omega.push_back(quad_format(w));
    for (const Quad& l : s.lambda) lambda.push_back(quad_format(l));
    json out = {{"scalar", d == 0 ? "rational" : "quadratic"},
                {"omega", std::move(omega)},
                {"lambda", std::move(lambda)}};
    if (d != 0) out["d"] = d;
    return out;
}

Stress<Quad> stress_from_json(const json& j) {
    const std::string where = "stress";
    check_format(j, where);
    const long d = scalar_context(j, where);
    Stress<Quad> s;
    const json& omega = field(j, "omega", where);
    const json& lambda = field(j, "lambda", where);
    if (!omega.is_array()) fail(where + ".omega", "expected an array");
    if (!lambda.is_array()) fail(where + ".lambda", "expected an array");
    for (std::size_t i = 0; i < omega.size(); ++i)
        s.omega.push_back(parse_scalar(
            omega[i], d, where + ".omega[" + std::to_string(i) + "]"));
    for (std::size_t i = 0; i < lambda.size(); ++i)
        s.lambda.push_back(parse_scalar(
            lambda[i], d, where + ".lambda[" + std::to_string(i) + "]"));
    return s;
}

json trace_to_json(const ConstructionTrace& t) {
    json steps = json::array();
    for (const Step& s : t.steps) steps.push_back(step_to_json(s));
    return {{"base", t.base},
            {"steps", std::move(steps)},
            {"vertex_map", t.vertex_map}};
}

ConstructionTrace trace_from_json(const json& j) {
    const std::string where = "trace";
    check_format(j, where);
    ConstructionTrace t;
    t.base = string_field(j, "base", where);
    try {
        base_graph(t.base);
    } catch (const std::invalid_argument& ex) {
        fail(where + ".base", ex.what());
    }
    const json& steps = field(j, "steps", where);
    if (!steps.is_array()) fail(where + ".steps", "expected an array");
    for (std::size_t i = 0; i < steps.size(); ++i)
        t.steps.push_back(step_from_json(
            steps[i], where + ".steps[" + std::to_string(i) + "]"));
    if (j.contains("vertex_map"))
        t.vertex_map = int_vector_field(j, "vertex_map", where);
    return t;
}

json verdict_to_json(const Verdict& v) {
    return {{"answer", v.answer},
            {"theorem", v.theorem},
            {"certificate", v.certificate}};
}

std::string emit(json j) {
    if (!j.is_object())
        throw std::logic_error("emit: top-level JSON value must be an object");
    j["format"] = 1;
    return j.dump(2) + "\n";
}

json load_json(const std::string& path) {
    const std::string content = read_file(path);
    try {
        return json::parse(content);
    } catch (const json::parse_error& ex) {
        throw ParseError(path + ": " + ex.what());
    }
}

} // namespace cylrig
