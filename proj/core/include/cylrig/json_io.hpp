#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cylrig/constructions.hpp"
#include "cylrig/decide.hpp"
#include "cylrig/framework.hpp"
#include "cylrig/graph.hpp"
#include "cylrig/stress.hpp"

namespace cylrig {

// Input failure with position context ("line 3: ...", "points[2].x: ...").
// Everything a malformed file can trigger funnels into this type so the CLI
// can map it to exit code 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- Graph: {"n": <int>, "edges": [[u, v], ...]}, 0-based ------------------
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Edge-list text format: first line "n", then one "u v" pair per line.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

// Reads a graph file: JSON when the content starts with '{', edge-list text
// otherwise.
Graph load_graph(const std::string& path);

// --- Framework --------------------------------------------------------------
// {"graph": {...}, "scalar": "rational"|"quadratic", "d": 2,
//  "points": [{"x": ..., "y": ..., "z": ...}, ...], "radii": [...]}
// Rational literal "p/q"; quadratic literal "p/q+r/s*s" with s*s = d.  The
// "d" field appears exactly when scalar = "quadratic".  The emitter picks the
// tag from the values: a Framework<Quad> whose entries are all rational is
// written as "rational".
nlohmann::json framework_to_json(const Framework<Rat>& f);
nlohmann::json framework_to_json(const Framework<Quad>& f);

// Parses either scalar tag into the quadratic (superset) representation;
// rational files come back with every entry marked rational (d = 0).
Framework<Quad> framework_from_json(const nlohmann::json& j);
Framework<Quad> load_framework(const std::string& path);

// --- Stress: {"omega": [...], "lambda": [...]} in edge / vertex order ------
nlohmann::json stress_to_json(const Stress<Rat>& s);
nlohmann::json stress_to_json(const Stress<Quad>& s);
Stress<Quad> stress_from_json(const nlohmann::json& j);

// --- Construction trace ------------------------------------------------------
// {"base": "K5-e"|"H1"|"H2", "steps": [{"kind": ..., "params": {...}}, ...],
//  "vertex_map": [...]}
nlohmann::json trace_to_json(const ConstructionTrace& t);
ConstructionTrace trace_from_json(const nlohmann::json& j);

// --- Verdict: {"answer": <bool>, "theorem": "...", "certificate": {...}} ---
nlohmann::json verdict_to_json(const Verdict& v);

// Stable-output serialisation: injects "format": 1 at the top level and
// renders with sorted keys, 2-space indentation and a trailing newline, so
// identical values give byte-identical output.
std::string emit(nlohmann::json j);

// Reads and parses a whole JSON file; wraps syntax errors (with the parser's
// byte position) and I/O failures into ParseError.
nlohmann::json load_json(const std::string& path);

} // namespace cylrig
