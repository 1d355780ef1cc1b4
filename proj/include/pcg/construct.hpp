#pragma once

#include "pcg/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pcg {

// Planar position in the two-row schematic, stored in half-unit integer
// coordinates so all intersection tests stay exact.
struct SchemePoint {
    long long x = 0;
    long long y = 0;
    bool operator==(const SchemePoint&) const = default;
};

// Double-node-set scheme: k pairs, group 1 nodes 1..k drawn on the top
// row, group 2 nodes k+1..2k below; pair p couples node p with node k+p
// at column p. Extra (satellite) nodes carry explicit coordinates and are
// labeled contiguously from 2k+1. Edges added through construction ops
// are tracked so the non-crossing rule can be evaluated.
struct PairScheme {
    int k = 0;
    std::vector<bool> fixed;             // per pair
    std::vector<SchemePoint> satellite_coords;
    std::vector<Edge> schematic_edges;   // edges added by construction ops
    std::optional<Edge> cross_edge;      // first cross edge (fixes its pairs)

    int group_of(int node) const;        // 1 or 2
    int pair_of(int node) const;         // 1..k
    std::pair<int, int> pair_nodes(int p) const { return {p, k + p}; }
    int satellite_count() const { return static_cast<int>(satellite_coords.size()); }
    int node_count() const { return 2 * k + satellite_count(); }
    SchemePoint coord(int node) const;
    std::vector<int> unfixed_pairs() const;
    std::vector<int> fixed_pairs() const;
};

PairScheme init_scheme(int k);

struct SchemeGraph {
    PairScheme scheme;
    Graph graph;
};

// Adds the vertical pair edge for each selected pair (1-based pair
// indices). A pair that already carries its edge is a duplicate error.
SchemeGraph add_intra_pair_edges(const PairScheme& scheme, const Graph& g, const std::vector<int>& which);

// Rules checked for a candidate edge between scheme nodes u, v:
//   i) endpoints belong to different groups,
//  ii) endpoints are not the same double node set,
// iii) the straight segment does not properly cross any existing edge
//      (touching at shared endpoints is allowed).
struct CrossEdgeCheck {
    enum class Rule { ok, same_group, same_pair, crossing };
    Rule rule = Rule::ok;
    Edge blocking_edge{0, 0};  // set when rule == crossing
    bool ok() const { return rule == Rule::ok; }
    std::string str() const;
};

CrossEdgeCheck validate_cross_edge(const PairScheme& scheme, const Graph& g, int u, int v);

// Applies a cross edge and marks both endpoint pairs fixed. Validation is
// the caller's concern; a rule violation does not stop construction.
SchemeGraph add_cross_edge(const PairScheme& scheme, const Graph& g, int u, int v);

// New node labeled n+1 joined to every attach node.
SchemeGraph add_satellite(const PairScheme& scheme, const Graph& g, const std::vector<int>& attach);

struct ConstructionOp {
    enum class Kind { intra_pair_edges, cross_edge, satellite, mark_fixed };
    Kind kind;
    std::vector<int> pair_indices;  // intra_pair_edges
    int u = 0;                      // cross_edge
    int v = 0;
    std::vector<int> attach;        // satellite
    int pair_index = 0;             // mark_fixed
};

struct ConstructionScript {
    int k = 0;
    Graph base;
    std::vector<ConstructionOp> ops;
};

// Structural script failure (duplicate edge, dangling reference, ...);
// op_index is 1-based, 0 for header problems.
struct ScriptError : std::runtime_error {
    ScriptError(int op_index, const std::string& what);
    int op_index;
};

struct RunLogEntry {
    int op_index = 0;  // 1-based
    bool violation = false;
    std::string text;
};

struct RunResult {
    PairScheme scheme;
    Graph graph;
    std::vector<RunLogEntry> log;
};

// Replays the ops in order. Cross edges are validated and violations
// logged, but construction continues; structural errors abort.
RunResult run_script(const ConstructionScript& script);

// Text form: "pairs k=<int>" first, then one op per line:
// "intra <p> [<p> ...]", "cross <u> <v>", "sat <node> [<node> ...]";
// '#' starts a comment.
ConstructionScript parse_script(const std::string& text, Graph base);
std::string serialize_script(const ConstructionScript& script);

enum class Stage { step3, step4a, step4b, step4c, step5, step6, step7 };

Stage parse_stage(const std::string& name);
std::string stage_name(Stage stage);

struct EnumerationResult {
    std::vector<Graph> graphs;       // deduplicated, deterministic order
    std::vector<std::string> notes;  // per-variant remarks (rule checks etc.)
};

// All graphs reachable by one legal choice at the given stage:
//   step3   cross edges touching a pair that lacks its vertical edge
//   step4a  cross edges joining the two unfixed pairs
//   step4b  the six two-edge satellite attachment patterns
//   step4c  third satellite edge into the untouched unfixed pair
//   step5   every step4b pattern combined with every step4a edge
//   step6   like step4a, on a graph carrying a three-edge satellite
//   step7   new node on the fixed pairs: two base attachments, their four
//           third-edge extensions, and the two cross-edge-endpoint extras
EnumerationResult enumerate_variants(const PairScheme& scheme, const Graph& g, Stage stage);

}  // namespace pcg
