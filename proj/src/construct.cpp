#include "pcg/construct.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pcg {

int PairScheme::group_of(int node) const {
    if (node >= 1 && node <= k) return 1;
    if (node >= k + 1 && node <= 2 * k) return 2;
    throw std::invalid_argument("node " + std::to_string(node) + " is not a pair-scheme node");
}

int PairScheme::pair_of(int node) const {
    return group_of(node) == 1 ? node : node - k;
}

SchemePoint PairScheme::coord(int node) const {
    if (node >= 1 && node <= k) return {2LL * node, 2};
    if (node >= k + 1 && node <= 2 * k) return {2LL * (node - k), 0};
    int idx = node - 2 * k - 1;
    if (idx >= 0 && idx < satellite_count()) return satellite_coords[idx];
    throw std::invalid_argument("node " + std::to_string(node) + " has no scheme coordinate");
}

std::vector<int> PairScheme::unfixed_pairs() const {
    std::vector<int> out;
    for (int p = 1; p <= k; ++p)
        if (!fixed[p - 1]) out.push_back(p);
    return out;
}

std::vector<int> PairScheme::fixed_pairs() const {
    std::vector<int> out;
    for (int p = 1; p <= k; ++p)
        if (fixed[p - 1]) out.push_back(p);
    return out;
}

PairScheme init_scheme(int k) {
    if (k < 1) throw std::invalid_argument("pair scheme needs at least one pair");
    PairScheme s;
    s.k = k;
    s.fixed.assign(k, false);
    return s;
}

namespace {

// default satellite positions: first on the left edge of the scheme,
// second on the right, later ones alternating further out, all at
// mid height
SchemePoint next_satellite_coord(const PairScheme& s) {
    int m = s.satellite_count();
    long long x = (m % 2 == 0) ? -2LL * (m / 2) : 2LL * (s.k + 1 + (m - 1) / 2);
    return {x, 1};
}

long long orient(SchemePoint a, SchemePoint b, SchemePoint c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// nonempty intersection of the open segments (a1,a2) and (b1,b2)
bool open_segments_intersect(SchemePoint a1, SchemePoint a2, SchemePoint b1, SchemePoint b2) {
    long long o1 = orient(a1, a2, b1);
    long long o2 = orient(a1, a2, b2);
    long long o3 = orient(b1, b2, a1);
    long long o4 = orient(b1, b2, a2);
    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        // collinear: violation only when the open overlap has positive length
        bool use_x = a1.x != a2.x || b1.x != b2.x;
        auto key = [&](SchemePoint p) { return use_x ? p.x : p.y; };
        long long alo = std::min(key(a1), key(a2)), ahi = std::max(key(a1), key(a2));
        long long blo = std::min(key(b1), key(b2)), bhi = std::max(key(b1), key(b2));
        return std::max(alo, blo) < std::min(ahi, bhi);
    }
    return ((o1 > 0) != (o2 > 0)) && o1 != 0 && o2 != 0 && ((o3 > 0) != (o4 > 0)) && o3 != 0 && o4 != 0;
}

// first existing edge whose drawn segment blocks the candidate (u,v), if any
std::optional<Edge> blocking_edge(const PairScheme& scheme, const Graph& g, int u, int v) {
    SchemePoint a1 = scheme.coord(u), a2 = scheme.coord(v);
    for (const auto& e : g.edges()) {
        SchemePoint b1 = scheme.coord(e.first), b2 = scheme.coord(e.second);
        if (open_segments_intersect(a1, a2, b1, b2)) return e;
    }
    return std::nullopt;
}

}  // namespace

SchemeGraph add_intra_pair_edges(const PairScheme& scheme, const Graph& g, const std::vector<int>& which) {
    SchemeGraph out{scheme, g};
    for (int p : which) {
        if (p < 1 || p > scheme.k) throw std::invalid_argument("pair index out of range: " + std::to_string(p));
        auto [a, b] = scheme.pair_nodes(p);
        out.graph = out.graph.with_edge(a, b);  // throws on duplicates
        out.scheme.schematic_edges.push_back(make_edge(a, b));
    }
    return out;
}

std::string CrossEdgeCheck::str() const {
    switch (rule) {
        case Rule::ok: return "ok";
        case Rule::same_group: return "violation:rule-i same group";
        case Rule::same_pair: return "violation:rule-ii same double node set";
        case Rule::crossing:
            return "violation:rule-iii crosses edge {" + std::to_string(blocking_edge.first) + "," +
                   std::to_string(blocking_edge.second) + "}";
    }
    return "?";
}

CrossEdgeCheck validate_cross_edge(const PairScheme& scheme, const Graph& g, int u, int v) {
    if (u < 1 || u > 2 * scheme.k || v < 1 || v > 2 * scheme.k)
        throw std::invalid_argument("cross edge endpoints must be pair-scheme nodes");
    CrossEdgeCheck check;
    if (scheme.group_of(u) == scheme.group_of(v)) {
        check.rule = CrossEdgeCheck::Rule::same_group;
        return check;
    }
    if (scheme.pair_of(u) == scheme.pair_of(v)) {
        check.rule = CrossEdgeCheck::Rule::same_pair;
        return check;
    }
    if (auto blocker = blocking_edge(scheme, g, u, v)) {
        check.rule = CrossEdgeCheck::Rule::crossing;
        check.blocking_edge = *blocker;
    }
    return check;
}

SchemeGraph add_cross_edge(const PairScheme& scheme, const Graph& g, int u, int v) {
    if (u < 1 || u > 2 * scheme.k || v < 1 || v > 2 * scheme.k)
        throw std::invalid_argument("cross edge endpoints must be pair-scheme nodes");
    SchemeGraph out{scheme, g.with_edge(u, v)};
    out.scheme.schematic_edges.push_back(make_edge(u, v));
    out.scheme.fixed[scheme.pair_of(u) - 1] = true;
    out.scheme.fixed[scheme.pair_of(v) - 1] = true;
    if (!out.scheme.cross_edge) out.scheme.cross_edge = make_edge(u, v);
    return out;
}

SchemeGraph add_satellite(const PairScheme& scheme, const Graph& g, const std::vector<int>& attach) {
    if (attach.empty()) throw std::invalid_argument("satellite needs at least one attachment");
    if (g.node_count() != scheme.node_count())
        throw std::invalid_argument("graph and scheme disagree on node count");
    for (int a : attach)
        if (!g.valid_node(a)) throw std::invalid_argument("satellite attachment to unknown node " + std::to_string(a));
    SchemeGraph out{scheme, g.with_node()};
    out.scheme.satellite_coords.push_back(next_satellite_coord(scheme));
    const int label = out.graph.node_count();
    for (int a : attach) {
        out.graph = out.graph.with_edge(label, a);
        out.scheme.schematic_edges.push_back(make_edge(label, a));
    }
    return out;
}

ScriptError::ScriptError(int op_index_, const std::string& what)
    : std::runtime_error("op " + std::to_string(op_index_) + ": " + what), op_index(op_index_) {}

RunResult run_script(const ConstructionScript& script) {
    if (script.k < 1) throw ScriptError(0, "script has no pair declaration");
    if (script.base.node_count() != 2 * script.k)
        throw ScriptError(0, "base graph must have exactly " + std::to_string(2 * script.k) + " nodes");
    RunResult result{init_scheme(script.k), script.base, {}};
    int index = 0;
    for (const auto& op : script.ops) {
        ++index;
        try {
            switch (op.kind) {
                case ConstructionOp::Kind::intra_pair_edges: {
                    SchemeGraph next = add_intra_pair_edges(result.scheme, result.graph, op.pair_indices);
                    result.scheme = std::move(next.scheme);
                    result.graph = std::move(next.graph);
                    result.log.push_back({index, false, "ok"});
                    break;
                }
                case ConstructionOp::Kind::cross_edge: {
                    CrossEdgeCheck check = validate_cross_edge(result.scheme, result.graph, op.u, op.v);
                    SchemeGraph next = add_cross_edge(result.scheme, result.graph, op.u, op.v);
                    result.scheme = std::move(next.scheme);
                    result.graph = std::move(next.graph);
                    result.log.push_back({index, !check.ok(), check.str()});
                    break;
                }
                case ConstructionOp::Kind::satellite: {
                    SchemeGraph next = add_satellite(result.scheme, result.graph, op.attach);
                    result.scheme = std::move(next.scheme);
                    result.graph = std::move(next.graph);
                    result.log.push_back({index, false, "ok"});
                    break;
                }
                case ConstructionOp::Kind::mark_fixed: {
                    if (op.pair_index < 1 || op.pair_index > result.scheme.k)
                        throw std::invalid_argument("pair index out of range: " + std::to_string(op.pair_index));
                    result.scheme.fixed[op.pair_index - 1] = true;
                    result.log.push_back({index, false, "ok"});
                    break;
                }
            }
        } catch (const std::invalid_argument& e) {
            throw ScriptError(index, e.what());
        }
    }
    return result;
}

ConstructionScript parse_script(const std::string& text, Graph base) {
    ConstructionScript script{0, std::move(base), {}};
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "pairs") {
            std::string arg;
            if (!(ls >> arg) || arg.rfind("k=", 0) != 0) throw ParseError(lineno, "expected pairs k=<count>");
            if (script.k != 0) throw ParseError(lineno, "duplicate pairs declaration");
            try {
                size_t used = 0;
                script.k = std::stoi(arg.substr(2), &used);
                if (used != arg.size() - 2) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError(lineno, "malformed pair count: " + arg);
            }
            if (script.k < 1) throw ParseError(lineno, "pair count must be positive");
            continue;
        }
        if (script.k == 0) throw ParseError(lineno, "ops before the pairs declaration");
        ConstructionOp op;
        if (word == "intra") {
            op.kind = ConstructionOp::Kind::intra_pair_edges;
            int p;
            while (ls >> p) op.pair_indices.push_back(p);
            if (op.pair_indices.empty()) throw ParseError(lineno, "intra needs at least one pair index");
        } else if (word == "cross") {
            op.kind = ConstructionOp::Kind::cross_edge;
            if (!(ls >> op.u >> op.v)) throw ParseError(lineno, "cross needs two node labels");
        } else if (word == "sat") {
            op.kind = ConstructionOp::Kind::satellite;
            int a;
            while (ls >> a) op.attach.push_back(a);
            if (op.attach.empty()) throw ParseError(lineno, "sat needs at least one attachment");
        } else {
            throw ParseError(lineno, "unknown op: " + word);
        }
        std::string trailing;
        if (ls >> trailing) throw ParseError(lineno, "trailing tokens: " + trailing);
        script.ops.push_back(std::move(op));
    }
    if (script.k == 0) throw ParseError(lineno, "missing pairs declaration");
    return script;
}

std::string serialize_script(const ConstructionScript& script) {
    std::ostringstream out;
    out << "pairs k=" << script.k << "\n";
    for (const auto& op : script.ops) {
        switch (op.kind) {
            case ConstructionOp::Kind::intra_pair_edges:
                out << "intra";
                for (int p : op.pair_indices) out << " " << p;
                out << "\n";
                break;
            case ConstructionOp::Kind::cross_edge:
                out << "cross " << op.u << " " << op.v << "\n";
                break;
            case ConstructionOp::Kind::satellite:
                out << "sat";
                for (int a : op.attach) out << " " << a;
                out << "\n";
                break;
            case ConstructionOp::Kind::mark_fixed:
                break;  // not part of the text format
        }
    }
    return out.str();
}

Stage parse_stage(const std::string& name) {
    if (name == "step3") return Stage::step3;
    if (name == "step4a") return Stage::step4a;
    if (name == "step4b") return Stage::step4b;
    if (name == "step4c") return Stage::step4c;
    if (name == "step5") return Stage::step5;
    if (name == "step6") return Stage::step6;
    if (name == "step7") return Stage::step7;
    throw std::invalid_argument("unknown stage: " + name);
}

std::string stage_name(Stage stage) {
    switch (stage) {
        case Stage::step3: return "step3";
        case Stage::step4a: return "step4a";
        case Stage::step4b: return "step4b";
        case Stage::step4c: return "step4c";
        case Stage::step5: return "step5";
        case Stage::step6: return "step6";
        case Stage::step7: return "step7";
    }
    return "?";
}

namespace {

void push_variant(EnumerationResult& out, Graph g, std::string note) {
    if (std::find(out.graphs.begin(), out.graphs.end(), g) != out.graphs.end()) return;
    out.graphs.push_back(std::move(g));
    out.notes.push_back(std::move(note));
}

EnumerationResult enumerate_step3(const PairScheme& scheme, const Graph& g) {
    EnumerationResult out;
    for (int p = 1; p <= scheme.k; ++p) {
        auto [a, b] = scheme.pair_nodes(p);
        if (g.has_edge(a, b)) continue;  // pair already interlinked
        for (int u : {a, b}) {
            int other_group = scheme.group_of(u) == 1 ? 2 : 1;
            for (int q = 1; q <= scheme.k; ++q) {
                if (q == p) continue;
                int v = other_group == 1 ? q : scheme.k + q;
                if (g.has_edge(u, v)) continue;
                if (!validate_cross_edge(scheme, g, u, v).ok()) continue;
                push_variant(out, g.with_edge(u, v),
                             "cross {" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) + "}");
            }
        }
    }
    return out;
}

std::pair<int, int> two_unfixed(const PairScheme& scheme) {
    auto unfixed = scheme.unfixed_pairs();
    if (unfixed.size() != 2)
        throw std::invalid_argument("stage needs exactly two unfixed pairs, found " + std::to_string(unfixed.size()));
    return {unfixed[0], unfixed[1]};
}

std::vector<Edge> cross_candidates_between_unfixed(const PairScheme& scheme, const Graph& g) {
    auto [pa, pb] = two_unfixed(scheme);
    auto [a1, a2] = scheme.pair_nodes(pa);
    auto [b1, b2] = scheme.pair_nodes(pb);
    std::vector<Edge> out;
    for (auto [u, v] : {std::pair{a1, b2}, std::pair{b1, a2}}) {
        if (g.has_edge(u, v)) continue;
        if (!validate_cross_edge(scheme, g, u, v).ok()) continue;
        out.push_back(make_edge(u, v));
    }
    return out;
}

EnumerationResult enumerate_cross_between_unfixed(const PairScheme& scheme, const Graph& g) {
    EnumerationResult out;
    for (const auto& [u, v] : cross_candidates_between_unfixed(scheme, g))
        push_variant(out, g.with_edge(u, v), "cross {" + std::to_string(u) + "," + std::to_string(v) + "}");
    return out;
}

// the six two-edge attachment patterns of a new node against the two
// unfixed pairs, in presentation order
std::vector<std::vector<int>> satellite_patterns(const PairScheme& scheme) {
    auto [pa, pb] = two_unfixed(scheme);
    auto [a1, a2] = scheme.pair_nodes(pa);
    auto [b1, b2] = scheme.pair_nodes(pb);
    return {{a1, b1}, {a2, b2}, {a1, b2}, {b1, a2}, {a1, a2}, {b1, b2}};
}

EnumerationResult enumerate_step4b(const PairScheme& scheme, const Graph& g) {
    EnumerationResult out;
    for (const auto& attach : satellite_patterns(scheme)) {
        SchemeGraph next = add_satellite(scheme, g, attach);
        push_variant(out, next.graph,
                     "satellite {" + std::to_string(attach[0]) + "," + std::to_string(attach[1]) + "}");
    }
    return out;
}

// satellite carrying exactly the two members of one unfixed pair; used by
// step4c to find where the third edge may go
struct SatellitePair {
    int satellite;
    int own_pair;
    int other_pair;
};

SatellitePair find_pair_satellite(const PairScheme& scheme, const Graph& g) {
    auto [pa, pb] = two_unfixed(scheme);
    for (int s = 2 * scheme.k + 1; s <= g.node_count(); ++s) {
        auto nb = g.neighbors(s);
        for (int p : {pa, pb}) {
            auto [w1, w2] = scheme.pair_nodes(p);
            if (nb == std::vector<int>{w1, w2}) return {s, p, p == pa ? pb : pa};
        }
    }
    throw std::invalid_argument("stage needs a satellite attached to one unfixed pair");
}

EnumerationResult enumerate_step4c(const PairScheme& scheme, const Graph& g) {
    SatellitePair sp = find_pair_satellite(scheme, g);
    auto [c1, c2] = scheme.pair_nodes(sp.other_pair);
    EnumerationResult out;
    for (int target : {c1, c2})
        push_variant(out, g.with_edge(sp.satellite, target),
                     "third edge {" + std::to_string(sp.satellite) + "," + std::to_string(target) + "}");
    return out;
}

EnumerationResult enumerate_step5(const PairScheme& scheme, const Graph& g) {
    std::vector<Edge> cross = cross_candidates_between_unfixed(scheme, g);
    EnumerationResult out;
    for (const auto& attach : satellite_patterns(scheme)) {
        SchemeGraph with_sat = add_satellite(scheme, g, attach);
        for (const auto& [u, v] : cross)
            push_variant(out, with_sat.graph.with_edge(u, v),
                         "satellite {" + std::to_string(attach[0]) + "," + std::to_string(attach[1]) + "} + cross {" +
                             std::to_string(u) + "," + std::to_string(v) + "}");
    }
    return out;
}

EnumerationResult enumerate_step7(const PairScheme& scheme, const Graph& g) {
    auto fixed = scheme.fixed_pairs();
    if (fixed.size() != 2) throw std::invalid_argument("stage needs exactly two fixed pairs");
    if (!scheme.cross_edge) throw std::invalid_argument("stage needs the recorded cross edge");
    auto [pa, pb] = two_unfixed(scheme);

    auto [f1a, f1b] = scheme.pair_nodes(fixed[0]);
    auto [f2a, f2b] = scheme.pair_nodes(fixed[1]);
    auto [u1a, u1b] = scheme.pair_nodes(pa);
    auto [u2a, u2b] = scheme.pair_nodes(pb);
    Edge cross = *scheme.cross_edge;
    int cross_g1 = scheme.group_of(cross.first) == 1 ? cross.first : cross.second;
    int cross_g2 = cross_g1 == cross.first ? cross.second : cross.first;

    EnumerationResult out;
    struct BaseVariant {
        SchemeGraph sg;
        std::string label;
        std::vector<int> third_targets;
        int extra_target;
    };
    std::vector<BaseVariant> bases;
    {
        // group-1 attachment, third edges go to the unfixed group-1 nodes,
        // the extra edge to the group-2 endpoint of the recorded cross edge
        SchemeGraph top = add_satellite(scheme, g, {f1a, f2a});
        bases.push_back({top, "fixed group-1 attach {" + std::to_string(f1a) + "," + std::to_string(f2a) + "}",
                         {u1a, u2a}, cross_g2});
        SchemeGraph bottom = add_satellite(scheme, g, {f1b, f2b});
        bases.push_back({bottom, "fixed group-2 attach {" + std::to_string(f1b) + "," + std::to_string(f2b) + "}",
                         {u1b, u2b}, cross_g1});
    }
    for (const auto& bv : bases) push_variant(out, bv.sg.graph, bv.label);
    for (const auto& bv : bases) {
        int sat = bv.sg.graph.node_count();
        for (int t : bv.third_targets)
            push_variant(out, bv.sg.graph.with_edge(sat, t),
                         bv.label + " + third edge {" + std::to_string(sat) + "," + std::to_string(t) + "}");
    }
    for (const auto& bv : bases) {
        int sat = bv.sg.graph.node_count();
        // only the non-crossing rule applies to this extension; the outcome
        // is reported, not enforced
        auto blocker = blocking_edge(bv.sg.scheme, bv.sg.graph, sat, bv.extra_target);
        std::string geom = blocker ? " [rule-iii: crosses {" + std::to_string(blocker->first) + "," +
                                         std::to_string(blocker->second) + "}]"
                                   : " [rule-iii: clear]";
        push_variant(out, bv.sg.graph.with_edge(sat, bv.extra_target),
                     bv.label + " + extra edge {" + std::to_string(sat) + "," + std::to_string(bv.extra_target) + "}" + geom);
    }
    return out;
}

}  // namespace

EnumerationResult enumerate_variants(const PairScheme& scheme, const Graph& g, Stage stage) {
    switch (stage) {
        case Stage::step3: return enumerate_step3(scheme, g);
        case Stage::step4a: return enumerate_cross_between_unfixed(scheme, g);
        case Stage::step4b: return enumerate_step4b(scheme, g);
        case Stage::step4c: return enumerate_step4c(scheme, g);
        case Stage::step5: return enumerate_step5(scheme, g);
        case Stage::step6: return enumerate_cross_between_unfixed(scheme, g);
        case Stage::step7: return enumerate_step7(scheme, g);
    }
    throw std::invalid_argument("unknown stage");
}

}  // namespace pcg
