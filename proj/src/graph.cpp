#include "pcg/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pcg {

Edge make_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("self-loop edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    return i < j ? Edge{i, j} : Edge{j, i};
}

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph must have at least one node");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
    for (auto& [i, j] : edges) {
        if (i > j) std::swap(i, j);
        if (i == j) throw std::invalid_argument("self-loop on node " + std::to_string(i));
        if (i < 1 || j > n_) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
}

bool Graph::has_edge(int i, int j) const {
    if (i == j) return false;
    Edge e = make_edge(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Graph Graph::with_edge(int i, int j) const {
    if (!valid_node(i) || !valid_node(j))
        throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(i) + "," + std::to_string(j) + "}");
    Edge e = make_edge(i, j);
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (pos != edges_.end() && *pos == e)
        throw std::invalid_argument("duplicate edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "}");
    Graph out = *this;
    out.edges_.insert(out.edges_.begin() + (pos - edges_.begin()), e);
    return out;
}

Graph Graph::with_node() const {
    Graph out = *this;
    out.n_ += 1;
    return out;
}

int Graph::degree(int i) const {
    if (!valid_node(i)) throw std::invalid_argument("node out of range: " + std::to_string(i));
    int d = 0;
    for (const auto& [a, b] : edges_) d += (a == i) + (b == i);
    return d;
}

std::vector<int> Graph::neighbors(int i) const {
    if (!valid_node(i)) throw std::invalid_argument("node out of range: " + std::to_string(i));
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == i) out.push_back(b);
        if (b == i) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::operator<(const Graph& rhs) const {
    if (n_ != rhs.n_) return n_ < rhs.n_;
    return edges_ < rhs.edges_;
}

Graph new_graph(int n) { return Graph(n); }

Eigen::MatrixXi adjacency(const Graph& g) {
    const int n = g.node_count();
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
    for (const auto& [i, j] : g.edges()) {
        a(i - 1, j - 1) = 1;
        a(j - 1, i - 1) = 1;
    }
    return a;
}

Eigen::MatrixXi laplacian(const Graph& g) {
    const int n = g.node_count();
    Eigen::MatrixXi l = Eigen::MatrixXi::Zero(n, n);
    for (const auto& [i, j] : g.edges()) {
        l(i - 1, j - 1) = -1;
        l(j - 1, i - 1) = -1;
        l(i - 1, i - 1) += 1;
        l(j - 1, j - 1) += 1;
    }
    return l;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [i, j] : g.edges()) {
        int a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> index(n + 1, -1);
    for (int v = 1; v <= n; ++v) {
        int r = find(v);
        if (index[r] < 0) {
            index[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[index[r]].push_back(v);
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

ParseError::ParseError(int line_, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        if (n < 0) {
            if (line.rfind("n=", 0) != 0) throw ParseError(lineno, "expected header n=<count>");
            try {
                size_t used = 0;
                n = std::stoi(line.substr(2), &used);
                if (used != line.size() - 2) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError(lineno, "malformed node count: " + line);
            }
            if (n < 1) throw ParseError(lineno, "node count must be positive");
            continue;
        }
        std::istringstream ls(line);
        int i = 0, j = 0;
        std::string rest;
        if (!(ls >> i >> j) || (ls >> rest)) throw ParseError(lineno, "malformed edge line: " + line);
        if (i == j) throw ParseError(lineno, "self-loop on node " + std::to_string(i));
        if (i < 1 || j < 1 || i > n || j > n) throw ParseError(lineno, "node out of range in edge " + line);
        Edge e = make_edge(i, j);
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw ParseError(lineno, "duplicate edge " + line);
        edges.push_back(e);
    }
    if (n < 0) throw ParseError(lineno, "missing header n=<count>");
    return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.node_count() << "\n";
    for (const auto& [i, j] : g.edges()) out << i << " " << j << "\n";
    return out.str();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::string head = strip(text.substr(0, text.find_first_of('\n')));
    if (!head.empty() && head[0] == '{') return parse_graph_json(text);
    return parse_graph(text);
}

Graph parse_graph_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw ParseError(1, "JSON graph needs fields \"n\" and \"edges\"");
    int n = doc["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError(1, "edge entries must be pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, std::move(edges));
}

std::string serialize_graph_json(const Graph& g) {
    nlohmann::json doc;
    doc["n"] = g.node_count();
    auto edges = nlohmann::json::array();
    for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
    doc["edges"] = std::move(edges);
    return doc.dump();
}

std::string to_dot(const Graph& g, const std::vector<int>& leaders) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 1; v <= g.node_count(); ++v) {
        bool leader = std::find(leaders.begin(), leaders.end(), v) != leaders.end();
        out << "  " << v;
        if (leader) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (const auto& [i, j] : g.edges()) out << "  " << i << " -- " << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace pcg
