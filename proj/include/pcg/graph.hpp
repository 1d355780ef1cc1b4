#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace pcg {

// Unordered node pair, stored with first < second. Nodes are 1-based.
using Edge = std::pair<int, int>;

Edge make_edge(int i, int j);

// Undirected simple graph on nodes 1..n. Immutable value type: mutating
// operations return a new graph. Edge list kept sorted and duplicate-free.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<Edge> edges);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int i, int j) const;
    bool valid_node(int i) const { return i >= 1 && i <= n_; }

    // Returns a copy with edge {i,j} added. Order of (i,j) is irrelevant.
    Graph with_edge(int i, int j) const;
    // Returns a copy with one extra isolated node labeled n+1.
    Graph with_node() const;

    int degree(int i) const;
    std::vector<int> neighbors(int i) const;

    bool operator==(const Graph& rhs) const = default;
    bool operator<(const Graph& rhs) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

Graph new_graph(int n);

// Laplacian L = degree matrix minus adjacency matrix, integer-exact.
// Symmetric, rows sum to zero, diagonal carries node degrees.
Eigen::MatrixXi laplacian(const Graph& g);
Eigen::MatrixXi adjacency(const Graph& g);

// Connectivity partition; components ordered by smallest member,
// members ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Thrown by the text parsers; line is 1-based.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what);
    int line;
};

// Edge-list text format: first line "n=<count>", then one "<i> <j>" per
// line with i < j; '#' starts a comment line.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Graph load_graph_file(const std::string& path);

// JSON form: {"n": <int>, "edges": [[i,j], ...]}.
Graph parse_graph_json(const std::string& text);
std::string serialize_graph_json(const Graph& g);

// DOT export; leader nodes (if any) are drawn as double circles.
std::string to_dot(const Graph& g, const std::vector<int>& leaders = {});

}  // namespace pcg
