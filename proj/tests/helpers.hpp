#pragma once

#include "pcg/census.hpp"
#include "pcg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace test_helpers {

inline pcg::Graph path_graph(int n) {
    std::vector<pcg::Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return pcg::Graph(n, edges);
}

inline pcg::Graph cycle_graph(int n) {
    std::vector<pcg::Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return pcg::Graph(n, edges);
}

inline pcg::Graph complete_graph(int n) {
    std::vector<pcg::Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return pcg::Graph(n, edges);
}

// relabeling: node v becomes perm[v-1]
inline pcg::Graph permuted(const pcg::Graph& g, const std::vector<int>& perm) {
    std::vector<pcg::Edge> edges;
    for (const auto& [i, j] : g.edges()) edges.push_back(pcg::make_edge(perm[i - 1], perm[j - 1]));
    return pcg::Graph(g.node_count(), edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace test_helpers
