#include "pcg/census.hpp"

#include "pcg/exact.hpp"
#include "pcg/spectral.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pcg {

std::string CensusRow::csv() const {
    std::ostringstream out;
    out << n << "," << total_graphs << "," << connected_graphs << "," << perfect_graphs;
    return out.str();
}

namespace {

std::vector<Edge> edge_slots(int n) {
    std::vector<Edge> slots;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
    return slots;
}

}  // namespace

void for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 1) throw std::invalid_argument("need at least one node");
    const auto slots = edge_slots(n);
    const std::uint64_t count = 1ull << slots.size();
    std::vector<Edge> edges;
    edges.reserve(slots.size());
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        edges.clear();
        for (size_t b = 0; b < slots.size(); ++b)
            if (mask & (1ull << b)) edges.push_back(slots[b]);
        visit(Graph(n, edges));
    }
}

CensusRow pc_census(int n) {
    if (n > kExhaustiveCensusLimit)
        throw std::invalid_argument("exhaustive census limited to n <= " + std::to_string(kExhaustiveCensusLimit));
    CensusRow row;
    row.n = n;
    for_each_graph(n, [&](const Graph& g) {
        ++row.total_graphs;
        if (is_connected(g)) ++row.connected_graphs;
        if (check_perfect_exact(g).perfect) {
            ++row.perfect_graphs;
            if (row.exemplars.size() < 5) row.exemplars.push_back(g);
        }
    });
    return row;
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw std::invalid_argument("edge probability must be in [0,1]");
    std::mt19937_64 rng(seed);
    // explicit threshold draw keeps the sample identical across standard
    // library implementations
    const double scale = 0x1.0p-64;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (static_cast<double>(rng()) * scale < edge_prob) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

CensusRow random_census(int n, double edge_prob, std::uint64_t sample_count, std::uint64_t seed) {
    if (n > kRandomCensusLimit)
        throw std::invalid_argument("random census limited to n <= " + std::to_string(kRandomCensusLimit));
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw std::invalid_argument("edge probability must be in [0,1]");
    CensusRow row;
    row.n = n;
    std::mt19937_64 seeder(seed);
    for (std::uint64_t s = 0; s < sample_count; ++s) {
        Graph g = random_graph(n, edge_prob, seeder());
        ++row.total_graphs;
        if (is_connected(g)) ++row.connected_graphs;
        if (check_perfect_exact(g).perfect) {
            ++row.perfect_graphs;
            if (row.exemplars.size() < 5) row.exemplars.push_back(g);
        }
    }
    return row;
}

SpectrumTarget load_spectrum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spectrum file: " + path);
    SpectrumTarget target;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        double v;
        while (ls >> v) target.values.push_back(v);
        std::string rest;
        ls.clear();
        if (ls >> rest) throw ParseError(lineno, "malformed spectrum entry: " + rest);
    }
    if (!std::is_sorted(target.values.begin(), target.values.end()))
        throw std::runtime_error("spectrum values must be ascending");
    return target;
}

ReconstructionResult reconstruct_base(const SpectrumTarget& target, const Graph& overlay, int base_nodes) {
    const int n = overlay.node_count();
    if (static_cast<int>(target.values.size()) != n)
        throw std::invalid_argument("target length must equal the overlay node count");
    if (target.tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
    if (base_nodes < 0) base_nodes = n;
    if (base_nodes > n) throw std::invalid_argument("base node range exceeds overlay nodes");

    ReconstructionResult result;
    for (double v : target.values) result.trace_sum += v;

    const double implied = result.trace_sum / 2.0 - overlay.edge_count();
    const int rounded = static_cast<int>(std::llround(implied));
    // eigenvalue sum printed to 4 decimals can be off by n*tol/2 edges at most
    if (rounded < 0 || std::abs(implied - rounded) > std::max(0.01, n * target.tolerance)) {
        result.trace_consistent = false;
        result.implied_base_edges = -1;
        return result;
    }
    result.trace_consistent = true;
    result.implied_base_edges = rounded;

    std::vector<Edge> slots;
    for (int i = 1; i <= base_nodes; ++i)
        for (int j = i + 1; j <= base_nodes; ++j)
            if (!overlay.has_edge(i, j)) slots.emplace_back(i, j);
    const int m = static_cast<int>(slots.size());
    const int want = rounded;
    if (want > m) return result;  // no room for that many base edges

    // lambda_max >= d_max + 1 for any graph with an edge, so degrees are
    // capped by the largest target eigenvalue
    const int degree_cap = static_cast<int>(std::floor(target.values.back() + target.tolerance)) - 1;
    std::vector<int> overlay_degree(n + 1, 0);
    for (const auto& [i, j] : overlay.edges()) {
        ++overlay_degree[i];
        ++overlay_degree[j];
    }

    Eigen::MatrixXd lap_overlay = laplacian(overlay).cast<double>();
    Eigen::VectorXd targets = Eigen::Map<const Eigen::VectorXd>(target.values.data(), n);

    std::vector<int> pick(want);
    std::vector<int> degree = overlay_degree;
    Eigen::MatrixXd lap = lap_overlay;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;

    auto add_edge = [&](const Edge& e, double sign) {
        lap(e.first - 1, e.second - 1) -= sign;
        lap(e.second - 1, e.first - 1) -= sign;
        lap(e.first - 1, e.first - 1) += sign;
        lap(e.second - 1, e.second - 1) += sign;
        degree[e.first] += static_cast<int>(sign);
        degree[e.second] += static_cast<int>(sign);
    };

    // depth-first walk over ascending index combinations; the Laplacian is
    // updated incrementally so each leaf only pays for the eigensolve
    std::function<void(int, int)> walk = [&](int depth, int first) {
        if (depth == want) {
            ++result.bases_searched;
            solver.compute(lap, Eigen::EigenvaluesOnly);
            if (((solver.eigenvalues() - targets).cwiseAbs().maxCoeff()) <= target.tolerance) {
                std::vector<Edge> base_edges;
                for (int idx : pick) base_edges.push_back(slots[idx]);
                ReconstructionCandidate cand;
                cand.base = Graph(base_nodes, base_edges);
                const auto& ev = solver.eigenvalues();
                cand.spectrum.assign(ev.data(), ev.data() + ev.size());
                Graph combined(n, [&] {
                    std::vector<Edge> all = overlay.edges();
                    all.insert(all.end(), base_edges.begin(), base_edges.end());
                    return all;
                }());
                cand.exact_perfect = check_perfect_exact(combined).perfect;
                result.candidates.push_back(std::move(cand));
            }
            return;
        }
        for (int idx = first; idx <= m - (want - depth); ++idx) {
            const Edge& e = slots[idx];
            if (degree[e.first] >= degree_cap || degree[e.second] >= degree_cap) continue;
            pick[depth] = idx;
            add_edge(e, 1.0);
            walk(depth + 1, idx + 1);
            add_edge(e, -1.0);
        }
    };
    if (want >= 0) walk(0, 0);
    return result;
}

}  // namespace pcg
