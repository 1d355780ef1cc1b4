#pragma once

#include "pcg/graph.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pcg {

inline constexpr int kExhaustiveCensusLimit = 7;
inline constexpr int kRandomCensusLimit = 64;

struct CensusRow {
    int n = 0;
    std::uint64_t total_graphs = 0;
    std::uint64_t connected_graphs = 0;
    std::uint64_t perfect_graphs = 0;
    std::vector<Graph> exemplars;  // up to 5 perfect graphs, enumeration order

    std::string csv() const;  // "n,total,connected,perfect"
};

// Visits every labeled graph on n nodes in edge-mask order, pairs ordered
// lexicographically. Deterministic.
void for_each_graph(int n, const std::function<void(const Graph&)>& visit);

// Exhaustive labeled-graph census of exact perfect controllability.
CensusRow pc_census(int n);

// Reproducible G(n, p) sample census. The generator is pinned (mt19937_64
// with an explicit uniform threshold), so the row is bit-identical for a
// given seed on any platform.
CensusRow random_census(int n, double edge_prob, std::uint64_t sample_count, std::uint64_t seed);
Graph random_graph(int n, double edge_prob, std::uint64_t seed);

struct SpectrumTarget {
    std::vector<double> values;  // ascending
    double tolerance = 1e-3;     // per-eigenvalue absolute
};

SpectrumTarget load_spectrum_file(const std::string& path);

struct ReconstructionCandidate {
    Graph base;                    // edges on the base nodes only
    std::vector<double> spectrum;  // of base + overlay
    bool exact_perfect = false;
};

struct ReconstructionResult {
    bool trace_consistent = false;
    int implied_base_edges = -1;
    double trace_sum = 0.0;
    std::uint64_t bases_searched = 0;
    std::vector<ReconstructionCandidate> candidates;  // lexicographic base order

    // lexicographically smallest candidate, chosen as the working fixture
    const ReconstructionCandidate* pinned() const {
        return candidates.empty() ? nullptr : &candidates.front();
    }
};

// Searches every base edge set of the implied size on nodes 1..base_nodes,
// disjoint from the overlay, whose union with the overlay matches the
// target spectrum within tolerance. The implied size comes from the trace
// identity (eigenvalue sum = 2 |E|); an inconsistent sum short-circuits
// with trace_consistent = false. Every candidate is re-verified against
// the exact perfect-controllability test.
ReconstructionResult reconstruct_base(const SpectrumTarget& target, const Graph& overlay,
                                      int base_nodes = -1);

}  // namespace pcg
