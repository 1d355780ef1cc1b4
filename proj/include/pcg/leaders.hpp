#pragma once

#include "pcg/graph.hpp"

#include <Eigen/Core>

#include <map>
#include <string>
#include <vector>

namespace pcg {

// Nonempty, duplicate-free subset of nodes acting as leaders. Members are
// kept sorted ascending.
class LeaderSet {
public:
    explicit LeaderSet(std::vector<int> members);
    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int node) const;

    bool operator==(const LeaderSet& rhs) const = default;
    bool operator<(const LeaderSet& rhs) const { return members_ < rhs.members_; }

    std::string str() const;  // "1,3,4"
    static LeaderSet parse(const std::string& text, int n);

private:
    std::vector<int> members_;
};

// Laplacian split by leader membership. Follower and leader orders are
// ascending node labels; permuting L by (follower_order, leader_order)
// reproduces the blocks exactly.
struct PartitionedLaplacian {
    Eigen::MatrixXi L_f;   // follower-follower
    Eigen::MatrixXi L_fl;  // follower-leader
    Eigen::MatrixXi L_lf;  // leader-follower
    Eigen::MatrixXi L_l;   // leader-leader
    std::vector<int> follower_order;
    std::vector<int> leader_order;

    int follower_count() const { return static_cast<int>(follower_order.size()); }
    int leader_count() const { return static_cast<int>(leader_order.size()); }
    int node_count() const { return follower_count() + leader_count(); }
};

PartitionedLaplacian partition_laplacian(const Eigen::MatrixXi& laplacian_matrix, const LeaderSet& s);
PartitionedLaplacian partition_laplacian(const Graph& g, const LeaderSet& s);

// Rank test on [B, AB, ..., A^(nf-1)B] with A = -L_f, B = -L_fl.
// The integer path is exact (fraction-free elimination); the numeric path
// thresholds singular values at nf * eps * sigma_max. The default picks
// the exact path up to n = 16 nodes. An empty follower set is controllable.
bool kalman_controllable_exact(const PartitionedLaplacian& p);
bool kalman_controllable_numeric(const PartitionedLaplacian& p);
bool kalman_controllable(const PartitionedLaplacian& p);

// Eigenvector test: controllable iff no Laplacian eigenvector vanishes on
// every leader coordinate. Repeated eigenvalues are handled by requiring
// the leader rows of each eigenspace basis to have full column rank, since
// any rank defect yields a combination vanishing on all leaders. On
// failure *witness_eigenvalue (if given) receives the offending eigenvalue.
bool pbh_controllable(const Graph& g, const LeaderSet& s, double tol = 1e-8,
                      double* witness_eigenvalue = nullptr);

inline constexpr int kSubsetEnumerationLimit = 20;

// Controllability of every nonempty leader subset; guarded at n <= 20.
std::map<LeaderSet, bool> classify_all_leader_sets(const Graph& g);

// Ground-truth oracle: controllable under every nonempty leader selection.
bool perfect_by_definition(const Graph& g);

}  // namespace pcg
