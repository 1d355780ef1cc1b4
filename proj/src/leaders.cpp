#include "pcg/leaders.hpp"

#include "pcg/exact.hpp"
#include "pcg/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pcg {

LeaderSet::LeaderSet(std::vector<int> members) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("leader set must be nonempty");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("leader set has duplicate members");
    if (members_.front() < 1) throw std::invalid_argument("leader labels must be positive");
}

bool LeaderSet::contains(int node) const {
    return std::binary_search(members_.begin(), members_.end(), node);
}

std::string LeaderSet::str() const {
    std::ostringstream out;
    for (size_t k = 0; k < members_.size(); ++k) {
        if (k > 0) out << ",";
        out << members_[k];
    }
    return out.str();
}

LeaderSet LeaderSet::parse(const std::string& text, int n) {
    std::vector<int> members;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        auto last = token.find_last_not_of(" \t");
        token = token.substr(first, last - first + 1);
        int v = 0;
        try {
            size_t used = 0;
            v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed leader label: " + token);
        }
        members.push_back(v);
    }
    LeaderSet s(std::move(members));
    for (int m : s.members())
        if (m > n) throw std::invalid_argument("leader " + std::to_string(m) + " out of range for n=" + std::to_string(n));
    return s;
}

PartitionedLaplacian partition_laplacian(const Eigen::MatrixXi& laplacian_matrix, const LeaderSet& s) {
    const int n = static_cast<int>(laplacian_matrix.rows());
    PartitionedLaplacian p;
    for (int v = 1; v <= n; ++v)
        (s.contains(v) ? p.leader_order : p.follower_order).push_back(v);
    for (int m : s.members())
        if (m > n) throw std::invalid_argument("leader out of range: " + std::to_string(m));

    const int nf = p.follower_count();
    const int nl = p.leader_count();
    p.L_f.resize(nf, nf);
    p.L_fl.resize(nf, nl);
    p.L_lf.resize(nl, nf);
    p.L_l.resize(nl, nl);
    for (int a = 0; a < nf; ++a)
        for (int b = 0; b < nf; ++b) p.L_f(a, b) = laplacian_matrix(p.follower_order[a] - 1, p.follower_order[b] - 1);
    for (int a = 0; a < nf; ++a)
        for (int b = 0; b < nl; ++b) p.L_fl(a, b) = laplacian_matrix(p.follower_order[a] - 1, p.leader_order[b] - 1);
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nf; ++b) p.L_lf(a, b) = laplacian_matrix(p.leader_order[a] - 1, p.follower_order[b] - 1);
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nl; ++b) p.L_l(a, b) = laplacian_matrix(p.leader_order[a] - 1, p.leader_order[b] - 1);
    return p;
}

PartitionedLaplacian partition_laplacian(const Graph& g, const LeaderSet& s) {
    for (int m : s.members())
        if (!g.valid_node(m)) throw std::invalid_argument("leader out of range: " + std::to_string(m));
    return partition_laplacian(laplacian(g), s);
}

bool kalman_controllable_exact(const PartitionedLaplacian& p) {
    const int nf = p.follower_count();
    const int nl = p.leader_count();
    if (nf == 0) return true;

    // columns of [B, AB, ..., A^(nf-1)B] with A = -L_f, B = -L_fl,
    // assembled in exact integer arithmetic
    MatZ a(nf, std::vector<mpz_class>(nf));
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j) a[i][j] = -p.L_f(i, j);
    MatZ block(nf, std::vector<mpz_class>(nl));
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nl; ++j) block[i][j] = -p.L_fl(i, j);

    MatZ ctrl(nf, std::vector<mpz_class>(static_cast<size_t>(nf) * nl));
    for (int power = 0; power < nf; ++power) {
        if (power > 0) {
            MatZ next(nf, std::vector<mpz_class>(nl, mpz_class(0)));
            for (int i = 0; i < nf; ++i)
                for (int k = 0; k < nf; ++k) {
                    if (a[i][k] == 0) continue;
                    for (int j = 0; j < nl; ++j) next[i][j] += a[i][k] * block[k][j];
                }
            block = std::move(next);
        }
        for (int i = 0; i < nf; ++i)
            for (int j = 0; j < nl; ++j) ctrl[i][static_cast<size_t>(power) * nl + j] = block[i][j];
    }
    return bareiss_rank(std::move(ctrl)) == nf;
}

bool kalman_controllable_numeric(const PartitionedLaplacian& p) {
    const int nf = p.follower_count();
    const int nl = p.leader_count();
    if (nf == 0) return true;

    Eigen::MatrixXd a = -p.L_f.cast<double>();
    Eigen::MatrixXd block = -p.L_fl.cast<double>();
    Eigen::MatrixXd ctrl(nf, nf * nl);
    for (int power = 0; power < nf; ++power) {
        if (power > 0) block = a * block;
        ctrl.middleCols(power * nl, nl) = block;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(ctrl);
    double sigma_max = svd.singularValues()(0);
    double threshold = nf * std::numeric_limits<double>::epsilon() * std::max(sigma_max, 1.0);
    int rank = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > threshold) ++rank;
    return rank == nf;
}

bool kalman_controllable(const PartitionedLaplacian& p) {
    if (p.node_count() <= 16) return kalman_controllable_exact(p);
    return kalman_controllable_numeric(p);
}

bool pbh_controllable(const Graph& g, const LeaderSet& s, double tol, double* witness_eigenvalue) {
    for (int m : s.members())
        if (!g.valid_node(m)) throw std::invalid_argument("leader out of range: " + std::to_string(m));

    SpectralReport report = eigendecompose(g);
    const int n = g.node_count();
    const double group_tol = default_tol_gap(report);

    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && report.eigenvalues(end) - report.eigenvalues(end - 1) <= group_tol) ++end;
        const int dim = end - start;

        Eigen::MatrixXd leader_rows(s.size(), dim);
        for (int r = 0; r < s.size(); ++r)
            leader_rows.row(r) = report.eigenvectors.row(s.members()[r] - 1).segment(start, dim);

        // rank defect in the leader rows of the eigenspace basis means some
        // eigenvector in the span vanishes on every leader
        double sigma_min = 0.0;
        double sigma_max = 0.0;
        if (s.size() >= dim) {
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(leader_rows);
            sigma_max = svd.singularValues()(0);
            sigma_min = svd.singularValues()(dim - 1);
        }
        if (sigma_min <= tol * std::max(1.0, sigma_max)) {
            if (witness_eigenvalue) *witness_eigenvalue = report.eigenvalues(start);
            return false;
        }
        start = end;
    }
    return true;
}

std::map<LeaderSet, bool> classify_all_leader_sets(const Graph& g) {
    const int n = g.node_count();
    if (n > kSubsetEnumerationLimit)
        throw std::invalid_argument("subset enumeration limited to n <= " + std::to_string(kSubsetEnumerationLimit));
    const Eigen::MatrixXi l = laplacian(g);
    std::map<LeaderSet, bool> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) members.push_back(v);
        LeaderSet s(std::move(members));
        out.emplace(s, kalman_controllable(partition_laplacian(l, s)));
    }
    return out;
}

bool perfect_by_definition(const Graph& g) {
    const int n = g.node_count();
    if (n > kSubsetEnumerationLimit)
        throw std::invalid_argument("subset enumeration limited to n <= " + std::to_string(kSubsetEnumerationLimit));
    const Eigen::MatrixXi l = laplacian(g);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) members.push_back(v);
        if (!kalman_controllable(partition_laplacian(l, LeaderSet(std::move(members))))) return false;
    }
    return true;
}

}  // namespace pcg
