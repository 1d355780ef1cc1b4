#pragma once

#include "pcg/graph.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace pcg {

// Eigendecomposition of a graph Laplacian. Eigenvalues ascending; column
// k of eigenvectors pairs with eigenvalue k. Each eigenvector's sign is
// fixed so its first entry of non-negligible magnitude is positive.
struct SpectralReport {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
    double min_gap = 0.0;        // smallest consecutive eigenvalue difference; +inf for n=1
    double min_abs_entry = 0.0;  // smallest |entry| over the whole eigenvector matrix
    double max_residual = 0.0;   // max-norm of L*v - lambda*v over all pairs
    double residual_bound = 0.0; // 64*n*u*(1 + rho(L)), u = unit roundoff
    std::vector<std::vector<bool>> zero_flags;  // [vector][entry], default tolerance
};

SpectralReport eigendecompose(const Eigen::MatrixXi& laplacian_matrix);
SpectralReport eigendecompose(const Graph& g);

struct PcVerdict {
    enum class Verdict { perfect, not_perfect, indeterminate_numeric };
    enum class Reason { ok, repeated_eigenvalue, zero_eigenvector_entry };

    Verdict verdict = Verdict::not_perfect;
    Reason reason = Reason::ok;
    // repeated-eigenvalue witness: the two clashing eigenvalues
    double witness_eigenvalue_a = 0.0;
    double witness_eigenvalue_b = 0.0;
    // zero-entry witness: eigenvalue and 1-based entry index
    double witness_eigenvalue = 0.0;
    int witness_entry = 0;
    double margin = 0.0;  // min(min_gap, min_abs_entry)
    double tol_gap = 0.0;
    double tol_zero = 0.0;
};

constexpr double kDefaultTolZero = 1e-8;

// tol_gap default is 1e-8 * max(1, lambda_max) for the given graph.
double default_tol_gap(const SpectralReport& report);

// Numeric two-condition test. Perfect only when both the minimum eigengap
// and every relative eigenvector entry clear their tolerances by a factor
// of 10; quantities within a factor 10 of tolerance on either side yield
// indeterminate-numeric so borderline inputs defer to the exact checker.
PcVerdict check_perfect_numeric(const Graph& g, double tol_gap, double tol_zero);
PcVerdict check_perfect_numeric(const Graph& g);

// Eigenvalues to 4 decimal places, comma separated, ascending.
std::string format_spectrum(const Eigen::VectorXd& eigenvalues);

}  // namespace pcg
