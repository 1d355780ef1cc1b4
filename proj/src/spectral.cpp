#include "pcg/spectral.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pcg {

SpectralReport eigendecompose(const Eigen::MatrixXi& laplacian_matrix) {
    if (laplacian_matrix.rows() != laplacian_matrix.cols())
        throw std::invalid_argument("eigendecompose: matrix not square");
    if (laplacian_matrix != laplacian_matrix.transpose().eval())
        throw std::invalid_argument("eigendecompose: matrix not symmetric");

    const int n = static_cast<int>(laplacian_matrix.rows());
    Eigen::MatrixXd l = laplacian_matrix.cast<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");

    SpectralReport report;
    report.eigenvalues = solver.eigenvalues();
    report.eigenvectors = solver.eigenvectors();

    const double unit_roundoff = std::numeric_limits<double>::epsilon() / 2;
    const double rho = std::max(std::abs(report.eigenvalues(0)), std::abs(report.eigenvalues(n - 1)));
    report.residual_bound = 64.0 * n * unit_roundoff * (1.0 + rho);

    for (int k = 0; k < n; ++k) {
        auto col = report.eigenvectors.col(k);
        for (int i = 0; i < n; ++i) {
            if (std::abs(col(i)) > report.residual_bound) {
                if (col(i) < 0) report.eigenvectors.col(k) = -col;
                break;
            }
        }
    }

    Eigen::MatrixXd residual =
        l * report.eigenvectors - report.eigenvectors * report.eigenvalues.asDiagonal();
    report.max_residual = residual.cwiseAbs().maxCoeff();

    report.min_gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k + 1 < n; ++k)
        report.min_gap = std::min(report.min_gap, report.eigenvalues(k + 1) - report.eigenvalues(k));
    report.min_abs_entry = report.eigenvectors.cwiseAbs().minCoeff();

    report.zero_flags.assign(n, std::vector<bool>(n, false));
    for (int k = 0; k < n; ++k) {
        double norm_inf = report.eigenvectors.col(k).cwiseAbs().maxCoeff();
        for (int i = 0; i < n; ++i)
            report.zero_flags[k][i] = std::abs(report.eigenvectors(i, k)) <= kDefaultTolZero * norm_inf;
    }
    return report;
}

SpectralReport eigendecompose(const Graph& g) { return eigendecompose(laplacian(g)); }

double default_tol_gap(const SpectralReport& report) {
    double lambda_max = report.eigenvalues(report.eigenvalues.size() - 1);
    return 1e-8 * std::max(1.0, lambda_max);
}

namespace {

enum class Band { below, inside, above };

// position of a quantity relative to [tol/10, 10*tol]
Band band_of(double quantity, double tol) {
    if (quantity > 10.0 * tol) return Band::above;
    if (quantity < tol / 10.0) return Band::below;
    return Band::inside;
}

PcVerdict verdict_from_report(const SpectralReport& report, double tol_gap, double tol_zero) {
    const int n = static_cast<int>(report.eigenvalues.size());

    PcVerdict out;
    out.tol_gap = tol_gap;
    out.tol_zero = tol_zero;
    out.margin = std::min(report.min_gap, report.min_abs_entry);

    Band gap_band = Band::above;
    int gap_at = -1;
    if (n > 1) {
        double worst = std::numeric_limits<double>::infinity();
        for (int k = 0; k + 1 < n; ++k) {
            double gap = report.eigenvalues(k + 1) - report.eigenvalues(k);
            if (gap < worst) {
                worst = gap;
                gap_at = k;
            }
        }
        gap_band = band_of(worst, tol_gap);
    }
    if (gap_band == Band::below) {
        out.verdict = PcVerdict::Verdict::not_perfect;
        out.reason = PcVerdict::Reason::repeated_eigenvalue;
        out.witness_eigenvalue_a = report.eigenvalues(gap_at);
        out.witness_eigenvalue_b = report.eigenvalues(gap_at + 1);
        return out;
    }

    Band entry_band = Band::above;
    int entry_vec = -1, entry_idx = -1;
    double worst_rel = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        double norm_inf = report.eigenvectors.col(k).cwiseAbs().maxCoeff();
        for (int i = 0; i < n; ++i) {
            double rel = std::abs(report.eigenvectors(i, k)) / norm_inf;
            if (rel < worst_rel) {
                worst_rel = rel;
                entry_vec = k;
                entry_idx = i;
            }
        }
    }
    entry_band = band_of(worst_rel, tol_zero);
    if (entry_band == Band::below) {
        out.verdict = PcVerdict::Verdict::not_perfect;
        out.reason = PcVerdict::Reason::zero_eigenvector_entry;
        out.witness_eigenvalue = report.eigenvalues(entry_vec);
        out.witness_entry = entry_idx + 1;
        return out;
    }

    if (gap_band == Band::inside || entry_band == Band::inside) {
        out.verdict = PcVerdict::Verdict::indeterminate_numeric;
        return out;
    }
    out.verdict = PcVerdict::Verdict::perfect;
    return out;
}

}  // namespace

PcVerdict check_perfect_numeric(const Graph& g, double tol_gap, double tol_zero) {
    return verdict_from_report(eigendecompose(g), tol_gap, tol_zero);
}

PcVerdict check_perfect_numeric(const Graph& g) {
    SpectralReport report = eigendecompose(g);
    return verdict_from_report(report, default_tol_gap(report), kDefaultTolZero);
}

std::string format_spectrum(const Eigen::VectorXd& eigenvalues) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(4);
    for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
        if (k > 0) out << ", ";
        // avoid "-0.0000" for the zero eigenvalue
        double v = eigenvalues(k);
        if (std::abs(v) < 5e-5) v = 0.0;
        out << v;
    }
    return out.str();
}

}  // namespace pcg
