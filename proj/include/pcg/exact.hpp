#pragma once

#include "pcg/graph.hpp"
#include "pcg/intpoly.hpp"

#include <Eigen/Core>
#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace pcg {

// Row-major arbitrary-precision integer matrix, sized rows x cols.
using MatZ = std::vector<std::vector<mpz_class>>;

MatZ to_matz(const Eigen::MatrixXi& m);

// Fraction-free (Bareiss) determinant; exact over the integers.
mpz_class bareiss_det(MatZ m);

// Exact rank by fraction-free elimination with full pivoting.
int bareiss_rank(MatZ m);

// Characteristic polynomial det(xI - M) with exact integer coefficients,
// computed by evaluating fraction-free determinants at x = 0..n and
// interpolating through Newton forward differences. Monic of degree n.
IntPoly char_poly(const Eigen::MatrixXi& m);

// char_poly of M with row and column j deleted (j is 1-based).
IntPoly char_poly_deleted(const Eigen::MatrixXi& m, int j);

// Outcome of the exact two-condition test: the Laplacian spectrum is
// simple (squarefree characteristic polynomial) and no eigenvector entry
// vanishes. The entry test uses the eigenvector-eigenvalue identity: for
// a symmetric matrix with simple eigenvalue l and unit eigenvector v,
// v_j^2 * p'(l) = p_j(l) where p_j is the char poly of the j-th principal
// submatrix, so v_j = 0 exactly when p and p_j share the root l.
struct ExactCertificate {
    enum class Reason { ok, repeated_root, zero_entry };

    bool perfect = false;
    Reason reason = Reason::ok;
    // condition (a) failure: nonconstant gcd(p, p')
    std::optional<IntPoly> repeated_factor;
    // condition (b) failure: offending node and the factor shared between
    // p and the node-deleted characteristic polynomial
    int witness_node = 0;  // 1-based, 0 when not applicable
    std::optional<IntPoly> shared_factor;
    IntPoly characteristic;
    // condition (b) results for nodes checked before stopping
    std::vector<std::pair<int, bool>> node_results;

    std::string render() const;
};

ExactCertificate check_perfect_exact(const Graph& g);

}  // namespace pcg
