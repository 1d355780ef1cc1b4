#include "pcg/exact.hpp"

#include "helpers.hpp"
#include "pcg/census.hpp"
#include "pcg/spectral.hpp"

#include <doctest.h>

#include <random>

using namespace pcg;
using test_helpers::complete_graph;
using test_helpers::path_graph;
using test_helpers::permuted;
using test_helpers::random_permutation;

namespace {

// Independent characteristic-polynomial oracle: fraction-free Bareiss
// elimination on xI - M with polynomial entries. Deliberately a different
// route than the library's evaluation-interpolation implementation.
IntPoly char_poly_oracle(const Eigen::MatrixXi& m) {
    const int n = static_cast<int>(m.rows());
    if (n == 0) return IntPoly::constant(1);
    std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[i][j] = IntPoly::constant(-m(i, j));
            if (i == j) a[i][j] = a[i][j] + IntPoly::monomial(1);
        }
    IntPoly prev = IntPoly::constant(1);
    for (int k = 0; k + 1 < n; ++k) {
        // leading principal minors of xI - M are monic, so the pivot is
        // never the zero polynomial
        REQUIRE_FALSE(a[k][k].is_zero());
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev);
            a[i][k] = IntPoly{};
        }
        prev = a[k][k];
    }
    return a[n - 1][n - 1];
}

IntPoly poly(std::initializer_list<long> ascending) {
    std::vector<mpz_class> coeffs;
    for (long c : ascending) coeffs.emplace_back(c);
    return IntPoly(std::move(coeffs));
}

}  // namespace

TEST_CASE("bareiss determinant") {
    Eigen::MatrixXi m(3, 3);
    m << 2, 0, 1, 1, 1, 0, 0, 3, 1;
    CHECK(bareiss_det(to_matz(m)) == 2 * (1 * 1 - 0 * 3) - 0 + 1 * (1 * 3 - 0));
    CHECK(bareiss_det(MatZ{}) == 1);  // empty matrix
    Eigen::MatrixXi singular(2, 2);
    singular << 1, 2, 2, 4;
    CHECK(bareiss_det(to_matz(singular)) == 0);
    Eigen::MatrixXi perm(2, 2);
    perm << 0, 1, 1, 0;
    CHECK(bareiss_det(to_matz(perm)) == -1);
}

TEST_CASE("bareiss rank") {
    Eigen::MatrixXi m(2, 4);
    m << 1, -1, 2, 0, 2, -2, 4, 0;  // second row is a multiple of the first
    CHECK(bareiss_rank(to_matz(m)) == 1);
    Eigen::MatrixXi full(3, 3);
    full << 1, 0, 0, 0, 0, 1, 0, 1, 0;
    CHECK(bareiss_rank(to_matz(full)) == 3);
    CHECK(bareiss_rank(MatZ{}) == 0);
    CHECK(bareiss_rank(MatZ{{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("characteristic polynomial fixed values") {
    CHECK(char_poly(laplacian(new_graph(2).with_edge(1, 2))) == poly({0, -2, 1}));
    CHECK(char_poly(laplacian(path_graph(3))) == poly({0, 3, -4, 1}));
    CHECK(char_poly(laplacian(new_graph(1))) == IntPoly::monomial(1));
    CHECK(char_poly(laplacian(complete_graph(3))) == poly({0, 9, -6, 1}));
}

TEST_CASE("characteristic polynomial agrees with the polynomial-elimination oracle") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(n, 0.5, rng());
        Eigen::MatrixXi l = laplacian(g);
        IntPoly p = char_poly(l);
        CHECK(p == char_poly_oracle(l));

        // structural facts for Laplacians
        CHECK(p.coeff(n) == 1);
        CHECK(p.coeff(0) == 0);
        CHECK(p.coeff(n - 1) == -2 * g.edge_count());
        for (int k = 0; k <= n; ++k) {
            mpz_class signed_coeff = ((n - k) % 2 == 0) ? p.coeff(k) : mpz_class(-p.coeff(k));
            CHECK(signed_coeff >= 0);
        }

        // evaluation matches a direct determinant
        long t = static_cast<long>(rng() % 9) - 4;
        MatZ shifted = to_matz(l);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) shifted[i][j] = (i == j ? mpz_class(t) : mpz_class(0)) - l(i, j);
        CHECK(p.evaluate(t) == bareiss_det(shifted));
    }
}

TEST_CASE("deleted-node characteristic polynomial") {
    Eigen::MatrixXi l = laplacian(path_graph(3));
    CHECK(char_poly_deleted(l, 2) == poly({1, -2, 1}));  // (x-1)^2
    CHECK(char_poly_deleted(l, 1) == poly({1, -3, 1}));
    CHECK(char_poly_deleted(laplacian(new_graph(1)), 1) == IntPoly::constant(1));
    CHECK_THROWS_AS(char_poly_deleted(l, 4), std::invalid_argument);
}

TEST_CASE("exact perfect-controllability certificates") {
    ExactCertificate k2 = check_perfect_exact(new_graph(2).with_edge(1, 2));
    CHECK(k2.perfect);
    CHECK(k2.reason == ExactCertificate::Reason::ok);
    CHECK(k2.node_results.size() == 2);

    ExactCertificate p3 = check_perfect_exact(path_graph(3));
    CHECK_FALSE(p3.perfect);
    CHECK(p3.reason == ExactCertificate::Reason::zero_entry);
    CHECK(p3.witness_node == 2);
    REQUIRE(p3.shared_factor.has_value());
    CHECK(*p3.shared_factor == poly({-1, 1}));  // x - 1

    ExactCertificate k3 = check_perfect_exact(complete_graph(3));
    CHECK_FALSE(k3.perfect);
    CHECK(k3.reason == ExactCertificate::Reason::repeated_root);
    REQUIRE(k3.repeated_factor.has_value());
    CHECK(*k3.repeated_factor == poly({-3, 1}));  // x - 3

    CHECK(check_perfect_exact(new_graph(1)).perfect);
    CHECK(check_perfect_exact(path_graph(4)).perfect);
}

TEST_CASE("certificate rendering names the failure") {
    std::string p3 = check_perfect_exact(path_graph(3)).render();
    CHECK(p3.find("node 2: FAIL") != std::string::npos);
    CHECK(p3.find("x - 1") != std::string::npos);
    std::string k3 = check_perfect_exact(complete_graph(3)).render();
    CHECK(k3.find("repeated factor") != std::string::npos);
}

TEST_CASE("exact and numeric checkers agree on 10,000 random graphs up to n=10") {
    std::mt19937_64 rng(71);
    int indeterminate = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        Graph g = random_graph(1 + iter % 10, 0.2 + 0.05 * (iter % 7), rng());
        PcVerdict numeric = check_perfect_numeric(g);
        if (numeric.verdict == PcVerdict::Verdict::indeterminate_numeric) {
            ++indeterminate;
            continue;
        }
        CHECK((numeric.verdict == PcVerdict::Verdict::perfect) == check_perfect_exact(g).perfect);
    }
    CHECK(indeterminate < 10);
}

TEST_CASE("exact verdict is permutation invariant") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, 0.5, rng());
        Graph h = permuted(g, random_permutation(n, rng));
        CHECK(check_perfect_exact(g).perfect == check_perfect_exact(h).perfect);
    }
}
