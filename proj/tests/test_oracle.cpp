#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "tracefree/ansatz.hpp"
#include "tracefree/oracle.hpp"
#include "tracefree/random.hpp"

using tracefree::ansatz_basis;
using tracefree::AnsatzBasis;
using tracefree::gram_system;
using tracefree::GramSystem;
using tracefree::inner;
using tracefree::MinNormSolution;
using tracefree::norm;
using tracefree::norm_squared;
using tracefree::OracleReport;
using tracefree::solve_min_norm;
using tracefree::Tensor3;
using tracefree::Tensor4;
using tracefree::traces;
using tracefree::verify;

TEST_CASE("gram system shape and symmetry") {
    const Tensor3 t = tracefree::random_tensor3(4, 800);
    const GramSystem sys = gram_system(t, ansatz_basis(t));
    REQUIRE(sys.gram.rows() == 9);
    REQUIRE(sys.gram.cols() == 9);
    REQUIRE(sys.rhs.size() == 9);
    REQUIRE(sys.labels.size() == 9);
    REQUIRE((sys.gram - sys.gram.transpose()).cwiseAbs().maxCoeff() == 0.0);

    // PSD: smallest eigenvalue can only be roundoff-negative.
    const Eigen::VectorXd ev =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sys.gram).eigenvalues();
    REQUIRE(ev.minCoeff() >= -1e-10 * std::max(ev.maxCoeff(), 1.0));
}

TEST_CASE("gram of the zero tensor") {
    // Order 3: every element vanishes with the traces.
    const Tensor3 z3(3);
    const GramSystem sys3 = gram_system(z3, ansatz_basis(z3));
    REQUIRE(sys3.gram.cwiseAbs().maxCoeff() == 0.0);
    REQUIRE(sys3.rhs.cwiseAbs().maxCoeff() == 0.0);

    // Order 4: only the delta-product block survives, with inner
    // products n^2 on the diagonal and n off it.
    const int n = 3;
    const Tensor4 z4(n);
    const GramSystem sys4 = gram_system(z4, ansatz_basis(z4));
    REQUIRE(sys4.gram.topLeftCorner(72, 72).cwiseAbs().maxCoeff() == 0.0);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            REQUIRE(sys4.gram(72 + a, 72 + b) == (a == b ? double(n * n) : double(n)));
}

TEST_CASE("solver on the zero tensor") {
    const Tensor3 z(3);
    const MinNormSolution<3> sol = solve_min_norm(z, ansatz_basis(z));
    REQUIRE(sol.gram_rank == 0);
    REQUIRE(sol.coefficients.cwiseAbs().maxCoeff() == 0.0);
    REQUIRE(tracefree::max_abs(sol.minimizer) == 0.0);

    const OracleReport rep = verify(z);
    REQUIRE(rep.proj_residual == 0.0);
    REQUIRE(rep.gram_rank == 0);

    // Order 4: the delta block is nonsingular, so rank is exactly 3,
    // but with zero right-hand side the solution stays zero.
    const Tensor4 z4(3);
    const MinNormSolution<4> sol4 = solve_min_norm(z4, ansatz_basis(z4));
    REQUIRE(sol4.gram_rank == 3);
    REQUIRE(sol4.coefficients.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("trace-free input needs no correction") {
    // The basis is built from the input's own traces, so here every
    // element is numerically zero and the coefficients are pure noise;
    // the determined quantity is the minimizer, which must be the input.
    const Tensor3 f3 = tracefree::project(tracefree::random_tensor3(4, 810));
    const MinNormSolution<3> sol3 = solve_min_norm(f3, ansatz_basis(f3));
    REQUIRE(test_support::max_diff(sol3.minimizer, f3) <= 1e-10);

    const Tensor4 f4 = tracefree::project(tracefree::random_tensor4(4, 811));
    const MinNormSolution<4> sol4 = solve_min_norm(f4, ansatz_basis(f4));
    REQUIRE(test_support::max_diff(sol4.minimizer, f4) <= 1e-9);
}

TEST_CASE("pure trace input is absorbed entirely") {
    const Tensor3 pure = test_support::degenerate_pure_trace(4, 812);
    const MinNormSolution<3> sol = solve_min_norm(pure, ansatz_basis(pure));
    REQUIRE(tracefree::max_abs(sol.minimizer) <= 1e-12);
    REQUIRE(norm_squared(sol.minimizer) <= 1e-20);
}

TEST_CASE("closed form agrees with the oracle where the gram is regular") {
    for (int n : {3, 4, 5, 6}) {
        const Tensor3 t = tracefree::random_tensor3(n, 820 + n);
        const OracleReport rep = verify(t);
        REQUIRE(rep.gram_rank == 9);
        REQUIRE(rep.proj_residual <= 1e-9);
        REQUIRE((rep.coeff_closed - rep.coeff_oracle).cwiseAbs().maxCoeff() <= 1e-9);
        REQUIRE(std::abs(rep.norm_closed - rep.norm_oracle) <=
                1e-8 * std::max(1.0, std::abs(rep.norm_closed)));
    }
    for (int n : {4, 5}) {
        const Tensor4 t = tracefree::random_tensor4(n, 830 + n);
        const OracleReport rep = verify(t);
        REQUIRE(rep.gram_rank == 75);
        REQUIRE(rep.proj_residual <= 1e-8);
        REQUIRE((rep.coeff_closed - rep.coeff_oracle).cwiseAbs().maxCoeff() <= 1e-8);
        REQUIRE(std::abs(rep.norm_closed - rep.norm_oracle) <=
                1e-8 * std::max(1.0, std::abs(rep.norm_closed)));
    }
}

TEST_CASE("structurally singular grams still give the same projection") {
    // Order 3, n = 2: nine elements in a span of dimension at most six.
    const Tensor3 t2 = tracefree::random_tensor3(2, 840);
    const OracleReport rep2 = verify(t2);
    REQUIRE(rep2.gram_rank < 9);
    REQUIRE(rep2.proj_residual <= 1e-9);

    // Order 4, n = 3: 72 trace placements cannot be independent in a
    // nine-dimensional matrix space per placement.
    const Tensor4 t3 = tracefree::random_tensor4(3, 841);
    const OracleReport rep3 = verify(t3);
    REQUIRE(rep3.gram_rank < 75);
    REQUIRE(rep3.proj_residual <= 1e-8);

    // Constructed degeneracies: coincident or vanishing traces.
    for (std::uint64_t seed : {842, 843}) {
        const Tensor3 sym = test_support::degenerate_equal_traces(3, seed);
        const Tensor3 anti = test_support::degenerate_antisymmetric(3, seed + 10);
        for (const Tensor3* t : {&sym, &anti}) {
            const OracleReport rep = verify(*t);
            REQUIRE(rep.gram_rank < 9);
            REQUIRE(rep.proj_residual <= 1e-9);
        }
    }
}

TEST_CASE("objective descent: perturbing any coefficient cannot help") {
    const double eps = 1e-3;
    const Tensor3 t = tracefree::random_tensor3(3, 850);
    const AnsatzBasis<3> basis = ansatz_basis(t);
    const MinNormSolution<3> sol = solve_min_norm(t, basis);
    const double best = norm_squared(sol.minimizer);
    for (const Tensor3& e : basis.elements) {
        for (double sign : {1.0, -1.0}) {
            Tensor3 perturbed = sol.minimizer;
            perturbed.add_scaled(sign * eps, e);
            REQUIRE(norm_squared(perturbed) >= best - 1e-12);
        }
    }
}

TEST_CASE("coefficient cross-sums vanish at the minimizer") {
    // For order 3, the normal equations are equivalent to nine linear
    // combinations of the coefficients (n on the own slot, 1 elsewhere,
    // plus 1 on the diagonal slot of each letter) vanishing, whenever
    // the 3x3 trace Gram matrix is nonsingular.
    for (int n : {3, 4, 5}) {
        const Tensor3 t = tracefree::random_tensor3(n, 860 + n);
        const auto s = traces(t);
        Eigen::Matrix3d trace_gram;
        const std::array<const Eigen::VectorXd*, 3> ts = {&s.t1, &s.t2, &s.t3};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) trace_gram(a, b) = ts[a]->dot(*ts[b]);
        REQUIRE(std::abs(trace_gram.determinant()) > 1e-8);  // generic input

        const MinNormSolution<3> sol = solve_min_norm(t, ansatz_basis(t));
        const Eigen::VectorXd& c = sol.coefficients;
        for (int letter = 0; letter < 3; ++letter) {
            for (int p = 0; p < 3; ++p) {
                double barred = c[3 * letter + p];
                barred *= static_cast<double>(n);
                for (int q = 0; q < 3; ++q)
                    if (q != p) barred += c[3 * letter + q];
                if (p == letter) barred += 1.0;
                REQUIRE(std::abs(barred) <= 1e-8);
            }
        }
    }
}

TEST_CASE("report fields are internally consistent") {
    const Tensor4 t = tracefree::random_tensor4(4, 870);
    const OracleReport rep = verify(t);
    REQUIRE(rep.order == 4);
    REQUIRE(rep.dim == 4);
    REQUIRE(rep.coeff_closed.size() == 75);
    REQUIRE(rep.coeff_oracle.size() == 75);
    REQUIRE(rep.proj_residual >= 0.0);
    REQUIRE(rep.gram_cond >= 1.0);
    REQUIRE(rep.norm_closed >= 0.0);
    REQUIRE(rep.norm_oracle >= 0.0);
}
