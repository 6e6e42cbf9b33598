#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "tracefree/ansatz.hpp"
#include "tracefree/projection3.hpp"
#include "tracefree/random.hpp"

using tracefree::ansatz_basis;
using tracefree::CoefficientTable3;
using tracefree::coefficients3;
using tracefree::inner;
using tracefree::max_trace_residual;
using tracefree::minimal_norm_squared;
using tracefree::norm;
using tracefree::norm_squared;
using tracefree::project;
using tracefree::Tensor3;

TEST_CASE("coefficient values at small dimensions") {
    const CoefficientTable3 c3 = coefficients3(3);
    REQUIRE(c3.diag == Catch::Approx(-0.4).margin(1e-15));
    REQUIRE(c3.off == Catch::Approx(0.1).margin(1e-15));

    const CoefficientTable3 c2 = coefficients3(2);
    REQUIRE(c2.diag == Catch::Approx(-0.75).margin(1e-15));
    REQUIRE(c2.off == Catch::Approx(0.25).margin(1e-15));

    REQUIRE_THROWS_AS(coefficients3(1), tracefree::DimTooSmall);

    // Large n: the diagonal weight behaves like -1/n.
    const CoefficientTable3 big = coefficients3(1000);
    REQUIRE(std::abs(big.diag * 1000.0 + 1.0) < 5e-3);
}

TEST_CASE("full coefficient vector layout") {
    const Eigen::VectorXd c = coefficients3(4).full_coefficients();
    REQUIRE(c.size() == 9);
    const double diag = coefficients3(4).diag;
    const double off = coefficients3(4).off;
    for (int v = 0; v < 3; ++v)
        for (int slot = 0; slot < 3; ++slot)
            REQUIRE(c[3 * v + slot] == (v == slot ? diag : off));
}

TEST_CASE("projection is trace-free") {
    for (int n = 2; n <= 8; ++n) {
        const Tensor3 t = tracefree::random_tensor3(n, 500 + n);
        const Tensor3 f = project(t);
        REQUIRE(max_trace_residual(f) <= 1e-12 * std::max(1.0, norm(t)));
    }
}

TEST_CASE("trace-free input is a fixed point") {
    Tensor3 t(3);
    t(0, 1, 2) = 1.0;  // no repeated index pair: already trace-free
    REQUIRE(test_support::max_diff(project(t), t) == 0.0);
}

TEST_CASE("pure trace input projects to zero") {
    const Tensor3 pure = test_support::degenerate_pure_trace(4, 51);
    REQUIRE(tracefree::max_abs(project(pure)) <= 1e-13);
    REQUIRE(std::abs(minimal_norm_squared(pure)) <= 1e-12 * norm_squared(pure));
}

TEST_CASE("projection is idempotent and linear") {
    for (int n : {2, 4, 7}) {
        const Tensor3 t = tracefree::random_tensor3(n, 520 + n);
        const Tensor3 f = project(t);
        REQUIRE(test_support::max_diff(project(f), f) <= 1e-12 * std::max(1.0, norm(t)));

        const Tensor3 u = tracefree::random_tensor3(n, 540 + n);
        const Tensor3 lhs = project(2.0 * t - 0.5 * u);
        const Tensor3 rhs = 2.0 * project(t) - 0.5 * project(u);
        REQUIRE(test_support::max_diff(lhs, rhs) <= 1e-12 * std::max(1.0, norm(t) + norm(u)));
    }
}

TEST_CASE("residual is orthogonal to the projection and to the basis") {
    for (int n : {2, 3, 5}) {
        const Tensor3 t = tracefree::random_tensor3(n, 560 + n);
        const Tensor3 f = project(t);
        REQUIRE(std::abs(inner(f, t - f)) <= 1e-12 * norm_squared(t));
        for (const Tensor3& e : ansatz_basis(t).elements)
            REQUIRE(std::abs(inner(f, e)) <= 1e-11 * std::max(1.0, norm_squared(t)));
    }
}

TEST_CASE("norm formula matches the projection norm") {
    for (int n = 2; n <= 8; ++n) {
        const Tensor3 t = tracefree::random_tensor3(n, 580 + n);
        const Tensor3 f = project(t);
        const double formula = minimal_norm_squared(t);
        REQUIRE(std::abs(formula - norm_squared(f)) <= 1e-12 * norm_squared(t));
        REQUIRE(formula >= -1e-12 * norm_squared(t));
        REQUIRE(formula <= norm_squared(t) * (1.0 + 1e-12));
    }

    // Trace-free input: the formula returns the plain squared norm.
    Tensor3 tf(3);
    tf(0, 1, 2) = 2.0;
    tf(1, 0, 2) = -1.0;
    REQUIRE(minimal_norm_squared(tf) == Catch::Approx(norm_squared(tf)).epsilon(1e-14));
}

TEST_CASE("projection commutes with slot permutations") {
    const int n = 4;
    const Tensor3 t = tracefree::random_tensor3(n, 590);
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms) {
        const Tensor3 lhs = project(permuted(t, p));
        const Tensor3 rhs = permuted(project(t), p);
        REQUIRE(test_support::max_diff(lhs, rhs) <= 1e-12 * std::max(1.0, norm(t)));
    }
}

TEST_CASE("degenerate trace configurations still project to trace-free tensors") {
    const Tensor3 sym = test_support::degenerate_equal_traces(3, 61);
    const Tensor3 anti = test_support::degenerate_antisymmetric(3, 62);
    for (const Tensor3* t : {&sym, &anti}) {
        const Tensor3 f = project(*t);
        REQUIRE(max_trace_residual(f) <= 1e-12 * std::max(1.0, norm(*t)));
        REQUIRE(std::abs(minimal_norm_squared(*t) - norm_squared(f)) <=
                1e-12 * std::max(1.0, norm_squared(*t)));
    }
}
