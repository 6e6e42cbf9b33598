#pragma once

// Independent check on the closed-form projections: set the minimization
// up as a dense least-squares problem over the explicit ansatz basis and
// solve its normal equations with an eigendecomposition pseudo-inverse.
// This route shares no coefficient data with the closed forms, so
// agreement of the two projections is a genuine cross-check.  The Gram
// matrix is structurally rank-deficient for some inputs (order 3 at
// n = 2, order 4 at n = 3, and whenever traces coincide); the minimizer
// is still unique even though the coefficients are not, which is why
// verification compares projections rather than raw coefficients.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tracefree/ansatz.hpp"
#include "tracefree/projection3.hpp"
#include "tracefree/projection4.hpp"
#include "tracefree/tensor.hpp"
#include "tracefree/traces.hpp"

namespace tracefree {

// Normal equations of min over c of |T + sum_a c_a E_a|^2:
// gram(a,b) = <E_a, E_b>, rhs(a) = -<T, E_a>.
struct GramSystem {
    Eigen::MatrixXd gram;
    Eigen::VectorXd rhs;
    std::vector<std::string> labels;
};

template <int Order>
GramSystem gram_system(const Tensor<Order>& t, const AnsatzBasis<Order>& basis) {
    const int m = static_cast<int>(basis.elements.size());
    GramSystem sys;
    sys.gram = Eigen::MatrixXd::Zero(m, m);
    sys.rhs = Eigen::VectorXd::Zero(m);
    sys.labels = basis.labels;
    for (int a = 0; a < m; ++a) {
        for (int b = a; b < m; ++b) {
            const double ip = inner(basis.elements[a], basis.elements[b]);
            sys.gram(a, b) = ip;
            sys.gram(b, a) = ip;
        }
        sys.rhs[a] = -inner(t, basis.elements[a]);
    }
    return sys;
}

template <int Order>
struct MinNormSolution {
    Tensor<Order> minimizer;
    Eigen::VectorXd coefficients;
    int gram_rank = 0;
    double gram_cond = 0.0;  // ratio of largest to smallest retained eigenvalue
};

// Solve the normal equations with a spectral pseudo-inverse, dropping
// eigenvalues below 1e-12 times the largest.  Rank-deficient systems
// get the least-squares solution of minimal coefficient norm.
template <int Order>
MinNormSolution<Order> solve_min_norm(const Tensor<Order>& t, const AnsatzBasis<Order>& basis) {
    const GramSystem sys = gram_system(t, basis);
    const int m = static_cast<int>(sys.gram.rows());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sys.gram);
    if (eig.info() != Eigen::Success)
        throw NumericalFailure("solve_min_norm: eigendecomposition did not converge");
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    const double lambda_max = std::max(lambda.maxCoeff(), 0.0);
    const double cutoff = 1e-12 * lambda_max;

    MinNormSolution<Order> sol{t, Eigen::VectorXd::Zero(m), 0, 0.0};
    double lambda_min_kept = 0.0;
    Eigen::VectorXd projected = eig.eigenvectors().transpose() * sys.rhs;
    for (int a = 0; a < m; ++a) {
        if (lambda[a] > cutoff && lambda[a] > 0.0) {
            projected[a] /= lambda[a];
            if (sol.gram_rank == 0) lambda_min_kept = lambda[a];
            ++sol.gram_rank;
        } else {
            projected[a] = 0.0;
        }
    }
    sol.gram_cond = sol.gram_rank > 0 ? lambda_max / lambda_min_kept : 0.0;
    sol.coefficients = eig.eigenvectors() * projected;
    for (int a = 0; a < m; ++a) sol.minimizer.add_scaled(sol.coefficients[a], basis.elements[a]);
    return sol;
}

// Side-by-side result of the closed form and the least-squares oracle
// on one tensor.
struct OracleReport {
    int order = 0;
    int dim = 0;
    Eigen::VectorXd coeff_closed;
    Eigen::VectorXd coeff_oracle;
    double proj_residual = 0.0;  // |F_closed - F_oracle| / max(1, |T|)
    int gram_rank = 0;
    double gram_cond = 0.0;
    double norm_closed = 0.0;  // closed-form value of |F|^2
    double norm_oracle = 0.0;  // |F_oracle|^2 computed directly
};

inline OracleReport verify(const Tensor3& t) {
    const AnsatzBasis<3> basis = ansatz_basis(t);
    const MinNormSolution<3> sol = solve_min_norm(t, basis);
    OracleReport rep;
    rep.order = 3;
    rep.dim = t.dim();
    rep.coeff_closed = coefficients3(t.dim()).full_coefficients();
    rep.coeff_oracle = sol.coefficients;
    rep.proj_residual = norm(project(t) - sol.minimizer) / std::max(1.0, norm(t));
    rep.gram_rank = sol.gram_rank;
    rep.gram_cond = sol.gram_cond;
    rep.norm_closed = minimal_norm_squared(t);
    rep.norm_oracle = norm_squared(sol.minimizer);
    return rep;
}

inline OracleReport verify(const Tensor4& t) {
    const AnsatzBasis<4> basis = ansatz_basis(t);
    const MinNormSolution<4> sol = solve_min_norm(t, basis);
    OracleReport rep;
    rep.order = 4;
    rep.dim = t.dim();
    rep.coeff_closed = coefficients4(t.dim()).full_coefficients(traces(t));
    rep.coeff_oracle = sol.coefficients;
    rep.proj_residual = norm(project(t) - sol.minimizer) / std::max(1.0, norm(t));
    rep.gram_rank = sol.gram_rank;
    rep.gram_cond = sol.gram_cond;
    rep.norm_closed = minimal_norm_squared(t);
    rep.norm_oracle = norm_squared(sol.minimizer);
    return rep;
}

}  // namespace tracefree
