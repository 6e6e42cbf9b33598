#pragma once

// Minimal-norm trace-free projection for order-3 tensors: the unique
// nearest tensor to T, among T plus trace-times-delta corrections, whose
// three single traces all vanish.  The correction coefficients have a
// closed form in the dimension alone.

#include <Eigen/Dense>

#include "tracefree/ansatz.hpp"
#include "tracefree/tensor.hpp"
#include "tracefree/traces.hpp"

namespace tracefree {

// Coefficients of the nine ansatz elements.  Each trace couples to its
// own slot (x1, y2, z3) with one weight and to the other slots with
// another; both depend only on the dimension.
struct CoefficientTable3 {
    int dim = 0;
    double diag = 0.0;  // weight of tK placed at slot K-1
    double off = 0.0;   // weight of tK placed elsewhere

    // All nine coefficients in ansatz label order x1..x3, y1..y3, z1..z3.
    Eigen::VectorXd full_coefficients() const {
        Eigen::VectorXd c(9);
        for (int v = 0; v < 3; ++v)
            for (int slot = 0; slot < 3; ++slot) c[3 * v + slot] = v == slot ? diag : off;
        return c;
    }
};

inline CoefficientTable3 coefficients3(int dim) {
    if (dim < Tensor3::min_dim)
        throw DimTooSmall("coefficients3: dimension must be >= 2, got " + std::to_string(dim));
    const double n = dim;
    const double den = (n - 1.0) * (n + 2.0);
    return CoefficientTable3{dim, -(n + 1.0) / den, 1.0 / den};
}

inline Tensor3 project(const Tensor3& t) {
    const int n = t.dim();
    const CoefficientTable3 c = coefficients3(n);
    const TraceSet3 s = traces(t);
    // Per-slot correction vectors: slot K receives diag * t_{K+1} plus
    // off times the other two traces.
    const Eigen::VectorXd a0 = c.diag * s.t1 + c.off * (s.t2 + s.t3);
    const Eigen::VectorXd a1 = c.diag * s.t2 + c.off * (s.t1 + s.t3);
    const Eigen::VectorXd a2 = c.diag * s.t3 + c.off * (s.t1 + s.t2);
    Tensor3 out = t;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out(i, j, j) += a0[i];
            out(j, i, j) += a1[i];
            out(j, j, i) += a2[i];
        }
    }
    return out;
}

// Squared norm of the projection, evaluated from the traces of T alone
// (never by materializing the projection).
inline double minimal_norm_squared(const Tensor3& t) {
    const int n = t.dim();
    if (n < Tensor3::min_dim)
        throw DimTooSmall("minimal_norm_squared: dimension must be >= 2");
    const TraceSet3 s = traces(t);
    const double sq = s.t1.squaredNorm() + s.t2.squaredNorm() + s.t3.squaredNorm();
    const double cross = s.t1.dot(s.t2) + s.t1.dot(s.t3) + s.t2.dot(s.t3);
    const double den = (n - 1.0) * (n + 2.0);
    return norm_squared(t) - ((n + 1.0) * sq - 2.0 * cross) / den;
}

}  // namespace tracefree
