#pragma once

// Minimal-norm trace-free projection for order-4 tensors.  The ansatz
// has 75 elements (six trace matrices, each in two orientations at six
// placements, plus three delta products); the optimal coefficients are
// dimension-only rationals arranged in a fixed pattern, except r, s, t
// which are linear in the three double traces.  Specialized, cheaper
// forms are provided for tensors with curvature-type pair symmetry and
// for totally symmetric tensors.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "tracefree/ansatz.hpp"
#include "tracefree/tensor.hpp"
#include "tracefree/traces.hpp"

namespace tracefree {

// Optimal coefficients for a given dimension.  trace_placement is in
// ansatz label order: for each matrix m12,m13,m14,m23,m24,m34 the six
// as-stored placements then the six transposed ones.  rst_map sends
// (d1234, d1324, d1423) to the delta-product coefficients (r, s, t).
struct CoefficientTable4 {
    int dim = 0;
    std::array<double, 72> trace_placement{};
    Eigen::Matrix3d rst_map = Eigen::Matrix3d::Zero();

    Eigen::Vector3d rst(const TraceSet4& s) const {
        return rst_map * Eigen::Vector3d(s.d1234, s.d1324, s.d1423);
    }

    // All 75 coefficients in ansatz label order, the last three evaluated
    // on the given traces.
    Eigen::VectorXd full_coefficients(const TraceSet4& s) const {
        Eigen::VectorXd c(75);
        for (int a = 0; a < 72; ++a) c[a] = trace_placement[a];
        c.tail<3>() = rst(s);
        return c;
    }
};

inline CoefficientTable4 coefficients4(int dim) {
    if (dim < Tensor4::min_dim)
        throw DimTooSmall("coefficients4: dimension must be >= 3, got " + std::to_string(dim));
    const double n = dim;
    // The five distinct trace-placement weights.  Which weight sits at
    // which (matrix, orientation, placement) follows the pattern below.
    const double A = -2.0 / (n * (n - 2.0) * (n + 4.0));
    const double B = 4.0 / (n * (n - 2.0) * (n + 2.0) * (n + 4.0));
    const double C = -(n * n * n + 4.0 * n * n - 4.0) / (n * (n - 2.0) * (n + 2.0) * (n + 4.0));
    const double D = (n + 3.0) / ((n - 2.0) * (n + 2.0) * (n + 4.0));
    const double E = -1.0 / ((n - 2.0) * (n + 2.0) * (n + 4.0));

    // Rows: matrices m12,m13,m14,m23,m24,m34; columns: placements 1..6
    // as stored, then 1..6 transposed.
    static constexpr char pattern[6][12] = {
        {'A', 'E', 'D', 'E', 'D', 'C', 'A', 'D', 'E', 'D', 'E', 'B'},
        {'E', 'A', 'D', 'D', 'C', 'D', 'D', 'A', 'E', 'E', 'B', 'E'},
        {'E', 'D', 'A', 'C', 'D', 'E', 'D', 'E', 'A', 'B', 'E', 'D'},
        {'D', 'D', 'C', 'A', 'D', 'D', 'E', 'E', 'B', 'A', 'E', 'E'},
        {'D', 'C', 'D', 'D', 'A', 'E', 'E', 'B', 'E', 'E', 'A', 'D'},
        {'C', 'D', 'D', 'E', 'E', 'A', 'B', 'E', 'E', 'D', 'D', 'A'},
    };

    CoefficientTable4 table;
    table.dim = dim;
    for (int m = 0; m < 6; ++m) {
        for (int col = 0; col < 12; ++col) {
            double w = 0.0;
            switch (pattern[m][col]) {
                case 'A': w = A; break;
                case 'B': w = B; break;
                case 'C': w = C; break;
                case 'D': w = D; break;
                default: w = E; break;
            }
            table.trace_placement[12 * m + col] = w;
        }
    }

    const double diag = (n * n + 3.0 * n + 6.0) / ((n - 2.0) * (n - 1.0) * (n + 2.0) * (n + 4.0));
    const double off = -(3.0 * n + 2.0) / ((n - 1.0) * (n - 2.0) * (n + 2.0) * (n + 4.0));
    table.rst_map.setConstant(off);
    table.rst_map.diagonal().setConstant(diag);
    return table;
}

namespace detail {

// Apply a full 75-coefficient correction: collapse the twelve weighted
// orientations per placement into one matrix per placement, then place.
inline Tensor4 apply_correction4(const Tensor4& t, const CoefficientTable4& table,
                                 const TraceSet4& s) {
    const int n = t.dim();
    const std::array<const Eigen::MatrixXd*, 6> mats = {&s.m12, &s.m13, &s.m14,
                                                        &s.m23, &s.m24, &s.m34};
    Tensor4 out = t;
    for (int p = 0; p < 6; ++p) {
        Eigen::MatrixXd combined = Eigen::MatrixXd::Zero(n, n);
        for (int m = 0; m < 6; ++m) {
            combined += table.trace_placement[12 * m + p] * *mats[m];
            combined += table.trace_placement[12 * m + 6 + p] * mats[m]->transpose();
        }
        add_matrix_delta(out, 1.0, combined, p);
    }
    const Eigen::Vector3d rst = table.rst(s);
    for (int pairing = 0; pairing < 3; ++pairing) add_delta_delta(out, rst[pairing], pairing);
    return out;
}

inline void require_symmetric(const Eigen::MatrixXd& m, const char* what, double scale) {
    const double tol = 1e-10 * std::max(1.0, scale);
    const double dev = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (dev > tol)
        throw SymmetryViolated(std::string(what) + ": trace matrix asymmetry " +
                               std::to_string(dev) + " exceeds tolerance");
}

}  // namespace detail

inline Tensor4 project(const Tensor4& t) {
    const TraceSet4 s = traces(t);
    return detail::apply_correction4(t, coefficients4(t.dim()), s);
}

// Squared norm of the projection, evaluated from the traces of T alone.
inline double minimal_norm_squared(const Tensor4& t) {
    const double n = t.dim();
    if (t.dim() < Tensor4::min_dim)
        throw DimTooSmall("minimal_norm_squared: dimension must be >= 3");
    const TraceSet4 s = traces(t);
    const auto ip = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
        return a.cwiseProduct(b).sum();
    };
    const Eigen::MatrixXd& m12 = s.m12;
    const Eigen::MatrixXd& m13 = s.m13;
    const Eigen::MatrixXd& m14 = s.m14;
    const Eigen::MatrixXd& m23 = s.m23;
    const Eigen::MatrixXd& m24 = s.m24;
    const Eigen::MatrixXd& m34 = s.m34;

    const double g2 = 2.0 * (n + 3.0) / ((n - 2.0) * (n + 2.0) * (n + 4.0));
    const double s2 = ip(m12, m24.transpose()) + ip(m12, m14.transpose()) + ip(m12, m23) +
                      ip(m12, m13) + ip(m13, m23) + ip(m13, m14) + ip(m13, m34.transpose()) +
                      ip(m14, m24) + ip(m14, m34.transpose()) + ip(m23, m24) + ip(m23, m34) +
                      ip(m24, m34);
    const double g3 = -2.0 / ((n - 2.0) * (n + 2.0) * (n + 4.0));
    const double s3 = ip(m12, m24) + ip(m12, m14) + ip(m12, m23.transpose()) +
                      ip(m12, m13.transpose()) + ip(m13, m23.transpose()) +
                      ip(m13, m14.transpose()) + ip(m13, m34) + ip(m14, m24.transpose()) +
                      ip(m14, m34) + ip(m23, m24.transpose()) + ip(m23, m34.transpose()) +
                      ip(m24, m34.transpose());
    const double g4 = -4.0 / ((n - 2.0) * n * (n + 4.0));
    const double s4 = ip(m12, m34) + ip(m12, m34.transpose()) + ip(m13, m24) +
                      ip(m13, m24.transpose()) + ip(m14, m23) + ip(m14, m23.transpose());
    const double g5 = 4.0 / (n * (n - 2.0) * (n + 2.0) * (n + 4.0));
    const double s5 = ip(m12, m12.transpose()) + ip(m13, m13.transpose()) +
                      ip(m14, m14.transpose()) + ip(m23, m23.transpose()) +
                      ip(m24, m24.transpose()) + ip(m34, m34.transpose());
    const double g6 = -(n * n * n + 4.0 * n * n - 4.0) / ((n - 2.0) * n * (n + 2.0) * (n + 4.0));
    const double s6 =
        ip(m12, m12) + ip(m13, m13) + ip(m14, m14) + ip(m23, m23) + ip(m24, m24) + ip(m34, m34);
    const double g7 =
        (n * n + 3.0 * n + 6.0) / ((n - 2.0) * (n - 1.0) * (n + 2.0) * (n + 4.0));
    const double s7 = s.d1234 * s.d1234 + s.d1324 * s.d1324 + s.d1423 * s.d1423;
    const double g8 = -2.0 * (3.0 * n + 2.0) / ((n - 2.0) * (n - 1.0) * (n + 2.0) * (n + 4.0));
    const double s8 = s.d1324 * s.d1234 + s.d1324 * s.d1423 + s.d1234 * s.d1423;

    return norm_squared(t) + g2 * s2 + g3 * s3 + g4 * s4 + g5 * s5 + g6 * s6 + g7 * s7 + g8 * s8;
}

// Projection specialized to tensors whose six trace matrices are all
// symmetric (tensors with pairwise index symmetries, but also curvature
// tensors, whose traces are +/-Ricci): matrix and transposed placements
// coincide, so the 75 coefficients collapse to three weights per
// matrix.  The trace symmetry is checked, not assumed.
inline Tensor4 project_pairwise_symmetric(const Tensor4& t) {
    const double n = t.dim();
    const CoefficientTable4 table = coefficients4(t.dim());
    const TraceSet4 s = traces(t);
    const std::array<const Eigen::MatrixXd*, 6> mats = {&s.m12, &s.m13, &s.m14,
                                                        &s.m23, &s.m24, &s.m34};
    const double scale = max_abs(t);
    for (const Eigen::MatrixXd* m : mats)
        detail::require_symmetric(*m, "project_pairwise_symmetric", scale * n);

    // Weight of each matrix at its own placement, at the complementary
    // placement, and at the remaining four.
    const double c1 = -4.0 / (n * (n - 2.0) * (n + 4.0));
    const double c2 = -(n * n + 2.0 * n - 4.0) / (n * (n - 2.0) * (n + 4.0));
    const double c3 = 1.0 / ((n + 4.0) * (n - 2.0));

    Tensor4 out = t;
    for (int p = 0; p < 6; ++p) {
        Eigen::MatrixXd combined = Eigen::MatrixXd::Zero(t.dim(), t.dim());
        for (int m = 0; m < 6; ++m) {
            const double w = m == p ? c1 : (m == 5 - p ? c2 : c3);
            combined += w * *mats[m];
        }
        add_matrix_delta(out, 1.0, combined, p);
    }
    const Eigen::Vector3d rst = table.rst(s);
    for (int pairing = 0; pairing < 3; ++pairing) add_delta_delta(out, rst[pairing], pairing);
    return out;
}

// Projection specialized to totally symmetric tensors: a single trace
// matrix spread evenly over all placements plus an isotropic term.  The
// symmetry is checked, not assumed.
inline Tensor4 project_totally_symmetric(const Tensor4& t) {
    const double n = t.dim();
    const int dim = t.dim();
    const double tol = 1e-10 * std::max(1.0, max_abs(t));
    // Adjacent transpositions generate the full permutation group.
    static constexpr std::array<std::array<int, 4>, 3> generators = {
        {{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}}};
    for (const auto& g : generators) {
        const Tensor4 swapped = permuted(t, g);
        double dev = 0.0;
        for (std::size_t a = 0; a < t.size(); ++a)
            dev = std::max(dev, std::abs(t.values()[a] - swapped.values()[a]));
        if (dev > tol)
            throw SymmetryViolated("project_totally_symmetric: asymmetry " + std::to_string(dev) +
                                   " exceeds tolerance");
    }

    // One single trace and one double trace determine the correction.
    Eigen::MatrixXd tm = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int l = 0; l < dim; ++l) tm(i, j) += t(i, j, l, l);
    const double tscal = tm.trace();

    Tensor4 out = t;
    for (int p = 0; p < 6; ++p) add_matrix_delta(out, -1.0 / (n + 4.0), tm, p);
    const double iso = tscal / ((n + 4.0) * (n + 2.0));
    for (int pairing = 0; pairing < 3; ++pairing) add_delta_delta(out, iso, pairing);
    return out;
}

// Squared norm of the projection of a totally symmetric tensor, from
// its single and double trace alone.
inline double totally_symmetric_minimal_norm_squared(const Tensor4& t) {
    const double n = t.dim();
    const int dim = t.dim();
    Eigen::MatrixXd tm = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int l = 0; l < dim; ++l) tm(i, j) += t(i, j, l, l);
    const double tscal = tm.trace();
    return norm_squared(t) - 6.0 / (n + 4.0) * tm.cwiseProduct(tm).sum() +
           3.0 * tscal * tscal / ((n + 4.0) * (n + 2.0));
}

}  // namespace tracefree
