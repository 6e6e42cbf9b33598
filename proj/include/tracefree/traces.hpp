#pragma once

// Trace maps: every contraction of one index pair (and, for order 4,
// of two disjoint pairs) against the metric delta.  These are the only
// tensor functionals the minimal-norm formulas consume.

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "tracefree/tensor.hpp"

namespace tracefree {

// Single traces of an order-3 tensor; tK[i] contracts the two slots
// other than K.
struct TraceSet3 {
    Eigen::VectorXd t1;  // t1[i] = sum_l T(i,l,l)
    Eigen::VectorXd t2;  // t2[i] = sum_l T(l,i,l)
    Eigen::VectorXd t3;  // t3[i] = sum_l T(l,l,i)
};

inline TraceSet3 traces(const Tensor3& t) {
    const int n = t.dim();
    TraceSet3 s{Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)};
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l < n; ++l) {
            s.t1[i] += t(i, l, l);
            s.t2[i] += t(l, i, l);
            s.t3[i] += t(l, l, i);
        }
    }
    return s;
}

// Traces of an order-4 tensor.  mAB contracts slots A and B (1-based),
// leaving the other two slots as matrix indices in their original order;
// the three d-values contract two disjoint pairs.
struct TraceSet4 {
    Eigen::MatrixXd m12;  // m12(i,j) = sum_k T(k,k,i,j)
    Eigen::MatrixXd m13;  // m13(i,j) = sum_k T(k,i,k,j)
    Eigen::MatrixXd m14;  // m14(i,j) = sum_k T(k,i,j,k)
    Eigen::MatrixXd m23;  // m23(i,j) = sum_k T(i,k,k,j)
    Eigen::MatrixXd m24;  // m24(i,j) = sum_k T(i,k,j,k)
    Eigen::MatrixXd m34;  // m34(i,j) = sum_k T(i,j,k,k)
    double d1234 = 0.0;   // sum_{l,k} T(l,l,k,k)
    double d1324 = 0.0;   // sum_{l,k} T(l,k,l,k)
    double d1423 = 0.0;   // sum_{l,k} T(l,k,k,l)
};

inline TraceSet4 traces(const Tensor4& t) {
    const int n = t.dim();
    TraceSet4 s;
    s.m12 = Eigen::MatrixXd::Zero(n, n);
    s.m13 = Eigen::MatrixXd::Zero(n, n);
    s.m14 = Eigen::MatrixXd::Zero(n, n);
    s.m23 = Eigen::MatrixXd::Zero(n, n);
    s.m24 = Eigen::MatrixXd::Zero(n, n);
    s.m34 = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                s.m12(i, j) += t(k, k, i, j);
                s.m13(i, j) += t(k, i, k, j);
                s.m14(i, j) += t(k, i, j, k);
                s.m23(i, j) += t(i, k, k, j);
                s.m24(i, j) += t(i, k, j, k);
                s.m34(i, j) += t(i, j, k, k);
            }
        }
    }
    // Double traces are contracted directly from the tensor rather than
    // from the matrices above, so the trace(mAB) identities stay testable.
    for (int l = 0; l < n; ++l) {
        for (int k = 0; k < n; ++k) {
            s.d1234 += t(l, l, k, k);
            s.d1324 += t(l, k, l, k);
            s.d1423 += t(l, k, k, l);
        }
    }
    return s;
}

// Largest absolute entry across every trace of t; zero exactly when t
// is trace-free.
inline double max_trace_residual(const Tensor3& t) {
    const TraceSet3 s = traces(t);
    double m = 0.0;
    for (const Eigen::VectorXd* v : {&s.t1, &s.t2, &s.t3})
        m = std::max(m, v->cwiseAbs().maxCoeff());
    return m;
}

inline double max_trace_residual(const Tensor4& t) {
    const TraceSet4 s = traces(t);
    double m = 0.0;
    for (const Eigen::MatrixXd* mat : {&s.m12, &s.m13, &s.m14, &s.m23, &s.m24, &s.m34})
        m = std::max(m, mat->cwiseAbs().maxCoeff());
    for (double d : {s.d1234, s.d1324, s.d1423}) m = std::max(m, std::abs(d));
    return m;
}

}  // namespace tracefree
