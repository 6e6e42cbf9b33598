#pragma once

// Differential-geometry consequences of the projections: algebraic
// curvature tensors built from Kulkarni-Nomizu products, the Weyl
// tensor as the order-4 projection of curvature, and the Cotton tensor
// as the order-3 projection of a Schouten-type derivative tensor.

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "tracefree/projection3.hpp"
#include "tracefree/random.hpp"
#include "tracefree/tensor.hpp"

namespace tracefree {

// Order-4 tensor with the symmetries of a Riemann curvature tensor:
// antisymmetric in (1,2) and (3,4), symmetric under pair exchange, and
// satisfying the first Bianchi identity.
struct AlgebraicCurvature {
    Tensor4 tensor;
    int dim() const { return tensor.dim(); }
};

// Kulkarni-Nomizu product of two symmetric matrices:
// (h ? k)_{ijkl} = h_ik k_jl + h_jl k_ik - h_il k_jk - h_jk k_il.
// Any such product (and any sum of them) is an algebraic curvature
// tensor, which is how the invariants above are guaranteed here.
inline AlgebraicCurvature kulkarni_nomizu(const Eigen::MatrixXd& h, const Eigen::MatrixXd& k) {
    if (h.rows() != h.cols() || k.rows() != k.cols() || h.rows() != k.rows())
        throw ShapeMismatch("kulkarni_nomizu: inputs must be square matrices of equal size");
    const int n = static_cast<int>(h.rows());
    Tensor4 out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    out(i, j, a, b) =
                        h(i, a) * k(j, b) + h(j, b) * k(i, a) - h(i, b) * k(j, a) - h(j, a) * k(i, b);
    return AlgebraicCurvature{std::move(out)};
}

// Sum of three Kulkarni-Nomizu products of random symmetric matrices:
// a generic algebraic curvature tensor, generated reproducibly.
inline AlgebraicCurvature random_algebraic_curvature(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Tensor4 sum(dim);
    for (int term = 0; term < 3; ++term) {
        const Eigen::MatrixXd h = random_symmetric_matrix(dim, rng);
        const Eigen::MatrixXd k = random_symmetric_matrix(dim, rng);
        sum += kulkarni_nomizu(h, k).tensor;
    }
    return AlgebraicCurvature{std::move(sum)};
}

// Ricci contraction ric(i,j) = sum_k R(k,i,k,j); symmetric for
// curvature tensors.
inline Eigen::MatrixXd ricci(const AlgebraicCurvature& curv) {
    const int n = curv.dim();
    Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) ric(i, j) += curv.tensor(k, i, k, j);
    return ric;
}

inline double scalar_curvature(const AlgebraicCurvature& curv) {
    return ricci(curv).trace();
}

// Weyl tensor: curvature minus its Ricci and scalar parts.  Identically
// zero in dimension 3.
inline Tensor4 weyl(const AlgebraicCurvature& curv) {
    const int n = curv.dim();
    const Eigen::MatrixXd ric = ricci(curv);
    const double scal = scalar_curvature(curv);
    const double a = 1.0 / (n - 1.0);
    const double b = 1.0 / (n - 2.0);
    Tensor4 w = curv.tensor;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    double corr = 0.0;
                    if (i == k) corr += ric(j, l);
                    if (i == l) corr -= ric(j, k);
                    if (j == k) corr -= ric(i, l);
                    if (j == l) corr += ric(i, k);
                    w(i, j, k, l) -= b * corr;
                    if (i == k && j == l) w(i, j, k, l) += a * b * scal;
                    if (i == l && j == k) w(i, j, k, l) -= a * b * scal;
                }
            }
        }
    }
    return w;
}

// Input to the Cotton tensor: an order-3 tensor t antisymmetric in its
// last two slots whose traces are t1 = 0, t2 = r/2, t3 = -r/2 for a
// single vector r, as holds for t(i,j,k) = D_k s(i,j) - D_j s(i,k) with
// s a Schouten-type tensor.
struct CottonInput {
    Tensor3 t;
    Eigen::VectorXd r;
};

// Build a reproducible Cotton input from a random symmetric-in-(1,2)
// derivative tensor d0, corrected by a trace shift so that the combined
// antisymmetrization has the required trace structure.
inline CottonInput random_cotton_input(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Tensor3 d = random_tensor<3>(dim, rng);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                if (i < j) {
                    const double avg = 0.5 * (d(i, j, k) + d(j, i, k));
                    d(i, j, k) = avg;
                    d(j, i, k) = avg;
                }
            }
    // Shift d by v_i delta_jk + v_j delta_ik with v chosen so the
    // antisymmetrized tensor below has vanishing first trace.
    Eigen::VectorXd p = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd q = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            p[i] += d(i, j, j);
            q[i] += d(j, j, i);
        }
    const Eigen::VectorXd v = (0.5 * q - p) / static_cast<double>(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            d(i, j, j) += v[i];
            d(j, i, j) += v[i];
        }

    CottonInput input{Tensor3(dim), Eigen::VectorXd::Zero(dim)};
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) input.t(i, j, k) = d(i, k, j) - d(i, j, k);
    for (int k = 0; k < dim; ++k)
        for (int j = 0; j < dim; ++j) input.r[k] += d(j, j, k);
    return input;
}

// Cotton tensor: the trace correction of t by its residual trace vector,
// C(i,j,k) = t(i,j,k) - (r_j delta_ik - r_k delta_ij) / (2 (n - 1)).
// Coincides with the minimal-norm projection of t.
inline Tensor3 cotton(const CottonInput& input) {
    const int n = input.t.dim();
    if (static_cast<int>(input.r.size()) != n)
        throw ShapeMismatch("cotton: trace vector length must equal tensor dimension");
    const double c = 1.0 / (2.0 * (n - 1.0));
    Tensor3 out = input.t;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out(j, i, j) -= c * input.r[i];
            out(j, j, i) += c * input.r[i];
        }
    return out;
}

}  // namespace tracefree
