#pragma once

// The correction ansatz: every way of tensoring a trace of T with
// Kronecker deltas so that the result has the same order as T.  The
// minimal-norm projection is T plus a linear combination of these
// elements; this header enumerates them in a fixed documented order.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tracefree/tensor.hpp"
#include "tracefree/traces.hpp"

namespace tracefree {

// The six unordered slot pairs of an order-4 tensor, and for each the
// complementary pair that receives the delta.  Placement p puts the
// matrix indices on kFreePairs[p] and the delta on kDeltaPairs[p].
inline constexpr std::array<std::pair<int, int>, 6> kFreePairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
inline constexpr std::array<std::pair<int, int>, 6> kDeltaPairs = {
    {{2, 3}, {1, 3}, {1, 2}, {0, 3}, {0, 2}, {0, 1}}};

// acc += scale * (v placed on `slot`, delta on the other two slots):
// slot 0 adds v_i delta_jk, slot 1 v_j delta_ik, slot 2 v_k delta_ij.
inline void add_vector_delta(Tensor3& acc, double scale, const Eigen::VectorXd& v, int slot) {
    if (static_cast<int>(v.size()) != acc.dim())
        throw ShapeMismatch("add_vector_delta: vector length must equal tensor dimension");
    if (slot < 0 || slot >= 3)
        throw std::invalid_argument("add_vector_delta: slot must be 0, 1 or 2");
    const int n = acc.dim();
    for (int i = 0; i < n; ++i) {
        const double s = scale * v[i];
        for (int j = 0; j < n; ++j) {
            switch (slot) {
                case 0: acc(i, j, j) += s; break;
                case 1: acc(j, i, j) += s; break;
                default: acc(j, j, i) += s; break;
            }
        }
    }
}

// acc += scale * (M on the free slots of `placement` in row, column
// order, delta on the complementary pair).  Pass M transposed for the
// reversed index order.
inline void add_matrix_delta(Tensor4& acc, double scale, const Eigen::MatrixXd& m, int placement) {
    if (m.rows() != m.cols()) throw ShapeMismatch("add_matrix_delta: matrix must be square");
    if (static_cast<int>(m.rows()) != acc.dim())
        throw ShapeMismatch("add_matrix_delta: matrix size must equal tensor dimension");
    if (placement < 0 || placement >= 6)
        throw std::invalid_argument("add_matrix_delta: placement must be in 0..5");
    const int n = acc.dim();
    const auto [a, b] = kFreePairs[placement];
    const auto [c, d] = kDeltaPairs[placement];
    std::array<int, 4> idx{};
    for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            const double val = scale * m(r, s);
            for (int k = 0; k < n; ++k) {
                idx[a] = r;
                idx[b] = s;
                idx[c] = k;
                idx[d] = k;
                acc(idx[0], idx[1], idx[2], idx[3]) += val;
            }
        }
    }
}

// acc += scale * (product of two deltas over disjoint slot pairs).
// pairing 0 pairs (ij)(kl), pairing 1 (ik)(jl), pairing 2 (il)(jk).
inline void add_delta_delta(Tensor4& acc, double scale, int pairing) {
    if (pairing < 0 || pairing >= 3)
        throw std::invalid_argument("add_delta_delta: pairing must be 0, 1 or 2");
    const int n = acc.dim();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            switch (pairing) {
                case 0: acc(a, a, b, b) += scale; break;
                case 1: acc(a, b, a, b) += scale; break;
                default: acc(a, b, b, a) += scale; break;
            }
        }
    }
}

inline Tensor3 vector_delta(const Eigen::VectorXd& v, int slot) {
    Tensor3 out(static_cast<int>(v.size()));
    add_vector_delta(out, 1.0, v, slot);
    return out;
}

inline Tensor4 matrix_delta(const Eigen::MatrixXd& m, int placement) {
    if (m.rows() != m.cols()) throw ShapeMismatch("matrix_delta: matrix must be square");
    Tensor4 out(static_cast<int>(m.rows()));
    add_matrix_delta(out, 1.0, m, placement);
    return out;
}

inline Tensor4 delta_delta(int dim, int pairing) {
    Tensor4 out(dim);
    add_delta_delta(out, 1.0, pairing);
    return out;
}

// The full ansatz family for one tensor, with human-readable labels.
// Order 3: the three traces at the three slots, 9 elements labeled
//   x1 x2 x3 (trace t1 at slots 0,1,2), y1..y3 (t2), z1..z3 (t3).
// Order 4: for each trace matrix m12,m13,m14,m23,m24,m34 the six
//   placements with the matrix as stored ("x_1".."x_6" for m12) then the
//   six with it transposed ("x^1".."x^6"), letters x y z u v w for the
//   six matrices; finally the three delta-delta elements r s t.
template <int Order>
struct AnsatzBasis {
    int dim = 0;
    std::vector<Tensor<Order>> elements;
    std::vector<std::string> labels;
};

inline std::vector<std::string> ansatz_labels3() {
    std::vector<std::string> labels;
    for (char letter : {'x', 'y', 'z'})
        for (int slot = 1; slot <= 3; ++slot)
            labels.push_back(std::string(1, letter) + std::to_string(slot));
    return labels;
}

inline std::vector<std::string> ansatz_labels4() {
    std::vector<std::string> labels;
    for (char letter : {'x', 'y', 'z', 'u', 'v', 'w'})
        for (char orient : {'_', '^'})
            for (int p = 1; p <= 6; ++p)
                labels.push_back(std::string(1, letter) + orient + std::to_string(p));
    labels.insert(labels.end(), {"r", "s", "t"});
    return labels;
}

inline AnsatzBasis<3> ansatz_basis(const Tensor3& t) {
    const TraceSet3 s = traces(t);
    AnsatzBasis<3> basis;
    basis.dim = t.dim();
    basis.labels = ansatz_labels3();
    for (const Eigen::VectorXd* v : {&s.t1, &s.t2, &s.t3})
        for (int slot = 0; slot < 3; ++slot) basis.elements.push_back(vector_delta(*v, slot));
    return basis;
}

inline AnsatzBasis<4> ansatz_basis(const Tensor4& t) {
    const TraceSet4 s = traces(t);
    AnsatzBasis<4> basis;
    basis.dim = t.dim();
    basis.labels = ansatz_labels4();
    for (const Eigen::MatrixXd* m : {&s.m12, &s.m13, &s.m14, &s.m23, &s.m24, &s.m34}) {
        for (int p = 0; p < 6; ++p) basis.elements.push_back(matrix_delta(*m, p));
        const Eigen::MatrixXd transposed = m->transpose();
        for (int p = 0; p < 6; ++p) basis.elements.push_back(matrix_delta(transposed, p));
    }
    // The delta-delta elements enter unscaled: r, s, t are coefficients
    // of the bare products, not multiples of the double traces.
    for (int pairing = 0; pairing < 3; ++pairing)
        basis.elements.push_back(delta_delta(t.dim(), pairing));
    return basis;
}

}  // namespace tracefree
