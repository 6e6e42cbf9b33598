#pragma once

// Seeded generators for test inputs.  All randomness in the library and
// its tools flows through these, with entries uniform on [-1, 1], so a
// (kind, dim, seed) triple always reproduces the same tensor.

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "tracefree/tensor.hpp"

namespace tracefree {

inline double random_entry(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    return dist(rng);
}

template <int Order>
Tensor<Order> random_tensor(int dim, std::mt19937_64& rng) {
    Tensor<Order> t(dim);
    for (double& v : t.values()) v = random_entry(rng);
    return t;
}

inline Tensor3 random_tensor3(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_tensor<3>(dim, rng);
}

inline Tensor4 random_tensor4(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_tensor<4>(dim, rng);
}

inline Eigen::MatrixXd random_symmetric_matrix(int dim, std::mt19937_64& rng) {
    Eigen::MatrixXd m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = random_entry(rng);
    return 0.5 * (m + m.transpose().eval());
}

inline Eigen::VectorXd random_vector(int dim, std::mt19937_64& rng) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = random_entry(rng);
    return v;
}

}  // namespace tracefree
