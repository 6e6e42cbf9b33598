#pragma once

// Dense covariant tensors of order 3 and 4 over R^n, stored as flat
// row-major arrays.  These are the value types the rest of the library
// operates on; all algorithms address components through operator().

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace tracefree {

// Thrown when a flat data buffer does not hold dim^order entries.
struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when the dimension is too small for the requested operation
// (the closed-form denominators vanish below order-1).
struct DimTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when two tensors that must share a shape do not.
struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown by the specialized projections when the claimed index symmetry
// does not actually hold.
struct SymmetryViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a numerical routine (eigendecomposition) fails to converge.
struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <int Order>
class Tensor {
    static_assert(Order == 3 || Order == 4, "only orders 3 and 4 are supported");

public:
    static constexpr int order = Order;
    // Smallest dimension for which the minimal-norm coefficients are
    // defined (their denominators contain a factor n - (order - 2) - 1).
    static constexpr int min_dim = Order - 1;

    explicit Tensor(int dim) : dim_(checked_dim(dim)), data_(element_count(dim_), 0.0) {}

    Tensor(int dim, std::vector<double> data) : dim_(checked_dim(dim)), data_(std::move(data)) {
        if (data_.size() != element_count(dim_)) {
            throw LengthMismatch("tensor of order " + std::to_string(Order) + " and dimension " +
                                 std::to_string(dim_) + " needs " +
                                 std::to_string(element_count(dim_)) + " entries, got " +
                                 std::to_string(data_.size()));
        }
    }

    int dim() const { return dim_; }
    std::size_t size() const { return data_.size(); }

    const std::vector<double>& values() const { return data_; }
    std::vector<double>& values() { return data_; }

    double operator()(int i, int j, int k) const
        requires(Order == 3)
    {
        return data_[flat(i, j, k)];
    }
    double& operator()(int i, int j, int k)
        requires(Order == 3)
    {
        return data_[flat(i, j, k)];
    }
    double operator()(int i, int j, int k, int l) const
        requires(Order == 4)
    {
        return data_[flat(i, j, k, l)];
    }
    double& operator()(int i, int j, int k, int l)
        requires(Order == 4)
    {
        return data_[flat(i, j, k, l)];
    }

    Tensor& operator+=(const Tensor& rhs) {
        require_same_shape(rhs);
        for (std::size_t a = 0; a < data_.size(); ++a) data_[a] += rhs.data_[a];
        return *this;
    }
    Tensor& operator-=(const Tensor& rhs) {
        require_same_shape(rhs);
        for (std::size_t a = 0; a < data_.size(); ++a) data_[a] -= rhs.data_[a];
        return *this;
    }
    Tensor& operator*=(double s) {
        for (double& v : data_) v *= s;
        return *this;
    }

    // *this += s * rhs, without a temporary.
    Tensor& add_scaled(double s, const Tensor& rhs) {
        require_same_shape(rhs);
        for (std::size_t a = 0; a < data_.size(); ++a) data_[a] += s * rhs.data_[a];
        return *this;
    }

    friend Tensor operator+(Tensor lhs, const Tensor& rhs) { return lhs += rhs; }
    friend Tensor operator-(Tensor lhs, const Tensor& rhs) { return lhs -= rhs; }
    friend Tensor operator*(double s, Tensor t) { return t *= s; }
    friend Tensor operator*(Tensor t, double s) { return t *= s; }

private:
    static int checked_dim(int dim) {
        if (dim < min_dim) {
            throw DimTooSmall("order-" + std::to_string(Order) + " tensors need dimension >= " +
                              std::to_string(min_dim) + ", got " + std::to_string(dim));
        }
        return dim;
    }

    static std::size_t element_count(int dim) {
        std::size_t n = static_cast<std::size_t>(dim);
        std::size_t count = n * n * n;
        if constexpr (Order == 4) count *= n;
        return count;
    }

    std::size_t flat(int i, int j, int k) const
        requires(Order == 3)
    {
        std::size_t n = static_cast<std::size_t>(dim_);
        return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
               static_cast<std::size_t>(k);
    }
    std::size_t flat(int i, int j, int k, int l) const
        requires(Order == 4)
    {
        std::size_t n = static_cast<std::size_t>(dim_);
        return ((static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
                static_cast<std::size_t>(k)) *
                   n +
               static_cast<std::size_t>(l);
    }

    void require_same_shape(const Tensor& rhs) const {
        if (dim_ != rhs.dim_) {
            throw ShapeMismatch("tensor dimensions differ: " + std::to_string(dim_) + " vs " +
                                std::to_string(rhs.dim_));
        }
    }

    int dim_;
    std::vector<double> data_;
};

using Tensor3 = Tensor<3>;
using Tensor4 = Tensor<4>;

// Kronecker delta as a dense identity matrix.
inline Eigen::MatrixXd kronecker(int dim) {
    return Eigen::MatrixXd::Identity(dim, dim);
}

// Frobenius inner product; components are accumulated in a fixed
// sequential order so results are bit-reproducible across runs.
template <int Order>
double inner(const Tensor<Order>& a, const Tensor<Order>& b) {
    if (a.dim() != b.dim()) {
        throw ShapeMismatch("inner product needs equal dimensions: " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
    }
    double sum = 0.0;
    const std::vector<double>& av = a.values();
    const std::vector<double>& bv = b.values();
    for (std::size_t idx = 0; idx < av.size(); ++idx) sum += av[idx] * bv[idx];
    return sum;
}

template <int Order>
double norm_squared(const Tensor<Order>& t) {
    return inner(t, t);
}

template <int Order>
double norm(const Tensor<Order>& t) {
    return std::sqrt(norm_squared(t));
}

template <int Order>
double max_abs(const Tensor<Order>& t) {
    double m = 0.0;
    for (double v : t.values()) m = std::max(m, std::abs(v));
    return m;
}

// Slot permutation: out(i_0, ..) = t(i_{p[0]}, ..).  p must be a
// permutation of {0, .., Order-1}.
inline Tensor3 permuted(const Tensor3& t, const std::array<int, 3>& p) {
    const int n = t.dim();
    Tensor3 out(n);
    std::array<int, 3> idx{};
    for (idx[0] = 0; idx[0] < n; ++idx[0])
        for (idx[1] = 0; idx[1] < n; ++idx[1])
            for (idx[2] = 0; idx[2] < n; ++idx[2])
                out(idx[0], idx[1], idx[2]) = t(idx[p[0]], idx[p[1]], idx[p[2]]);
    return out;
}

inline Tensor4 permuted(const Tensor4& t, const std::array<int, 4>& p) {
    const int n = t.dim();
    Tensor4 out(n);
    std::array<int, 4> idx{};
    for (idx[0] = 0; idx[0] < n; ++idx[0])
        for (idx[1] = 0; idx[1] < n; ++idx[1])
            for (idx[2] = 0; idx[2] < n; ++idx[2])
                for (idx[3] = 0; idx[3] < n; ++idx[3])
                    out(idx[0], idx[1], idx[2], idx[3]) = t(idx[p[0]], idx[p[1]], idx[p[2]], idx[p[3]]);
    return out;
}

}  // namespace tracefree
