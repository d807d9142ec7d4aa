#ifndef SEAGULL_TENSOR_HPP
#define SEAGULL_TENSOR_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace seagull {

// Dense row-major tensor of 64-bit floats; the universal numeric carrier.
// Treated as an immutable value once handed to a Tape or a Network.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape); // zero-filled
    Tensor(std::vector<std::size_t> shape, std::vector<double> data);

    static Tensor scalar(double v);
    static Tensor zeros_like(const Tensor& other);

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    // rank-2 accessors; rank-1 tensors count as a single row
    std::size_t rows() const;
    std::size_t cols() const;

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }
    double& at(std::size_t i, std::size_t j) { return data_[i * cols() + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * cols() + j]; }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }
    bool all_finite() const;

    // bitwise comparison (memcmp of the payload, exact shape match)
    bool operator==(const Tensor& o) const;
    bool operator!=(const Tensor& o) const { return !(*this == o); }

    std::string shape_str() const; // "[100x9]", for error messages

private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

} // namespace seagull

#endif
