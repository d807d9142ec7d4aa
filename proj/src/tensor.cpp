#include "seagull/tensor.hpp"

#include <cmath>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace seagull {

static std::size_t shape_product(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) {
        if (d == 0) throw std::invalid_argument("tensor: zero dimension in shape");
        n *= d;
    }
    return n;
}

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(shape_product(shape_), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != shape_product(shape_))
        throw std::invalid_argument("tensor: data length " + std::to_string(data_.size()) +
                                    " does not match shape " + shape_str());
}

Tensor Tensor::scalar(double v) { return Tensor({1}, {v}); }

Tensor Tensor::zeros_like(const Tensor& other) { return Tensor(other.shape_); }

std::size_t Tensor::rows() const { return rank() >= 2 ? shape_[0] : 1; }

std::size_t Tensor::cols() const {
    if (rank() == 0) return size();
    return rank() >= 2 ? shape_[1] : shape_[0];
}

bool Tensor::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

bool Tensor::operator==(const Tensor& o) const {
    return shape_ == o.shape_ &&
           std::memcmp(data_.data(), o.data_.data(), data_.size() * sizeof(double)) == 0;
}

std::string Tensor::shape_str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < shape_.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(shape_[i]);
    }
    return s + "]";
}

} // namespace seagull
