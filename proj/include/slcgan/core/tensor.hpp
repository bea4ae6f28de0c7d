#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace slcgan {

// Dense row-major tensor. Shape conventions used throughout:
//   signals      (N, C, L)
//   feature rows (N, F)
template <typename T>
struct Tensor {
    std::vector<std::int64_t> shape;
    std::vector<T> data;

    Tensor() = default;

    explicit Tensor(std::vector<std::int64_t> s) : shape(std::move(s)) {
        data.assign(static_cast<std::size_t>(numel_of(shape)), T(0));
    }

    Tensor(std::initializer_list<std::int64_t> s)
        : Tensor(std::vector<std::int64_t>(s)) {}

    static std::int64_t numel_of(const std::vector<std::int64_t>& s) {
        std::int64_t n = 1;
        for (auto d : s) {
            if (d < 0) throw std::invalid_argument("Tensor: negative dimension");
            n *= d;
        }
        return n;
    }

    std::int64_t numel() const { return static_cast<std::int64_t>(data.size()); }
    std::int64_t dim(std::size_t i) const { return shape.at(i); }
    int rank() const { return static_cast<int>(shape.size()); }

    T* ptr() { return data.data(); }
    const T* ptr() const { return data.data(); }

    T& operator()(std::int64_t i) { return data[static_cast<std::size_t>(i)]; }
    const T& operator()(std::int64_t i) const { return data[static_cast<std::size_t>(i)]; }

    T& operator()(std::int64_t i, std::int64_t j) {
        return data[static_cast<std::size_t>(i * shape[1] + j)];
    }
    const T& operator()(std::int64_t i, std::int64_t j) const {
        return data[static_cast<std::size_t>(i * shape[1] + j)];
    }

    T& operator()(std::int64_t n, std::int64_t c, std::int64_t l) {
        return data[static_cast<std::size_t>((n * shape[1] + c) * shape[2] + l)];
    }
    const T& operator()(std::int64_t n, std::int64_t c, std::int64_t l) const {
        return data[static_cast<std::size_t>((n * shape[1] + c) * shape[2] + l)];
    }

    // Reinterpret without moving data; element count must match.
    Tensor<T> reshaped(std::vector<std::int64_t> s) const {
        if (numel_of(s) != numel()) throw std::invalid_argument("reshape: numel mismatch");
        Tensor<T> out;
        out.shape = std::move(s);
        out.data = data;
        return out;
    }

    void fill(T v) { std::fill(data.begin(), data.end(), v); }

    bool same_shape(const Tensor<T>& o) const { return shape == o.shape; }
};

}  // namespace slcgan
