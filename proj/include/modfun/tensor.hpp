#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace modfun {

/// Dense rank-3 array indexed (i, j, k), k fastest.
template <typename T>
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d1, std::size_t d2, std::size_t d3, T fill = T{})
        : dims_{d1, d2, d3}, data_(d1 * d2 * d3, fill)
    {
    }

    [[nodiscard]] const std::array<std::size_t, 3>& dims() const { return dims_; }
    [[nodiscard]] std::size_t size() const { return data_.size(); }

    T& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[offset(i, j, k)]; }
    const T& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[offset(i, j, k)]; }

    /// Bounds-checked access.
    T& at(std::size_t i, std::size_t j, std::size_t k)
    {
        check(i, j, k);
        return data_[offset(i, j, k)];
    }
    const T& at(std::size_t i, std::size_t j, std::size_t k) const
    {
        check(i, j, k);
        return data_[offset(i, j, k)];
    }

    [[nodiscard]] const std::vector<T>& flat() const { return data_; }

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    [[nodiscard]] std::size_t offset(std::size_t i, std::size_t j, std::size_t k) const
    {
        return (i * dims_[1] + j) * dims_[2] + k;
    }
    void check(std::size_t i, std::size_t j, std::size_t k) const
    {
        if (i >= dims_[0] || j >= dims_[1] || k >= dims_[2])
            throw std::out_of_range("tensor index (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(k) + ") outside (" + std::to_string(dims_[0]) + "," +
                                    std::to_string(dims_[1]) + "," + std::to_string(dims_[2]) + ")");
    }

    std::array<std::size_t, 3> dims_{0, 0, 0};
    std::vector<T> data_;
};

}  // namespace modfun
