#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rank1det/scalar.hpp"

namespace rank1det {

/// Square n x n matrix, row-major, all entries of one scalar kind.
template <ScalarKind T>
class DenseMatrix {
public:
    using value_type = T;

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n) : n_(n), entries_(n * n, T(0)) {}

    DenseMatrix(std::size_t n, std::vector<T> entries) : n_(n), entries_(std::move(entries)) {
        if (entries_.size() != n * n)
            throw std::invalid_argument("DenseMatrix: entry count must be n*n");
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t size() const { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    const std::vector<T>& entries() const { return entries_; }

    DenseMatrix transposed() const {
        DenseMatrix m(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    /// Top-left k x k block.
    DenseMatrix leading_block(std::size_t k) const {
        if (k > n_) throw std::out_of_range("DenseMatrix: leading block larger than matrix");
        DenseMatrix m(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t n_ = 0;
    std::vector<T> entries_;
};

}  // namespace rank1det
