#pragma once

// Test-only oracles and builders, kept independent of the elimination code
// they are used to check.

#include <complex>
#include <initializer_list>
#include <vector>

#include "rank1det/dense_matrix.hpp"
#include "rank1det/rank1.hpp"
#include "rank1det/rational.hpp"
#include "rank1det/scalar.hpp"

namespace testsupport {

/// Recursive cofactor expansion along the first row. O(n!), n <= 6 only.
template <rank1det::ScalarKind T>
T det_cofactor(const rank1det::DenseMatrix<T>& m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    T sum = T(0);
    for (std::size_t j = 0; j < n; ++j) {
        rank1det::DenseMatrix<T> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        const T term = m(0, j) * det_cofactor(minor);
        sum = j % 2 == 0 ? sum + term : sum - term;
    }
    return sum;
}

template <rank1det::ScalarKind T>
rank1det::DenseMatrix<T> mat(std::initializer_list<std::initializer_list<int>> rows) {
    rank1det::DenseMatrix<T> m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (int v : row) m(i, j++) = T(v);
        ++i;
    }
    return m;
}

template <rank1det::ScalarKind T>
std::vector<T> vec(std::initializer_list<int> values) {
    std::vector<T> v;
    v.reserve(values.size());
    for (int e : values) v.push_back(T(e));
    return v;
}

template <rank1det::ScalarKind T>
rank1det::Rank1System<T> sys(std::initializer_list<int> x, std::initializer_list<int> a,
                             std::initializer_list<int> b) {
    return rank1det::Rank1System<T>(vec<T>(x), vec<T>(a), vec<T>(b));
}

/// The fixed counterexample instance x=(5,7), a=(1,2), b=(3,4).
template <rank1det::ScalarKind T>
rank1det::Rank1System<T> demo_instance() {
    return sys<T>({5, 7}, {1, 2}, {3, 4});
}

inline bool close(double x, double y, double rel) {
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    return std::abs(x - y) <= rel * scale;
}

inline bool close(const std::complex<double>& x, const std::complex<double>& y, double rel) {
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    return std::abs(x - y) <= rel * scale;
}

}  // namespace testsupport
