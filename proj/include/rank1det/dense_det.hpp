#pragma once

#include <cmath>
#include <cstddef>

#include "rank1det/dense_matrix.hpp"
#include "rank1det/scalar.hpp"

namespace rank1det {

/// Sign and log|det| pair; avoids overflow for large n.
/// log_abs is 0.0 whenever sign == 0 (the determinant is exactly zero).
struct SignedLogDet {
    int sign = 0;
    double log_abs = 0.0;
};

/// A pivot column of a float matrix counts as numerically zero when its
/// largest remaining entry is at most 2^-50 times the largest entry of the
/// input matrix.
inline constexpr int kZeroPivotExponent = -50;

namespace detail {

/// Partial-pivot elimination in place; leaves m upper triangular.
/// Returns +1/-1 for the row-swap parity, 0 if a pivot column is
/// numerically all-zero.
template <ScalarKind T>
    requires(!is_exact_kind_v<T>)
int eliminate_in_place(DenseMatrix<T>& m) {
    const std::size_t n = m.size();
    double max_abs = 0.0;
    for (const T& e : m.entries()) max_abs = std::max(max_abs, abs_value(e));
    const double tol = std::ldexp(max_abs, kZeroPivotExponent);

    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = abs_value(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = abs_value(m(i, k));
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best <= tol) return 0;
        if (pivot != k) {
            m.swap_rows(pivot, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const T factor = m(i, k) / m(k, k);
            m(i, k) = T(0);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return sign;
}

}  // namespace detail

/// Exact determinant via fraction-free Bareiss elimination with exact
/// division. n = 0 returns 1 (empty product).
template <ScalarKind T>
    requires is_exact_kind_v<T>
T det_dense_exact(const DenseMatrix<T>& m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    DenseMatrix<T> w = m;
    T prev = T(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(w(k, k))) {
            std::size_t pivot = k + 1;
            while (pivot < n && is_zero(w(pivot, k))) ++pivot;
            if (pivot == n) return T(0);
            w.swap_rows(pivot, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
            w(i, k) = T(0);
        }
        prev = w(k, k);
    }
    const T det = w(n - 1, n - 1);
    return negate ? -det : det;
}

/// Float determinant via row-pivoted triangular factorization. Returns
/// exactly 0 on the rank-deficient path; n = 0 returns 1.
template <ScalarKind T>
    requires(!is_exact_kind_v<T>)
T det_dense_float(const DenseMatrix<T>& m) {
    DenseMatrix<T> w = m;
    const int sign = detail::eliminate_in_place(w);
    if (sign == 0) return T(0);
    T det = T(sign);
    for (std::size_t k = 0; k < w.size(); ++k) det *= w(k, k);
    return det;
}

/// Overflow-safe (sign, log|det|) of a real float matrix.
inline SignedLogDet logdet_dense_float(const DenseMatrix<double>& m) {
    DenseMatrix<double> w = m;
    int sign = detail::eliminate_in_place(w);
    if (sign == 0) return {};
    double log_abs = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const double d = w(k, k);
        if (d < 0.0) sign = -sign;
        log_abs += std::log(std::abs(d));
    }
    return {sign, log_abs};
}

/// Kind-appropriate dense determinant (Bareiss for exact kinds, pivoted
/// factorization for float kinds).
template <ScalarKind T>
T det_dense(const DenseMatrix<T>& m) {
    if constexpr (is_exact_kind_v<T>)
        return det_dense_exact(m);
    else
        return det_dense_float(m);
}

}  // namespace rank1det
