#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rank1det/dense_det.hpp"
#include "rank1det/dense_matrix.hpp"
#include "rank1det/scalar.hpp"

namespace rank1det {

/// Diagonal-plus-rank-one system: the n x n matrix with diagonal entries
/// x_i and off-diagonal entries a_i * b_j.
template <ScalarKind T>
struct Rank1System {
    using value_type = T;

    std::vector<T> x;
    std::vector<T> a;
    std::vector<T> b;

    Rank1System() = default;
    Rank1System(std::vector<T> x_, std::vector<T> a_, std::vector<T> b_)
        : x(std::move(x_)), a(std::move(a_)), b(std::move(b_)) {
        if (a.size() != x.size() || b.size() != x.size())
            throw std::invalid_argument("Rank1System: x, a, b must share one length");
    }

    std::size_t size() const { return x.size(); }

    /// The factors d_k = x_k - a_k * b_k.
    std::vector<T> factors() const {
        std::vector<T> d;
        d.reserve(size());
        for (std::size_t k = 0; k < size(); ++k) d.push_back(x[k] - a[k] * b[k]);
        return d;
    }
};

/// Which evaluation route produced a determinant value.
enum class EvalPath { divided, division_free, fallback };

inline std::string_view to_string(EvalPath p) {
    switch (p) {
        case EvalPath::divided: return "divided";
        case EvalPath::division_free: return "division-free";
        case EvalPath::fallback: return "fallback";
    }
    return "?";
}

template <typename T>
struct Evaluated {
    T value;
    EvalPath path;
};

/// Thrown by det_erroneous when a diagonal entry x_k is zero; the misprinted
/// formula divides by x_k.
class SingularDiagonalError : public std::domain_error {
public:
    explicit SingularDiagonalError(std::size_t index)
        : std::domain_error("division by zero: diagonal entry x[" + std::to_string(index) +
                            "] is zero"),
          index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Float det_corrected falls back to the division-free form when
/// min|d_k| < 2^-26 * max(1, max|d_k|).
inline constexpr int kSingularFactorExponent = -26;

template <ScalarKind T>
DenseMatrix<T> to_dense(const Rank1System<T>& s) {
    const std::size_t n = s.size();
    DenseMatrix<T> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? s.x[i] : s.a[i] * s.b[j];
    return m;
}

/// Polynomial form prod(d_k) + sum_k a_k b_k prod_{l != k}(d_l), defined for
/// any input including zero factors. The per-k products come from prefix and
/// suffix product arrays, keeping the whole evaluation O(n). Float kinds
/// accumulate the n+1 terms with compensated summation.
template <ScalarKind T>
T det_division_free(const Rank1System<T>& s) {
    const std::size_t n = s.size();
    const std::vector<T> d = s.factors();
    std::vector<T> prefix(n + 1, T(1)), suffix(n + 1, T(1));
    for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] * d[k];
    for (std::size_t k = n; k-- > 0;) suffix[k] = d[k] * suffix[k + 1];

    if constexpr (is_exact_kind_v<T>) {
        T sum = prefix[n];
        for (std::size_t k = 0; k < n; ++k) sum += s.a[k] * s.b[k] * prefix[k] * suffix[k + 1];
        return sum;
    } else {
        T sum = T(0), comp = T(0);
        auto add = [&](const T& term) {
            const T y = term - comp;
            const T t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        };
        add(prefix[n]);
        for (std::size_t k = 0; k < n; ++k) add(s.a[k] * s.b[k] * prefix[k] * suffix[k + 1]);
        return sum;
    }
}

namespace detail {

template <ScalarKind T>
bool needs_division_free(const std::vector<T>& d) {
    if constexpr (is_exact_kind_v<T>) {
        for (const T& dk : d)
            if (is_zero(dk)) return true;
        return false;
    } else {
        if (d.empty()) return false;
        double min_abs = abs_value(d[0]), max_abs = min_abs;
        for (const T& dk : d) {
            const double v = abs_value(dk);
            min_abs = std::min(min_abs, v);
            max_abs = std::max(max_abs, v);
        }
        return min_abs < std::ldexp(std::max(1.0, max_abs), kSingularFactorExponent);
    }
}

}  // namespace detail

/// Determinant via (prod d_k)(1 + sum a_k b_k / d_k). Inputs with singular
/// or near-singular factors are delegated to det_division_free; the returned
/// path records which route ran.
template <ScalarKind T>
Evaluated<T> det_corrected_traced(const Rank1System<T>& s) {
    const std::vector<T> d = s.factors();
    if (detail::needs_division_free(d))
        return {det_division_free(s), EvalPath::fallback};
    T prod = T(1), sum = T(0);
    for (std::size_t k = 0; k < s.size(); ++k) {
        prod *= d[k];
        sum += s.a[k] * s.b[k] / d[k];
    }
    return {prod * (T(1) + sum), EvalPath::divided};
}

template <ScalarKind T>
T det_corrected(const Rank1System<T>& s) {
    return det_corrected_traced(s).value;
}

/// The misprinted textbook value (prod d_k)(1 + sum a_k b_k / x_k).
/// WRONG in general; kept for the erratum demonstration. Throws
/// SingularDiagonalError when some x_k is zero.
template <ScalarKind T>
T det_erroneous(const Rank1System<T>& s) {
    for (std::size_t k = 0; k < s.size(); ++k)
        if (is_zero(s.x[k])) throw SingularDiagonalError(k);
    T prod = T(1), sum = T(0);
    for (std::size_t k = 0; k < s.size(); ++k) {
        prod *= s.x[k] - s.a[k] * s.b[k];
        sum += s.a[k] * s.b[k] / s.x[k];
    }
    return prod * (T(1) + sum);
}

/// Subset S of column indices (0-based) taking the rank-one column b_k * a
/// in the multilinearity expansion; the rest take (x_k - a_k b_k) e_k.
struct ExpansionSubset {
    std::uint64_t mask = 0;

    static ExpansionSubset of(std::initializer_list<std::size_t> indices) {
        ExpansionSubset s;
        for (std::size_t i : indices) s.mask |= std::uint64_t(1) << i;
        return s;
    }
    bool contains(std::size_t k) const { return (mask >> k) & 1; }
    int count() const { return std::popcount(mask); }
};

/// One term of the column-wise multilinearity expansion, evaluated by
/// delegating to the dense determinant oracle. Empty S gives prod d_k,
/// singletons give a_k b_k prod_{l != k} d_l, |S| >= 2 vanishes (two
/// proportional columns).
template <ScalarKind T>
T expansion_term(const Rank1System<T>& s, ExpansionSubset subset) {
    const std::size_t n = s.size();
    if (n > 64) throw std::invalid_argument("expansion_term: dimension exceeds 64");
    DenseMatrix<T> m(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (subset.contains(k))
            for (std::size_t i = 0; i < n; ++i) m(i, k) = s.a[i] * s.b[k];
        else
            m(k, k) = s.x[k] - s.a[k] * s.b[k];
    }
    return det_dense(m);
}

inline constexpr std::size_t kDefaultExpansionLimit = 12;

/// Sum of expansion_term over all 2^n subsets; a proof-faithful third
/// oracle. Throws std::invalid_argument above the dimension cap.
template <ScalarKind T>
T det_by_expansion(const Rank1System<T>& s, std::size_t max_dim = kDefaultExpansionLimit) {
    const std::size_t n = s.size();
    if (n > max_dim || n >= 64)
        throw std::invalid_argument("det_by_expansion: dimension " + std::to_string(n) +
                                    " exceeds the limit " + std::to_string(max_dim));
    T sum = T(0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
        sum += expansion_term(s, ExpansionSubset{mask});
    return sum;
}

/// Overflow-safe (sign, log|det|) of a real float system in O(n) time and
/// O(1) extra space. Near-singular factors delegate to the division-free
/// form (see det_division_free); log_abs is 0.0 when sign == 0.
inline Evaluated<SignedLogDet> logdet_corrected_traced(const Rank1System<double>& s) {
    const std::size_t n = s.size();
    double min_abs = 1.0, max_abs = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double v = std::abs(s.x[k] - s.a[k] * s.b[k]);
        min_abs = k == 0 ? v : std::min(min_abs, v);
        max_abs = std::max(max_abs, v);
    }
    if (n > 0 && min_abs < std::ldexp(std::max(1.0, max_abs), kSingularFactorExponent)) {
        const double value = det_division_free(s);
        if (value == 0.0) return {SignedLogDet{}, EvalPath::fallback};
        return {SignedLogDet{value < 0.0 ? -1 : 1, std::log(std::abs(value))}, EvalPath::fallback};
    }
    int sign = 1;
    double log_abs = 0.0, ratio_sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = s.a[k] * s.b[k];
        const double dk = s.x[k] - t;
        if (dk < 0.0) sign = -sign;
        log_abs += std::log(std::abs(dk));
        ratio_sum += t / dk;
    }
    const double c = 1.0 + ratio_sum;
    if (c == 0.0) return {SignedLogDet{}, EvalPath::divided};
    if (c < 0.0) sign = -sign;
    return {SignedLogDet{sign, log_abs + std::log(std::abs(c))}, EvalPath::divided};
}

inline SignedLogDet logdet_corrected(const Rank1System<double>& s) {
    return logdet_corrected_traced(s).value;
}

}  // namespace rank1det
