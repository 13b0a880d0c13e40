#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rank1det/dense_matrix.hpp"
#include "rank1det/rank1.hpp"
#include "rank1det/scalar.hpp"

namespace rank1det {

/// Point z in an affine chart C^n of n-dimensional complex projective
/// space. Works with float (std::complex<double>) and exact
/// (GaussianRational) coordinates.
template <ScalarKind C>
    requires is_complex_kind_v<C>
struct ChartPoint {
    std::vector<C> z;

    explicit ChartPoint(std::vector<C> coords) : z(std::move(coords)) {
        if (z.empty()) throw std::invalid_argument("ChartPoint: complex dimension must be >= 1");
    }

    static ChartPoint origin(std::size_t n) { return ChartPoint(std::vector<C>(n, C(0))); }

    std::size_t dim() const { return z.size(); }

    /// s = ||z||^2 = sum |z_i|^2.
    real_type_t<C> norm_sq() const {
        real_type_t<C> s(0);
        for (const C& zi : z) s += rank1det::norm_sq(zi);
        return s;
    }
};

/// Metric matrix of the Kaehler potential log(1 + ||z||^2):
/// H_ij = delta_ij/(1+s) - conj(z_i) z_j/(1+s)^2. Hermitian positive
/// definite.
template <ScalarKind C>
    requires is_complex_kind_v<C>
DenseMatrix<C> fs_metric_matrix(const ChartPoint<C>& p) {
    using R = real_type_t<C>;
    const std::size_t n = p.dim();
    const R s = p.norm_sq();
    const R denom = (R(1) + s) * (R(1) + s);
    DenseMatrix<C> h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = i == j ? C((R(1) + s - rank1det::norm_sq(p.z[i])) / denom)
                             : -(conj_value(p.z[i]) * p.z[j]) / C(denom);
    return h;
}

/// The metric matrix as a diagonal-plus-rank-one system:
/// x_i = (1+s-|z_i|^2)/(1+s)^2, a_i = -conj(z_i)/(1+s), b_i = z_i/(1+s).
/// The (1+s)^2 denominator of the off-diagonal entries is split evenly
/// between a and b; only the products a_i * b_j matter for the determinant,
/// and this split reproduces fs_metric_matrix entrywise.
template <ScalarKind C>
    requires is_complex_kind_v<C>
Rank1System<C> fs_rank1_params(const ChartPoint<C>& p) {
    using R = real_type_t<C>;
    const std::size_t n = p.dim();
    const R s = p.norm_sq();
    const R denom1 = R(1) + s;
    const R denom2 = denom1 * denom1;
    std::vector<C> x, a, b;
    x.reserve(n);
    a.reserve(n);
    b.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        x.push_back(C((R(1) + s - rank1det::norm_sq(p.z[i])) / denom2));
        a.push_back(-conj_value(p.z[i]) / C(denom1));
        b.push_back(p.z[i] / C(denom1));
    }
    return Rank1System<C>(std::move(x), std::move(a), std::move(b));
}

/// Closed-form determinant of the metric matrix: (1 + ||z||^2)^-(n+1).
template <ScalarKind C>
    requires is_complex_kind_v<C>
real_type_t<C> fs_det_closed_form(const ChartPoint<C>& p) {
    const auto s = p.norm_sq();
    const long n = static_cast<long>(p.dim());
    if constexpr (is_exact_kind_v<C>)
        return Rational::pow(Rational(1) + s, -(n + 1));
    else
        return std::pow(1.0 + s, static_cast<double>(-(n + 1)));
}

/// log det H through the O(n) structured log-determinant. The factors
/// d_k = x_k - a_k b_k all equal 1/(1+s) > 0, so the products a_k * b_k are
/// real and the evaluation reduces to a real system (the rank-one gauge
/// (a_k b_k, 1) leaves the determinant unchanged).
inline double fs_log_det(const ChartPoint<std::complex<double>>& p) {
    const Rank1System<std::complex<double>> params = fs_rank1_params(p);
    const std::size_t n = p.dim();
    std::vector<double> x(n), a(n), b(n, 1.0);
    for (std::size_t k = 0; k < n; ++k) {
        x[k] = params.x[k].real();
        a[k] = (params.a[k] * params.b[k]).real();
    }
    return logdet_corrected(Rank1System<double>(std::move(x), std::move(a), std::move(b))).log_abs;
}

namespace detail {

/// fs_log_det with real coordinates u and v shifted by su*h and sv*h.
/// Coordinate c in [0, 2n): even -> Re z_{c/2}, odd -> Im z_{c/2}.
inline double fs_log_det_shifted(const ChartPoint<std::complex<double>>& p, std::size_t u, int su,
                                 std::size_t v, int sv, double h) {
    ChartPoint<std::complex<double>> q = p;
    auto shift = [&](std::size_t c, int sgn) {
        std::complex<double>& zc = q.z[c / 2];
        if (c % 2 == 0)
            zc = {zc.real() + sgn * h, zc.imag()};
        else
            zc = {zc.real(), zc.imag() + sgn * h};
    };
    shift(u, su);
    shift(v, sv);
    return fs_log_det(q);
}

}  // namespace detail

/// Ricci form coefficients R_ij = -d^2/(dz_i dzbar_j) log det H by central
/// finite differences over the 2n real coordinates, combined through
/// d^2 f / dz_i dzbar_j = 1/4 (d_xi d_xj + d_yi d_yj) f
///                      + i/4 (d_xi d_yj - d_yi d_xj) f.
/// Same-coordinate second derivatives use the 3-point stencil
/// (f(+h) - 2 f(0) + f(-h))/h^2, distinct coordinates the 4-point cross
/// (f(+,+) - f(+,-) - f(-,+) + f(-,-))/(4 h^2). Hermitian up to O(h^2).
inline DenseMatrix<std::complex<double>> fs_ricci_fd(const ChartPoint<std::complex<double>>& p,
                                                     double h) {
    if (!(h > 0.0)) throw std::invalid_argument("fs_ricci_fd: step must be positive");
    const std::size_t n = p.dim();
    const double f0 = fs_log_det(p);
    auto second = [&](std::size_t u, std::size_t v) {
        if (u == v) {
            const double fp = detail::fs_log_det_shifted(p, u, +1, u, 0, h);
            const double fm = detail::fs_log_det_shifted(p, u, -1, u, 0, h);
            return (fp - 2.0 * f0 + fm) / (h * h);
        }
        const double fpp = detail::fs_log_det_shifted(p, u, +1, v, +1, h);
        const double fpm = detail::fs_log_det_shifted(p, u, +1, v, -1, h);
        const double fmp = detail::fs_log_det_shifted(p, u, -1, v, +1, h);
        const double fmm = detail::fs_log_det_shifted(p, u, -1, v, -1, h);
        return (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    };
    DenseMatrix<std::complex<double>> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double dxx = second(2 * i, 2 * j);
            const double dyy = second(2 * i + 1, 2 * j + 1);
            const double dxy = second(2 * i, 2 * j + 1);
            const double dyx = second(2 * i + 1, 2 * j);
            const std::complex<double> wirtinger{0.25 * (dxx + dyy), 0.25 * (dxy - dyx)};
            r(i, j) = -wirtinger;
        }
    }
    return r;
}

/// Comparison of the finite-difference Ricci coefficients against
/// (n+1) * H: the Einstein property check.
struct EinsteinReport {
    ChartPoint<std::complex<double>> point;
    double fd_step;
    double max_abs_deviation;   ///< max_ij |R_ij - (n+1) H_ij|
    double estimated_constant;  ///< least-squares c minimizing ||R - c H||
};

inline EinsteinReport fs_einstein_check(const ChartPoint<std::complex<double>>& p, double h) {
    const std::size_t n = p.dim();
    const DenseMatrix<std::complex<double>> metric = fs_metric_matrix(p);
    const DenseMatrix<std::complex<double>> ricci = fs_ricci_fd(p, h);
    const double expected = static_cast<double>(n + 1);
    double max_dev = 0.0, num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            max_dev = std::max(max_dev, std::abs(ricci(i, j) - expected * metric(i, j)));
            num += (std::conj(metric(i, j)) * ricci(i, j)).real();
            den += std::norm(metric(i, j));
        }
    }
    return {p, h, max_dev, num / den};
}

/// Default finite-difference step for 64-bit floats: balances O(h^2)
/// truncation against cancellation in the second differences.
inline constexpr double kDefaultFdStep = 1e-4;

}  // namespace rank1det
