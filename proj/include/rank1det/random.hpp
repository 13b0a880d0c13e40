#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "rank1det/fubini_study.hpp"
#include "rank1det/rank1.hpp"
#include "rank1det/scalar.hpp"

namespace rank1det {

/// Seeded generator for reproducible instances. Draws raw mt19937_64 words
/// and derives values without std::*_distribution so that a (seed,
/// parameters) pair always produces the same stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [lo, hi], inclusive.
    long int_in(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    long nonzero_int_in(long lo, long hi) {
        long v;
        do {
            v = int_in(lo, hi);
        } while (v == 0);
        return v;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double real_in(double lo, double hi) { return lo + (hi - lo) * real01(); }

    /// Uniform in the closed complex disk of the given radius.
    std::complex<double> in_disk(double radius) {
        const double r = radius * std::sqrt(real01());
        const double theta = 2.0 * std::numbers::pi * real01();
        return std::polar(r, theta);
    }

private:
    std::mt19937_64 eng_;
};

/// Uniform integer entry in [-9, 9]; complex kinds draw both parts.
template <ScalarKind T>
T small_int_scalar(Rng& rng) {
    if constexpr (std::is_same_v<T, double>) {
        return static_cast<double>(rng.int_in(-9, 9));
    } else if constexpr (std::is_same_v<T, std::complex<double>>) {
        const double re = static_cast<double>(rng.int_in(-9, 9));
        const double im = static_cast<double>(rng.int_in(-9, 9));
        return {re, im};
    } else if constexpr (std::is_same_v<T, Rational>) {
        return Rational(rng.int_in(-9, 9));
    } else {
        Rational re(rng.int_in(-9, 9));
        Rational im(rng.int_in(-9, 9));
        return GaussianRational(std::move(re), std::move(im));
    }
}

/// Random system with integer entries in [-9, 9], drawn x then a then b.
template <ScalarKind T>
Rank1System<T> random_rank1(Rng& rng, std::size_t n) {
    std::vector<T> x, a, b;
    x.reserve(n);
    a.reserve(n);
    b.reserve(n);
    for (std::size_t k = 0; k < n; ++k) x.push_back(small_int_scalar<T>(rng));
    for (std::size_t k = 0; k < n; ++k) a.push_back(small_int_scalar<T>(rng));
    for (std::size_t k = 0; k < n; ++k) b.push_back(small_int_scalar<T>(rng));
    return Rank1System<T>(std::move(x), std::move(a), std::move(b));
}

/// Like random_rank1 but with every x_k and every a_k, b_k nonzero, so both
/// the divided formula and the misprinted formula are defined.
template <ScalarKind T>
Rank1System<T> random_rank1_nonzero(Rng& rng, std::size_t n) {
    std::vector<T> x, a, b;
    x.reserve(n);
    a.reserve(n);
    b.reserve(n);
    for (std::size_t k = 0; k < n; ++k) x.push_back(T(rng.nonzero_int_in(-9, 9)));
    for (std::size_t k = 0; k < n; ++k) a.push_back(T(rng.nonzero_int_in(-9, 9)));
    for (std::size_t k = 0; k < n; ++k) b.push_back(T(rng.nonzero_int_in(-9, 9)));
    return Rank1System<T>(std::move(x), std::move(a), std::move(b));
}

/// Well-conditioned float instance for benchmarking: factors d_k bounded
/// away from zero (|d_k| in [0.5, 1.5]) with x_k = d_k + a_k b_k.
inline Rank1System<double> random_well_conditioned(Rng& rng, std::size_t n) {
    std::vector<double> x(n), a(n), b(n);
    for (std::size_t k = 0; k < n; ++k) {
        a[k] = rng.real_in(-1.0, 1.0);
        b[k] = rng.real_in(-1.0, 1.0);
        const double magnitude = rng.real_in(0.5, 1.5);
        const double d = rng.next() % 2 == 0 ? magnitude : -magnitude;
        x[k] = d + a[k] * b[k];
    }
    return Rank1System<double>(std::move(x), std::move(a), std::move(b));
}

/// Chart point with every coordinate uniform in the disk |z_i| <= radius.
inline ChartPoint<std::complex<double>> random_chart_point(Rng& rng, std::size_t n,
                                                           double radius) {
    std::vector<std::complex<double>> z;
    z.reserve(n);
    for (std::size_t k = 0; k < n; ++k) z.push_back(rng.in_disk(radius));
    return ChartPoint<std::complex<double>>(std::move(z));
}

/// Exact chart point with coordinates p/q + (r/s)i, p, r in [-2, 2],
/// q, s in [1, 3].
inline ChartPoint<GaussianRational> random_rational_chart_point(Rng& rng, std::size_t n) {
    std::vector<GaussianRational> z;
    z.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rational re(rng.int_in(-2, 2), rng.int_in(1, 3));
        Rational im(rng.int_in(-2, 2), rng.int_in(1, 3));
        z.emplace_back(std::move(re), std::move(im));
    }
    return ChartPoint<GaussianRational>(std::move(z));
}

}  // namespace rank1det
