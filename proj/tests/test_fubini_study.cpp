#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "rank1det/fubini_study.hpp"
#include "rank1det/random.hpp"
#include "support/oracles.hpp"

using namespace rank1det;
using cplx = std::complex<double>;
using FloatPoint = ChartPoint<cplx>;
using ExactPoint = ChartPoint<GaussianRational>;

TEST_CASE("metric matrix matches the frozen small cases") {
    const auto at_origin = fs_metric_matrix(FloatPoint::origin(1));
    CHECK(at_origin(0, 0) == cplx(1.0));

    // (1 + 1 - 1) / (1 + 1)^2 = 1/4
    const auto at_one = fs_metric_matrix(FloatPoint({cplx(1.0)}));
    CHECK(at_one(0, 0) == cplx(0.25));

    const auto origin2 = fs_metric_matrix(FloatPoint::origin(2));
    CHECK(origin2 == DenseMatrix<cplx>::identity(2));

    const auto exact = fs_metric_matrix(ExactPoint({GaussianRational(1)}));
    CHECK(exact(0, 0) == GaussianRational(Rational(1, 4)));
}

TEST_CASE("metric matrix is Hermitian exactly as computed") {
    Rng rng(60);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 6));
        const auto p = random_chart_point(rng, n, 1.5);
        const auto h = fs_metric_matrix(p);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(h(i, j) == std::conj(h(j, i)));
    }
}

TEST_CASE("metric matrix is positive definite (leading minors)") {
    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 6));
        const auto p = random_chart_point(rng, n, 3.0 / std::sqrt(double(n)));
        const auto h = fs_metric_matrix(p);
        for (std::size_t k = 1; k <= n; ++k) {
            const cplx minor = det_dense_float(h.leading_block(k));
            CHECK(minor.real() > 0.0);
            CHECK(std::abs(minor.imag()) <= 1e-12 * minor.real());
        }
    }
}

TEST_CASE("rank-one parametrization matches the frozen small cases") {
    const auto origin = fs_rank1_params(FloatPoint::origin(3));
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(origin.x[k] == cplx(1.0));
        CHECK(origin.a[k] == cplx(0.0));
        CHECK(origin.b[k] == cplx(0.0));
    }

    const auto at_one = fs_rank1_params(ExactPoint({GaussianRational(1)}));
    CHECK(at_one.x[0] == GaussianRational(Rational(1, 4)));
    CHECK(at_one.a[0] == GaussianRational(Rational(-1, 2)));
    CHECK(at_one.b[0] == GaussianRational(Rational(1, 2)));
    CHECK(to_dense(at_one)(0, 0) == GaussianRational(Rational(1, 4)));
}

TEST_CASE("rank-one parametrization realizes the metric matrix entrywise") {
    const FloatPoint p({cplx(1.0), cplx(0.0, 1.0)});
    const auto dense = to_dense(fs_rank1_params(p));
    const auto metric = fs_metric_matrix(p);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(dense(i, j) - metric(i, j)) <= 1e-15);

    Rng rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 8));
        const auto q = random_chart_point(rng, n, 1.5);
        const auto d = to_dense(fs_rank1_params(q));
        const auto m = fs_metric_matrix(q);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(d(i, j) - m(i, j)) <= 1e-15);
    }

    // exact coordinates realize the metric exactly
    Rng erng(63);
    for (int trial = 0; trial < 10; ++trial) {
        const auto ep = random_rational_chart_point(erng, 3);
        CHECK(to_dense(fs_rank1_params(ep)) == fs_metric_matrix(ep));
    }
}

TEST_CASE("closed-form determinant matches the frozen cases and the structured route") {
    CHECK(fs_det_closed_form(FloatPoint::origin(2)) == 1.0);
    CHECK(fs_det_closed_form(FloatPoint({cplx(1.0)})) == 0.25);
    CHECK(fs_det_closed_form(ExactPoint({GaussianRational(1)})) == Rational(1, 4));

    Rng rng(64);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = random_chart_point(rng, 3, 1.5);
        const cplx structured = det_corrected(fs_rank1_params(p));
        const double closed = fs_det_closed_form(p);
        CHECK(std::abs(structured - cplx(closed)) <= 1e-12 * closed);
    }
}

TEST_CASE("determinant identity holds to 1e-12 relative up to n = 64") {
    Rng rng(65);
    for (const std::size_t n : {std::size_t{1}, std::size_t{8}, std::size_t{33}, std::size_t{64}}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto p = random_chart_point(rng, n, 3.0 / std::sqrt(double(n)));
            const cplx structured = det_corrected(fs_rank1_params(p));
            const double closed = fs_det_closed_form(p);
            CHECK(std::abs(structured - cplx(closed)) <= 1e-12 * closed);
        }
    }
}

TEST_CASE("determinant identity holds exactly in gaussian-rational arithmetic") {
    Rng rng(66);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto p = random_rational_chart_point(rng, n);
            const GaussianRational structured = det_corrected(fs_rank1_params(p));
            CHECK(structured == GaussianRational(fs_det_closed_form(p)));
        }
    }
}

TEST_CASE("fs_log_det matches the closed form") {
    CHECK(fs_log_det(FloatPoint::origin(2)) == 0.0);
    CHECK(fs_log_det(FloatPoint({cplx(1.0)})) ==
          doctest::Approx(-2.0 * std::log(2.0)).epsilon(1e-14));

    Rng rng(67);
    const auto p = random_chart_point(rng, 64, 3.0 / 8.0);
    const double expected = -65.0 * std::log1p(p.norm_sq());
    CHECK(std::abs(fs_log_det(p) - expected) <= 1e-10);
}

TEST_CASE("fs_log_det depends on the point only through its norm") {
    // dyadic coordinates with equal ||z||^2 = 1.5625
    const FloatPoint p1({cplx(0.75), cplx(1.0)});
    const FloatPoint p2({cplx(1.25), cplx(0.0)});
    const FloatPoint p3({cplx(0.0, 0.75), cplx(-1.0, 0.0)});
    CHECK(std::abs(fs_log_det(p1) - fs_log_det(p2)) <= 1e-13);
    CHECK(std::abs(fs_log_det(p1) - fs_log_det(p3)) <= 1e-13);
}

TEST_CASE("finite-difference Ricci coefficients at the origin") {
    const auto r1 = fs_ricci_fd(FloatPoint::origin(1), 1e-4);
    CHECK(std::abs(r1(0, 0) - cplx(2.0)) <= 1e-6);

    const auto r2 = fs_ricci_fd(FloatPoint::origin(2), 1e-4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(std::abs(r2(i, j) - (i == j ? cplx(3.0) : cplx(0.0))) <= 1e-6);
}

TEST_CASE("finite-difference Ricci matches (n+1) H away from the origin") {
    const FloatPoint p({cplx(0.3), cplx(0.7, -0.2)});
    const auto ricci = fs_ricci_fd(p, 1e-4);
    const auto metric = fs_metric_matrix(p);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(std::abs(ricci(i, j) - 3.0 * metric(i, j)) <= 1e-5);
}

TEST_CASE("fs_ricci_fd rejects non-positive steps") {
    CHECK_THROWS_AS(fs_ricci_fd(FloatPoint::origin(1), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(fs_ricci_fd(FloatPoint::origin(1), -1e-4), std::invalid_argument);
}

TEST_CASE("einstein check reports the expected constant") {
    const auto origin1 = fs_einstein_check(FloatPoint::origin(1), 1e-4);
    CHECK(origin1.max_abs_deviation <= 1e-6);
    CHECK(origin1.estimated_constant == doctest::Approx(2.0).epsilon(1e-6));

    const auto origin3 = fs_einstein_check(FloatPoint::origin(3), 1e-4);
    CHECK(origin3.estimated_constant == doctest::Approx(4.0).epsilon(1e-5));

    Rng rng(68);
    for (int trial = 0; trial < 3; ++trial) {
        const auto p = random_chart_point(rng, 2, 2.0 / std::sqrt(2.0));
        const auto report = fs_einstein_check(p, 1e-4);
        CHECK(std::abs(report.estimated_constant - 3.0) <= 1e-4);
        CHECK(report.fd_step == 1e-4);
    }
}

TEST_CASE("finite differences converge at second order") {
    const FloatPoint p({cplx(0.3, 0.1), cplx(-0.2, 0.4)});
    const double coarse = fs_einstein_check(p, 1e-2).max_abs_deviation;
    const double mid = fs_einstein_check(p, 5e-3).max_abs_deviation;
    const double fine = fs_einstein_check(p, 2.5e-3).max_abs_deviation;
    CHECK(coarse / mid >= 3.0);
    CHECK(coarse / mid <= 5.0);
    CHECK(mid / fine >= 3.0);
    CHECK(mid / fine <= 5.0);
}

TEST_CASE("chart points validate their dimension") {
    CHECK_THROWS_AS(FloatPoint(std::vector<cplx>{}), std::invalid_argument);
    const FloatPoint p({cplx(3.0, 4.0)});
    CHECK(p.norm_sq() == 25.0);
}
