#pragma once

#include <cmath>
#include <complex>
#include <string_view>

#include "rank1det/rational.hpp"

namespace rank1det {

/// The four scalar kinds every operation is generic over:
///   f64 -> double, c64 -> std::complex<double>,
///   q   -> Rational, qi -> GaussianRational.
template <typename T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static constexpr bool is_complex = false;
    static constexpr std::string_view kind_name = "f64";
    using real_type = double;
};

template <>
struct scalar_traits<std::complex<double>> {
    static constexpr bool is_exact = false;
    static constexpr bool is_complex = true;
    static constexpr std::string_view kind_name = "c64";
    using real_type = double;
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static constexpr bool is_complex = false;
    static constexpr std::string_view kind_name = "q";
    using real_type = Rational;
};

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool is_exact = true;
    static constexpr bool is_complex = true;
    static constexpr std::string_view kind_name = "qi";
    using real_type = Rational;
};

template <typename T>
concept ScalarKind = requires { scalar_traits<T>::kind_name; };

template <ScalarKind T>
inline constexpr bool is_exact_kind_v = scalar_traits<T>::is_exact;

template <ScalarKind T>
inline constexpr bool is_complex_kind_v = scalar_traits<T>::is_complex;

template <ScalarKind T>
using real_type_t = typename scalar_traits<T>::real_type;

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }

inline double abs_value(double x) { return std::abs(x); }
inline double abs_value(const std::complex<double>& x) { return std::abs(x); }

inline double conj_value(double x) { return x; }
inline std::complex<double> conj_value(const std::complex<double>& x) { return std::conj(x); }
inline Rational conj_value(const Rational& x) { return x; }
inline GaussianRational conj_value(const GaussianRational& x) { return x.conj(); }

inline double real_part(double x) { return x; }
inline double real_part(const std::complex<double>& x) { return x.real(); }
inline Rational real_part(const Rational& x) { return x; }
inline Rational real_part(const GaussianRational& x) { return x.re(); }

/// |x|^2 in the real type of the kind (exact for exact kinds).
inline double norm_sq(double x) { return x * x; }
inline double norm_sq(const std::complex<double>& x) { return std::norm(x); }
inline Rational norm_sq(const Rational& x) { return x * x; }
inline Rational norm_sq(const GaussianRational& x) { return x.norm_sq(); }

}  // namespace rank1det
