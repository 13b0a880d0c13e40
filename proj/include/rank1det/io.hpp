#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "rank1det/dense_matrix.hpp"
#include "rank1det/fubini_study.hpp"
#include "rank1det/rank1.hpp"
#include "rank1det/rational.hpp"
#include "rank1det/scalar.hpp"

namespace rank1det {

/// Error with 1-based line/column of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Scalar grammar, one token per value:
///   f64  shortest round-trip decimal        1.5, -3, 2.5e-12
///   c64  re+imi, no spaces                  1.5-0.25i, 0+0i
///   q    p or p/q, canonical form           11, -192/35
///   qi   re+imi with rational parts         1/2-3/4i, -2+0i
/// Round-trips are bit-exact for the exact kinds.
template <ScalarKind T>
std::string format_scalar(const T& value);

template <ScalarKind T>
T parse_scalar(std::string_view token);  // throws std::invalid_argument

using DenseAny = std::variant<DenseMatrix<double>, DenseMatrix<std::complex<double>>,
                              DenseMatrix<Rational>, DenseMatrix<GaussianRational>>;
using Rank1Any = std::variant<Rank1System<double>, Rank1System<std::complex<double>>,
                              Rank1System<Rational>, Rank1System<GaussianRational>>;

/// `dense n KIND` with KIND in {f64, c64, q, qi}, then n lines of n entries.
DenseAny read_dense(std::string_view text);
template <ScalarKind T>
std::string write_dense(const DenseMatrix<T>& m);

/// `rank1 n KIND`, then lines `x: ...`, `a: ...`, `b: ...` of n entries each.
Rank1Any read_rank1(std::string_view text);
template <ScalarKind T>
std::string write_rank1(const Rank1System<T>& s);

/// `chart n`, then one line of n c64 entries.
ChartPoint<std::complex<double>> read_chart(std::string_view text);
std::string write_chart(const ChartPoint<std::complex<double>>& p);

std::string_view kind_of(const DenseAny& m);
std::string_view kind_of(const Rank1Any& s);

}  // namespace rank1det
