#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rank1det/io.hpp"
#include "rank1det/reports.hpp"

namespace rank1det {

struct VerifyParams {
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    std::size_t max_n = 8;
    std::string kind = "q";
};

/// Oracle-equivalence suite over seeded random instances. Exact kinds
/// compare the three structured routes against the Bareiss determinant for
/// equality; f64 compares against the pivoted float determinant within
/// 1e-9 relative.
VerifyReport run_verify(const VerifyParams& params);

/// The fixed counterexample x=(5,7), a=(1,2), b=(3,4) in exact rationals.
Rank1Any builtin_erratum_instance();

ErratumReport run_erratum(const Rank1Any& instance);

struct FsCheckParams {
    std::size_t n = 2;
    std::size_t points = 5;
    double step = kDefaultFdStep;
    std::uint64_t seed = 1;
};

/// Einstein-property check at the origin plus random points in the
/// polydisk |z_i| <= 1.5; passes when every deviation is <= 100 h^2.
FsCheckReport run_fscheck(const FsCheckParams& params);

struct BenchParams {
    std::vector<std::size_t> sizes = {64, 256, 1024};
    std::size_t repeats = 3;
    std::uint64_t seed = 12345;
};

/// The two paths disagreed before timing started; benchmark numbers
/// without correctness are meaningless.
class BenchAgreementError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Times logdet_corrected against the dense baseline on identical
/// well-conditioned instances. Throws BenchAgreementError if the
/// log-determinants disagree beyond 1e-6 absolute.
BenchReport run_bench(const BenchParams& params);

/// Full command-line entry point. Exit codes: 0 success, 1 check failure,
/// 2 usage or parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rank1det
