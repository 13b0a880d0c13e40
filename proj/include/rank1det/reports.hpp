#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rank1det/dense_det.hpp"
#include "rank1det/fubini_study.hpp"

namespace rank1det {

/// Version stamp on every JSON document the CLI emits.
inline constexpr int kSchemaVersion = 1;

struct VerifyReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t max_n = 0;
    std::string kind;
    std::vector<std::size_t> dims;  ///< distinct dimensions sampled, ascending
    std::size_t mismatches = 0;
    std::map<std::string, std::size_t> paths_used;
    std::optional<std::string> first_mismatch;  ///< rank1-format serialization
};

struct ErratumReport {
    std::string kind;
    std::size_t n = 0;
    std::vector<std::string> x, a, b;  ///< instance echo, scalar grammar
    std::string corrected;
    std::optional<std::string> erroneous;  ///< absent when x_k = 0 makes it undefined
    std::string dense;
    bool agree_corrected_dense = false;
    bool agree_erroneous_dense = false;
};

struct FsCheckReport {
    std::size_t n = 0;
    std::size_t points = 0;
    double step = 0.0;
    std::uint64_t seed = 0;
    double expected_constant = 0.0;
    double threshold = 0.0;  ///< pass requires max_abs_deviation <= 100 h^2
    std::vector<EinsteinReport> reports;
    bool pass = false;
};

struct BenchResult {
    std::size_t n = 0;
    double structured_seconds = 0.0;  ///< median per-call time of the O(n) path
    double dense_seconds = 0.0;       ///< median time of the O(n^3) baseline
    double speedup = 0.0;
    SignedLogDet structured;
    SignedLogDet dense;
};

struct BenchReport {
    std::uint64_t seed = 0;
    std::size_t repeats = 0;
    std::vector<BenchResult> results;
    double checksum = 0.0;  ///< sum of all computed log-determinants
};

nlohmann::json report_json(const VerifyReport& r);
nlohmann::json report_json(const ErratumReport& r);
nlohmann::json report_json(const FsCheckReport& r);
nlohmann::json report_json(const BenchReport& r);

void render_pretty(const VerifyReport& r, std::ostream& os);
void render_pretty(const ErratumReport& r, std::ostream& os);
void render_pretty(const FsCheckReport& r, std::ostream& os);
void render_pretty(const BenchReport& r, std::ostream& os);

}  // namespace rank1det
