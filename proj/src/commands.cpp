#include "rank1det/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "rank1det/random.hpp"
#include "rank1det/rank1.hpp"

namespace rank1det {

namespace {

constexpr double kFloatAgreementRel = 1e-9;
constexpr double kBenchAgreementAbs = 1e-6;

template <ScalarKind T>
bool values_match(const T& got, const T& want) {
    if constexpr (is_exact_kind_v<T>) {
        return got == want;
    } else {
        const double scale = std::max(1.0, abs_value(want));
        return abs_value(got - want) <= kFloatAgreementRel * scale;
    }
}

template <ScalarKind T>
VerifyReport verify_impl(const VerifyParams& params) {
    VerifyReport report;
    report.seed = params.seed;
    report.trials = params.trials;
    report.max_n = params.max_n;
    report.kind = std::string(scalar_traits<T>::kind_name);

    Rng rng(params.seed);
    std::set<std::size_t> dims;
    for (std::size_t trial = 0; trial < params.trials; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.int_in(0, long(params.max_n)));
        dims.insert(n);
        const Rank1System<T> s = random_rank1<T>(rng, n);
        const T dense = det_dense(to_dense(s));
        const Evaluated<T> corrected = det_corrected_traced(s);
        ++report.paths_used[std::string(to_string(corrected.path))];

        bool ok = values_match(corrected.value, dense) && values_match(det_division_free(s), dense);
        if (n <= kDefaultExpansionLimit) ok = ok && values_match(det_by_expansion(s), dense);
        if (!ok) {
            ++report.mismatches;
            if (!report.first_mismatch) report.first_mismatch = write_rank1(s);
        }
    }
    report.dims.assign(dims.begin(), dims.end());
    return report;
}

template <ScalarKind T>
ErratumReport erratum_impl(const Rank1System<T>& s) {
    ErratumReport report;
    report.kind = std::string(scalar_traits<T>::kind_name);
    report.n = s.size();
    for (const T& v : s.x) report.x.push_back(format_scalar(v));
    for (const T& v : s.a) report.a.push_back(format_scalar(v));
    for (const T& v : s.b) report.b.push_back(format_scalar(v));

    const T dense = det_dense(to_dense(s));
    const T corrected = det_corrected(s);
    report.dense = format_scalar(dense);
    report.corrected = format_scalar(corrected);
    report.agree_corrected_dense = values_match(corrected, dense);
    try {
        const T erroneous = det_erroneous(s);
        report.erroneous = format_scalar(erroneous);
        report.agree_erroneous_dense = values_match(erroneous, dense);
    } catch (const SingularDiagonalError&) {
        report.erroneous.reset();
        report.agree_erroneous_dense = false;
    }
    return report;
}

double median(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t m = samples.size() / 2;
    return samples.size() % 2 == 1 ? samples[m] : 0.5 * (samples[m - 1] + samples[m]);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string first_word(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
    std::size_t end = start;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    return std::string(text.substr(start, end - start));
}

}  // namespace

VerifyReport run_verify(const VerifyParams& params) {
    if (params.kind == "q") return verify_impl<Rational>(params);
    if (params.kind == "f64") return verify_impl<double>(params);
    throw std::invalid_argument("verify: kind must be q or f64");
}

Rank1Any builtin_erratum_instance() {
    return Rank1System<Rational>({Rational(5), Rational(7)}, {Rational(1), Rational(2)},
                                 {Rational(3), Rational(4)});
}

ErratumReport run_erratum(const Rank1Any& instance) {
    return std::visit([](const auto& s) { return erratum_impl(s); }, instance);
}

FsCheckReport run_fscheck(const FsCheckParams& params) {
    FsCheckReport report;
    report.n = params.n;
    report.points = params.points;
    report.step = params.step;
    report.seed = params.seed;
    report.expected_constant = static_cast<double>(params.n + 1);
    report.threshold = 100.0 * params.step * params.step;

    Rng rng(params.seed);
    report.pass = true;
    for (std::size_t i = 0; i < params.points; ++i) {
        const auto point = i == 0 ? ChartPoint<std::complex<double>>::origin(params.n)
                                  : random_chart_point(rng, params.n, 1.5);
        report.reports.push_back(fs_einstein_check(point, params.step));
        if (report.reports.back().max_abs_deviation > report.threshold) report.pass = false;
    }
    return report;
}

BenchReport run_bench(const BenchParams& params) {
    BenchReport report;
    report.seed = params.seed;
    report.repeats = params.repeats;

    Rng rng(params.seed);
    for (const std::size_t n : params.sizes) {
        BenchResult row;
        row.n = n;
        const Rank1System<double> s = random_well_conditioned(rng, n);
        const DenseMatrix<double> dense_matrix = to_dense(s);
        row.structured = logdet_corrected(s);
        const auto estimate_start = std::chrono::steady_clock::now();
        row.dense = logdet_dense_float(dense_matrix);
        const double dense_estimate = seconds_since(estimate_start);
        if (row.structured.sign != row.dense.sign ||
            std::abs(row.structured.log_abs - row.dense.log_abs) > kBenchAgreementAbs) {
            std::ostringstream msg;
            msg << "bench: structured and dense log-determinants disagree at n=" << n
                << " (structured sign " << row.structured.sign << ", log " << row.structured.log_abs
                << "; dense sign " << row.dense.sign << ", log " << row.dense.log_abs << ")";
            throw BenchAgreementError(msg.str());
        }

        // enough calls per sample to stay well above the clock resolution
        const std::size_t calls = std::max<std::size_t>(1, 2'000'000 / std::max<std::size_t>(n, 1));
        const std::size_t dense_calls = static_cast<std::size_t>(
            std::clamp(5e-3 / std::max(dense_estimate, 1e-7), 1.0, 2e5));
        std::vector<double> structured_samples, dense_samples;
        for (std::size_t r = 0; r < params.repeats; ++r) {
            const auto start = std::chrono::steady_clock::now();
            for (std::size_t c = 0; c < calls; ++c) report.checksum += logdet_corrected(s).log_abs;
            structured_samples.push_back(seconds_since(start) / static_cast<double>(calls));
        }
        for (std::size_t r = 0; r < params.repeats; ++r) {
            const auto start = std::chrono::steady_clock::now();
            for (std::size_t c = 0; c < dense_calls; ++c)
                report.checksum += logdet_dense_float(dense_matrix).log_abs;
            dense_samples.push_back(seconds_since(start) / static_cast<double>(dense_calls));
        }
        row.structured_seconds = median(std::move(structured_samples));
        row.dense_seconds = median(std::move(dense_samples));
        row.speedup = row.dense_seconds / row.structured_seconds;
        report.results.push_back(row);
    }
    return report;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact and floating-point determinants of diagonal-plus-rank-one matrices"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "write a human-readable summary to stderr");

    VerifyParams verify_params;
    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check the structured determinant formulas against the dense oracle");
    verify->add_option("--seed", verify_params.seed, "RNG seed")->capture_default_str();
    verify->add_option("--trials", verify_params.trials, "number of random instances")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--max-n", verify_params.max_n, "largest dimension sampled")
        ->capture_default_str();
    verify->add_option("--kind", verify_params.kind, "scalar kind")
        ->check(CLI::IsMember({"q", "f64"}))
        ->capture_default_str();

    std::string erratum_file;
    CLI::App* erratum = app.add_subcommand(
        "erratum", "compare the corrected and misprinted formulas against the dense determinant");
    erratum->add_option("file", erratum_file,
                        "rank1-format instance file (default: the built-in counterexample)");

    FsCheckParams fs_params;
    CLI::App* fscheck = app.add_subcommand(
        "fscheck", "verify the Einstein property of the Fubini-Study metric numerically");
    fscheck->add_option("--n", fs_params.n, "complex dimension")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    fscheck->add_option("--points", fs_params.points, "number of chart points (origin included)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    fscheck->add_option("--step", fs_params.step, "finite-difference step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    fscheck->add_option("--seed", fs_params.seed, "RNG seed")->capture_default_str();

    BenchParams bench_params;
    CLI::App* bench = app.add_subcommand(
        "bench", "time the O(n) structured path against the O(n^3) dense baseline");
    bench->add_option("--sizes", bench_params.sizes, "comma-separated dimensions")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--repeats", bench_params.repeats, "timing samples per size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--seed", bench_params.seed, "RNG seed")->capture_default_str();

    std::string det_file;
    CLI::App* det = app.add_subcommand("det", "determinant of a matrix file (dense or rank1)");
    det->add_option("file", det_file, "input file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            const VerifyReport report = run_verify(verify_params);
            out << report_json(report).dump() << "\n";
            if (pretty) render_pretty(report, err);
            if (report.mismatches != 0 && report.first_mismatch)
                err << "verify: first mismatching instance:\n" << *report.first_mismatch;
            return report.mismatches == 0 ? 0 : 1;
        }
        if (erratum->parsed()) {
            const Rank1Any instance = erratum_file.empty()
                                          ? builtin_erratum_instance()
                                          : read_rank1(read_file(erratum_file));
            const ErratumReport report = run_erratum(instance);
            out << report_json(report).dump() << "\n";
            if (pretty) render_pretty(report, err);
            return report.agree_corrected_dense ? 0 : 1;
        }
        if (fscheck->parsed()) {
            const FsCheckReport report = run_fscheck(fs_params);
            out << report_json(report).dump() << "\n";
            if (pretty) render_pretty(report, err);
            return report.pass ? 0 : 1;
        }
        if (bench->parsed()) {
            BenchReport report;
            try {
                report = run_bench(bench_params);
            } catch (const BenchAgreementError& e) {
                err << e.what() << "\n";
                return 1;
            }
            out << report_json(report).dump() << "\n";
            if (pretty) render_pretty(report, err);
            return 0;
        }
        if (det->parsed()) {
            const std::string text = read_file(det_file);
            nlohmann::json j{{"schema", kSchemaVersion}, {"command", "det"}};
            if (first_word(text) == "rank1") {
                const Rank1Any instance = read_rank1(text);
                std::visit(
                    [&](const auto& s) {
                        const auto result = det_corrected_traced(s);
                        using T = typename std::decay_t<decltype(s)>::value_type;
                        j["kind"] = std::string(scalar_traits<T>::kind_name);
                        j["n"] = s.size();
                        j["det"] = format_scalar(result.value);
                        j["path"] = std::string(to_string(result.path));
                    },
                    instance);
            } else {
                const DenseAny matrix = read_dense(text);
                std::visit(
                    [&](const auto& m) {
                        using T = typename std::decay_t<decltype(m)>::value_type;
                        j["kind"] = std::string(scalar_traits<T>::kind_name);
                        j["n"] = m.size();
                        j["det"] = format_scalar(det_dense(m));
                    },
                    matrix);
            }
            out << j.dump() << "\n";
            if (pretty) err << "det: " << j["det"].get<std::string>() << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace rank1det
