#include "rank1det/reports.hpp"

#include "rank1det/io.hpp"

namespace rank1det {

using nlohmann::json;

json report_json(const VerifyReport& r) {
    json j{{"schema", kSchemaVersion},
           {"command", "verify"},
           {"seed", r.seed},
           {"trials", r.trials},
           {"max_n", r.max_n},
           {"kind", r.kind},
           {"dims", r.dims},
           {"mismatches", r.mismatches},
           {"paths_used", r.paths_used},
           {"pass", r.mismatches == 0}};
    if (r.first_mismatch) j["first_mismatch"] = *r.first_mismatch;
    return j;
}

json report_json(const ErratumReport& r) {
    return json{{"schema", kSchemaVersion},
                {"command", "erratum"},
                {"kind", r.kind},
                {"instance", json{{"n", r.n}, {"x", r.x}, {"a", r.a}, {"b", r.b}}},
                {"corrected", r.corrected},
                {"erroneous", r.erroneous ? json(*r.erroneous) : json("undefined (division by zero)")},
                {"dense", r.dense},
                {"agree_corrected_dense", r.agree_corrected_dense},
                {"agree_erroneous_dense", r.agree_erroneous_dense}};
}

json report_json(const FsCheckReport& r) {
    json rows = json::array();
    for (const EinsteinReport& e : r.reports) {
        json point = json::array();
        for (const auto& z : e.point.z) point.push_back(format_scalar(z));
        rows.push_back(json{{"point", point},
                            {"fd_step", e.fd_step},
                            {"max_abs_deviation", e.max_abs_deviation},
                            {"estimated_constant", e.estimated_constant}});
    }
    return json{{"schema", kSchemaVersion},
                {"command", "fscheck"},
                {"n", r.n},
                {"points", r.points},
                {"step", r.step},
                {"seed", r.seed},
                {"expected_constant", r.expected_constant},
                {"threshold", r.threshold},
                {"reports", rows},
                {"pass", r.pass}};
}

json report_json(const BenchReport& r) {
    json rows = json::array();
    for (const BenchResult& b : r.results)
        rows.push_back(json{{"n", b.n},
                            {"structured_seconds", b.structured_seconds},
                            {"dense_seconds", b.dense_seconds},
                            {"speedup", b.speedup},
                            {"structured_sign", b.structured.sign},
                            {"structured_logdet", b.structured.log_abs},
                            {"dense_sign", b.dense.sign},
                            {"dense_logdet", b.dense.log_abs}});
    return json{{"schema", kSchemaVersion},
                {"command", "bench"},
                {"seed", r.seed},
                {"repeats", r.repeats},
                {"results", rows},
                {"checksum", r.checksum}};
}

void render_pretty(const VerifyReport& r, std::ostream& os) {
    os << "verify: " << r.trials << " trials, kind " << r.kind << ", n <= " << r.max_n << " -> "
       << r.mismatches << " mismatches\n";
    os << "paths:";
    for (const auto& [path, count] : r.paths_used) os << " " << path << "=" << count;
    os << "\n";
    if (r.first_mismatch) os << "first mismatching instance:\n" << *r.first_mismatch;
}

void render_pretty(const ErratumReport& r, std::ostream& os) {
    os << "erratum (" << r.kind << ", n=" << r.n << ")\n";
    os << "  corrected formula: " << r.corrected << "\n";
    os << "  misprinted form:   " << (r.erroneous ? *r.erroneous : "undefined (division by zero)")
       << "\n";
    os << "  dense determinant: " << r.dense << "\n";
    os << "  corrected " << (r.agree_corrected_dense ? "==" : "!=") << " dense, misprinted "
       << (r.agree_erroneous_dense ? "==" : "!=") << " dense\n";
}

void render_pretty(const FsCheckReport& r, std::ostream& os) {
    os << "fscheck: n=" << r.n << ", " << r.points << " points, step " << r.step << "\n";
    for (const EinsteinReport& e : r.reports)
        os << "  constant " << e.estimated_constant << " (expected " << r.expected_constant
           << "), max deviation " << e.max_abs_deviation << "\n";
    os << (r.pass ? "PASS" : "FAIL") << " (threshold " << r.threshold << ")\n";
}

void render_pretty(const BenchReport& r, std::ostream& os) {
    os << "bench: " << r.repeats << " repeats per size\n";
    for (const BenchResult& b : r.results)
        os << "  n=" << b.n << ": structured " << b.structured_seconds << " s, dense "
           << b.dense_seconds << " s, speedup " << b.speedup << "x\n";
}

}  // namespace rank1det
