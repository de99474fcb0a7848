/// @file report.hpp
/// @brief Typed run reports with lossless JSON round-tripping.
///
/// Reports are plain data: the echoed configuration, a list of named check
/// verdicts (with optional residuals for float-side checks), a
/// command-specific JSON payload, and wall-clock timing.  Rational scalars
/// serialize as canonical "p/q" strings, complex scalars as {re, im}
/// objects, so parse(emit(report)) == report exactly.

#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/matrix.hpp"
#include "cherednik/rational.hpp"
#include "cherednik/scalars.hpp"

namespace cherednik {

/// Parsed command-line configuration, echoed into every report.
struct RunConfig {
    std::string command;
    int n = 0;
    std::vector<std::string> c;  ///< canonical scalar strings
    std::vector<std::string> t;  ///< canonical rational strings
    std::string mode = "exact";  ///< "exact" or "float"
    long max_degree = 0;
    double tol = 1e-8;
    unsigned long long seed = 0;
    bool json = false;
    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// One named verification and its verdict.  For informational entries the
/// verdict is reported but does not gate the exit code.
struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
    std::optional<double> residual;
    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Full result of one CLI run.
struct Report {
    RunConfig config;
    std::vector<CheckResult> checks;
    nlohmann::json data = nlohmann::json::object();  ///< command-specific payload
    double elapsed_seconds = 0.0;
    bool pass = false;  ///< verdict backing the exit code
    friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);
void to_json(nlohmann::json& j, const CheckResult& c);
void from_json(const nlohmann::json& j, CheckResult& c);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

/// Equality up to wall-clock timing, for determinism checks.
bool report_equals_ignoring_time(const Report& a, const Report& b);

/// Scalar and matrix payload helpers.
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const ComplexF& z);
ComplexF complex_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Mat<Rational>& m);
nlohmann::json matrix_to_json(const Mat<ComplexF>& m);

}  // namespace cherednik
