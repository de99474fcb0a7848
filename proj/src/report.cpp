/// @file report.cpp
/// @brief JSON serialization of run reports.

#include "cherednik/report.hpp"

namespace cherednik {

void to_json(nlohmann::json& j, const RunConfig& c) {
    j = nlohmann::json{{"command", c.command},
                       {"n", c.n},
                       {"c", c.c},
                       {"t", c.t},
                       {"mode", c.mode},
                       {"max_degree", c.max_degree},
                       {"tol", c.tol},
                       {"seed", c.seed},
                       {"json", c.json}};
}

void from_json(const nlohmann::json& j, RunConfig& c) {
    j.at("command").get_to(c.command);
    j.at("n").get_to(c.n);
    j.at("c").get_to(c.c);
    j.at("t").get_to(c.t);
    j.at("mode").get_to(c.mode);
    j.at("max_degree").get_to(c.max_degree);
    j.at("tol").get_to(c.tol);
    j.at("seed").get_to(c.seed);
    j.at("json").get_to(c.json);
}

void to_json(nlohmann::json& j, const CheckResult& c) {
    j = nlohmann::json{{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}};
    if (c.residual) j["residual"] = *c.residual;
}

void from_json(const nlohmann::json& j, CheckResult& c) {
    j.at("id").get_to(c.id);
    j.at("pass").get_to(c.pass);
    j.at("detail").get_to(c.detail);
    if (j.contains("residual")) {
        c.residual = j.at("residual").get<double>();
    } else {
        c.residual.reset();
    }
}

void to_json(nlohmann::json& j, const Report& r) {
    j = nlohmann::json{{"config", r.config},
                       {"checks", r.checks},
                       {"data", r.data},
                       {"elapsed_seconds", r.elapsed_seconds},
                       {"pass", r.pass}};
}

void from_json(const nlohmann::json& j, Report& r) {
    j.at("config").get_to(r.config);
    j.at("checks").get_to(r.checks);
    r.data = j.at("data");
    j.at("elapsed_seconds").get_to(r.elapsed_seconds);
    j.at("pass").get_to(r.pass);
}

bool report_equals_ignoring_time(const Report& a, const Report& b) {
    Report a2 = a;
    Report b2 = b;
    a2.elapsed_seconds = 0.0;
    b2.elapsed_seconds = 0.0;
    return a2 == b2;
}

nlohmann::json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const nlohmann::json& j) {
    return Rational::parse(j.get<std::string>());
}

nlohmann::json complex_to_json(const ComplexF& z) {
    return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

ComplexF complex_from_json(const nlohmann::json& j) {
    return ComplexF(j.at("re").get<double>(), j.at("im").get<double>());
}

nlohmann::json matrix_to_json(const Mat<Rational>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json matrix_to_json(const Mat<ComplexF>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace cherednik
