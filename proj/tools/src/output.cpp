#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace filmdecay::cli {

namespace {

const char* const kColumns[] = {
    "swept",         "kz",    "kH",    "integral_par", "integral_perp", "gamma0",
    "slab_correction", "n_th", "total", "rate_ratio",   "quad_error",    "regime_flags",
};

std::string join_flags(const std::vector<std::string>& flags) {
    std::string s;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (i) s += "; ";
        s += flags[i];
    }
    return s;
}

// JSON has no inf/nan literals; spell them as strings so rows stay parseable.
nlohmann::ordered_json json_number(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

} // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("--format must be csv or json, got '" + name + "'");
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string row_header_csv() {
    std::string s;
    for (std::size_t i = 0; i < std::size(kColumns); ++i) {
        if (i) s += ',';
        s += kColumns[i];
    }
    return s;
}

std::string row_csv(const OutputRow& r) {
    const double nums[] = {r.swept,  r.kz,    r.kH,         r.integral_par,
                           r.integral_perp, r.gamma0, r.slab_correction, r.n_th,
                           r.total,  r.rate_ratio, r.quad_error};
    std::string s;
    for (double x : nums) {
        s += format_double(x);
        s += ',';
    }
    s += csv_field(join_flags(r.regime_flags));
    return s;
}

std::string row_json(const OutputRow& r) {
    nlohmann::ordered_json j;
    j["swept"] = json_number(r.swept);
    j["kz"] = json_number(r.kz);
    j["kH"] = json_number(r.kH);
    j["integral_par"] = json_number(r.integral_par);
    j["integral_perp"] = json_number(r.integral_perp);
    j["gamma0"] = json_number(r.gamma0);
    j["slab_correction"] = json_number(r.slab_correction);
    j["n_th"] = json_number(r.n_th);
    j["total"] = json_number(r.total);
    j["rate_ratio"] = json_number(r.rate_ratio);
    j["quad_error"] = json_number(r.quad_error);
    j["regime_flags"] = r.regime_flags;
    return j.dump();
}

void write_rows(std::FILE* out, OutputFormat fmt, const std::vector<OutputRow>& rows) {
    if (fmt == OutputFormat::Csv) std::fprintf(out, "%s\n", row_header_csv().c_str());
    for (const OutputRow& r : rows) {
        const std::string line = fmt == OutputFormat::Csv ? row_csv(r) : row_json(r);
        std::fprintf(out, "%s\n", line.c_str());
    }
}

} // namespace filmdecay::cli
