// Table emission: one fixed row schema, CSV (RFC-4180 quoting, '.' decimal,
// 17 significant digits) or JSON lines.
#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace filmdecay::cli {

struct OutputRow {
    double swept = 0.0;
    double kz = 0.0;
    double kH = 0.0;
    double integral_par = 0.0;
    double integral_perp = 0.0;
    double gamma0 = 0.0;
    double slab_correction = 0.0;
    double n_th = 0.0;
    double total = 0.0;
    double rate_ratio = 0.0;
    double quad_error = 0.0;
    std::vector<std::string> regime_flags;

    // Bookkeeping for exit codes; not serialized (failures and non-converged
    // quadrature are visible in regime_flags).
    bool converged = true;
    bool failed = false;
};

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string& name);

// %.17g with the C locale's '.' decimal point; inf/nan spelled literally.
std::string format_double(double x);

// RFC-4180: quote when the field contains a comma, quote, or newline;
// embedded quotes doubled.
std::string csv_field(const std::string& raw);

std::string row_header_csv();
std::string row_csv(const OutputRow& row);
std::string row_json(const OutputRow& row);

// Header (CSV only) + rows, '\n' line endings.
void write_rows(std::FILE* out, OutputFormat fmt, const std::vector<OutputRow>& rows);

} // namespace filmdecay::cli
