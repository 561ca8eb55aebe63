#include "commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include <filmdecay/limits.hpp>

namespace filmdecay::cli {

namespace {

constexpr double quiet_nan = std::numeric_limits<double>::quiet_NaN();

OutputRow error_row(double swept, const std::string& what) {
    OutputRow row;
    row.swept = swept;
    row.kz = row.kH = quiet_nan;
    row.integral_par = row.integral_perp = quiet_nan;
    row.gamma0 = row.slab_correction = row.n_th = row.total = quiet_nan;
    row.rate_ratio = row.quad_error = quiet_nan;
    row.regime_flags = {"error: " + what};
    row.converged = false;
    row.failed = true;
    return row;
}

struct FileGuard {
    std::FILE* f = nullptr;
    bool owned = false;
    explicit FileGuard(const std::string& path) {
        if (path == "-" || path.empty()) {
            f = stdout;
        } else {
            f = std::fopen(path.c_str(), "wb");
            if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
            owned = true;
        }
    }
    ~FileGuard() {
        if (owned) std::fclose(f);
    }
};

int exit_code_for(const std::vector<OutputRow>& rows) {
    bool any_failed = false, any_diverged = false;
    for (const OutputRow& r : rows) {
        any_failed |= r.failed;
        any_diverged |= !r.converged;
    }
    if (any_failed) return 1;
    return any_diverged ? 2 : 0;
}

} // namespace

unsigned worker_count(std::size_t rows) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("FILMDECAY_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 1024) n = static_cast<unsigned>(v);
    }
    if (rows < n) n = static_cast<unsigned>(rows);
    return n > 0 ? n : 1;
}

std::vector<double> sweep_grid(double start, double stop, int points, const std::string& spacing) {
    if (points < 2) throw std::invalid_argument("--points must be >= 2");
    if (!(start < stop)) throw std::invalid_argument("--start must be < --stop");
    const bool log = spacing == "log";
    if (!log && spacing != "linear")
        throw std::invalid_argument("--spacing must be linear or log, got '" + spacing + "'");
    if (log && !(start > 0.0)) throw std::invalid_argument("log spacing requires --start > 0");
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double a = log ? std::log(start) : start;
    const double b = log ? std::log(stop) : stop;
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        const double v = a + (b - a) * t;
        grid[static_cast<std::size_t>(i)] = log ? std::exp(v) : v;
    }
    // Endpoints exact regardless of spacing arithmetic.
    grid.front() = start;
    grid.back() = stop;
    return grid;
}

std::vector<double> fig2_grid() {
    std::vector<double> g;
    g.reserve(500);
    g.push_back(0.0);
    for (int i = 0; i < 249; ++i) g.push_back(std::pow(10.0, -3.0 + 3.0 * i / 249.0));
    for (int i = 0; i < 250; ++i) g.push_back(1.0 + 9.0 * i / 249.0);
    return g;
}

std::vector<Fig2Row> fig2_rows() {
    const OrientationWeights mixed{0.0, 0.5, 0.5};
    const OrientationWeights perp{0.0, 0.0, 1.0};
    std::vector<Fig2Row> rows;
    rows.reserve(500);
    for (double kz : fig2_grid())
        rows.push_back({kz, pc_ratio(TransitionKind::Magnetic, mixed, kz),
                        pc_ratio(TransitionKind::Magnetic, perp, kz)});
    return rows;
}

int run_rate(const RateOptions& opts) {
    const OutputFormat fmt = parse_format(opts.format);
    const Problem p = build_problem(opts);
    const double swept = p.dimensionless ? p.kz : p.z;
    const OutputRow row = evaluate_row(p, swept);
    write_rows(stdout, fmt, {row});
    return exit_code_for({row});
}

int run_sweep(const SweepOptions& opts) {
    const OutputFormat fmt = parse_format(opts.fixed.format);
    const std::vector<double> grid = sweep_grid(opts.start, opts.stop, opts.points, opts.spacing);

    // The swept axis needs no fixed flag; seed it with the start value so the
    // problem validates, then substitute per row.
    RateOptions fixed = opts.fixed;
    const std::string& axis = opts.axis;
    if (axis == "z") {
        if (!fixed.set.z) fixed.z = opts.start, fixed.set.z = true;
    } else if (axis == "H") {
        if (!fixed.set.H) fixed.H = "0", fixed.set.H = true;
    } else if (axis == "T") {
        if (!fixed.set.temp) fixed.temp = 0.0, fixed.set.temp = true;
    } else if (axis == "omega") {
        if (!fixed.set.freq) fixed.freq = opts.start, fixed.set.freq = true;
    } else if (axis == "kz") {
        if (!fixed.set.kz) fixed.kz = opts.start, fixed.set.kz = true;
    } else {
        throw std::invalid_argument("--axis must be one of z, H, T, omega, kz");
    }
    const Problem base = build_problem(fixed);
    if (axis == "kz" && !base.dimensionless)
        throw std::invalid_argument("axis kz requires --dimensionless");
    if (axis != "kz" && base.dimensionless)
        throw std::invalid_argument("--dimensionless sweeps use axis kz");

    auto eval_at = [&](double v) -> OutputRow {
        Problem p = base;
        if (axis == "z") {
            p.z = v;
        } else if (axis == "H") {
            p.H = v;
        } else if (axis == "T") {
            p.env.T = v;
            p.env.validate();
            if (p.tf_base) {
                TwoFluidState state = *p.tf_base;
                state.T = v;
                state.validate();
                p.model = two_fluid_at_temperature(state);
            }
        } else if (axis == "omega") {
            p.spec = TransitionSpec::from_frequency(v, p.kind);
        } else {
            p.kz = v;
        }
        return evaluate_row(p, v);
    };

    std::vector<OutputRow> rows(grid.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= grid.size()) return;
            try {
                rows[i] = eval_at(grid[i]);
            } catch (const std::exception& e) {
                rows[i] = error_row(grid[i], e.what());
            }
        }
    };
    const unsigned workers = worker_count(grid.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    FileGuard out(opts.out);
    write_rows(out.f, fmt, rows);
    return exit_code_for(rows);
}

int run_fig2(const Fig2Options& opts) {
    const OutputFormat fmt = parse_format(opts.format);
    FileGuard out(opts.out);
    const std::vector<Fig2Row> rows = fig2_rows();
    if (fmt == OutputFormat::Csv) {
        std::fprintf(out.f, "kz,ratio_mixed,ratio_perp\n");
        for (const Fig2Row& r : rows)
            std::fprintf(out.f, "%s,%s,%s\n", format_double(r.kz).c_str(),
                         format_double(r.ratio_mixed).c_str(),
                         format_double(r.ratio_perp).c_str());
    } else {
        for (const Fig2Row& r : rows)
            std::fprintf(out.f, "{\"kz\":%s,\"ratio_mixed\":%s,\"ratio_perp\":%s}\n",
                         format_double(r.kz).c_str(), format_double(r.ratio_mixed).c_str(),
                         format_double(r.ratio_perp).c_str());
    }
    return 0;
}

} // namespace filmdecay::cli
