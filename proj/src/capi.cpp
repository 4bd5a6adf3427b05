#include "refinedkato.h"

#include <chrono>
#include <fstream>
#include <new>
#include <optional>
#include <string>

#include "rkato/report.hpp"
#include "rkato/suites.hpp"

struct rk_run {
    rkato::SuiteOptions opt;
    std::optional<rkato::Report> report;
    double wall_seconds = 0.0;
    std::string last_error;
    std::string rendered;
};

namespace {

rk_status fail_arg(rk_run* run, const std::string& msg) {
    if (run) run->last_error = msg;
    return RK_ERR_INVALID_ARGUMENT;
}

template <typename F>
rk_status guarded(rk_run* run, F&& body) {
    if (!run) return RK_ERR_INVALID_ARGUMENT;
    try {
        run->last_error.clear();
        return body();
    } catch (const std::exception& e) {
        run->last_error = e.what();
        return RK_ERR_INTERNAL;
    } catch (...) {
        run->last_error = "unknown error";
        return RK_ERR_INTERNAL;
    }
}

template <typename Suite>
rk_status execute(rk_run* run, Suite&& suite) {
    return guarded(run, [&]() -> rk_status {
        auto t0 = std::chrono::steady_clock::now();
        rkato::Report rep = suite(run->opt);
        auto t1 = std::chrono::steady_clock::now();
        run->wall_seconds = std::chrono::duration<double>(t1 - t0).count();
        run->report = std::move(rep);
        return RK_OK;
    });
}

rk_status render(rk_run* run, const std::string& format, std::string& out) {
    if (!run->report) {
        run->last_error = "no suite has been executed on this handle";
        return RK_ERR_NO_REPORT;
    }
    if (format == "json")
        out = run->report->to_json();
    else if (format == "csv")
        out = run->report->to_csv();
    else if (format == "md")
        out = run->report->to_markdown(run->wall_seconds);
    else {
        run->last_error = "unknown format: " + format + " (expected json, csv, or md)";
        return RK_ERR_INVALID_ARGUMENT;
    }
    return RK_OK;
}

}  // namespace

extern "C" {

const char* rk_version(void) { return rkato::library_version().c_str(); }

rk_run* rk_run_new(void) { return new (std::nothrow) rk_run(); }

void rk_run_free(rk_run* run) { delete run; }

const char* rk_last_error(const rk_run* run) {
    return run ? run->last_error.c_str() : "null handle";
}

rk_status rk_set_n_max(rk_run* run, int n_max) {
    if (!run) return RK_ERR_INVALID_ARGUMENT;
    if (n_max < 1) return fail_arg(run, "n_max must be at least 1");
    run->opt.n_max = n_max;
    return RK_OK;
}

rk_status rk_set_complex(rk_run* run, int include_complex, int n_max_complex) {
    if (!run) return RK_ERR_INVALID_ARGUMENT;
    if (include_complex && n_max_complex < 1)
        return fail_arg(run, "n_max_complex must be at least 1");
    run->opt.include_complex = include_complex != 0;
    if (n_max_complex > 0) run->opt.n_max_complex = n_max_complex;
    return RK_OK;
}

rk_status rk_set_seed(rk_run* run, unsigned long long seed) {
    if (!run) return RK_ERR_INVALID_ARGUMENT;
    run->opt.seed = seed;
    return RK_OK;
}

rk_status rk_set_tolerance(rk_run* run, const char* which, double value) {
    if (!run) return RK_ERR_INVALID_ARGUMENT;
    if (!which) return fail_arg(run, "tolerance name is null");
    if (!(value > 0.0)) return fail_arg(run, "tolerance must be positive");
    std::string w = which;
    if (w == "algebra")
        run->opt.tol_algebra = value;
    else if (w == "eigen")
        run->opt.tol_eigen = value;
    else if (w == "sweep")
        run->opt.tol_sweep = value;
    else
        return fail_arg(run, "unknown tolerance: " + w);
    return RK_OK;
}

rk_status rk_set_perturb(rk_run* run, double epsilon) {
    if (!run) return RK_ERR_INVALID_ARGUMENT;
    run->opt.perturb = epsilon;
    return RK_OK;
}

rk_status rk_set_samples(rk_run* run, const char* which, int count) {
    if (!run) return RK_ERR_INVALID_ARGUMENT;
    if (!which) return fail_arg(run, "sample name is null");
    if (count < 1) return fail_arg(run, "sample count must be at least 1");
    std::string w = which;
    if (w == "equivariance")
        run->opt.equivariance_samples = count;
    else if (w == "ellipticity")
        run->opt.ellipticity_samples = count;
    else
        return fail_arg(run, "unknown sample kind: " + w);
    return RK_OK;
}

rk_status rk_set_spot_check(rk_run* run, int enabled) {
    if (!run) return RK_ERR_INVALID_ARGUMENT;
    run->opt.spot_check = enabled != 0;
    return RK_OK;
}

rk_status rk_set_catalog_path(rk_run* run, const char* path) {
    if (!run) return RK_ERR_INVALID_ARGUMENT;
    run->opt.catalog_path = path ? path : "";
    return RK_OK;
}

rk_status rk_set_catalog_text(rk_run* run, const char* text) {
    if (!run) return RK_ERR_INVALID_ARGUMENT;
    run->opt.catalog_text = text ? text : "";
    return RK_OK;
}

rk_status rk_set_grid(rk_run* run, int points_per_axis, double half_width) {
    if (!run) return RK_ERR_INVALID_ARGUMENT;
    if (points_per_axis < 0) return fail_arg(run, "grid points must be non-negative");
    if (half_width < 0.0) return fail_arg(run, "grid half-width must be non-negative");
    run->opt.grid_points = points_per_axis;
    run->opt.grid_box = half_width;
    return RK_OK;
}

rk_status rk_run_constants(rk_run* run) { return execute(run, rkato::run_constants); }

rk_status rk_run_verify(rk_run* run) { return execute(run, rkato::run_verify); }

rk_status rk_run_fields(rk_run* run) { return execute(run, rkato::run_fields); }

long rk_passed(const rk_run* run) {
    return (run && run->report) ? run->report->summary.passed : -1;
}

long rk_failed(const rk_run* run) {
    return (run && run->report) ? run->report->summary.failed : -1;
}

long rk_undefined_points(const rk_run* run) {
    return (run && run->report) ? run->report->undefined_points : -1;
}

const char* rk_report(rk_run* run, const char* format) {
    if (!run) return nullptr;
    std::string out;
    rk_status st = guarded(run, [&]() { return render(run, format ? format : "json", out); });
    if (st != RK_OK) return nullptr;
    run->rendered = std::move(out);
    return run->rendered.c_str();
}

rk_status rk_report_write(rk_run* run, const char* format, const char* path) {
    if (!run) return RK_ERR_INVALID_ARGUMENT;
    if (!path) return fail_arg(run, "output path is null");
    return guarded(run, [&]() -> rk_status {
        std::string out;
        rk_status st = render(run, format ? format : "json", out);
        if (st != RK_OK) return st;
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            run->last_error = std::string("cannot open for writing: ") + path;
            return RK_ERR_IO;
        }
        f << out;
        f.close();
        if (!f) {
            run->last_error = std::string("write failed: ") + path;
            return RK_ERR_IO;
        }
        return RK_OK;
    });
}

}  // extern "C"
