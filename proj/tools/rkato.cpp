// Command-line front end over the C API: runs one suite, prints the report,
// and exits 0 (all checks pass), 1 (some check failed), or 2 (bad usage or a
// run-time error).
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "refinedkato.h"

namespace {

struct RunDeleter {
    void operator()(rk_run* r) const { rk_run_free(r); }
};
using RunPtr = std::unique_ptr<rk_run, RunDeleter>;

struct CommonOpts {
    int n_max = 4;
    bool no_complex = false;
    int n_max_complex = 2;
    unsigned long long seed = 42;
    double tol_algebra = 0.0;  // 0 keeps the library default
    double tol_eigen = 0.0;
    double tol_sweep = 0.0;
    std::string out_path;
    std::string out_format = "json";
    std::string print_format = "md";
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--seed", c.seed, "random seed for sampled checks");
    cmd->add_option("--tol-algebra", c.tol_algebra, "tolerance for exact-algebra residuals");
    cmd->add_option("--tol-eigen", c.tol_eigen, "tolerance for eigenvalue/sampled residuals");
    cmd->add_option("--tol-sweep", c.tol_sweep, "tolerance for grid-sweep comparisons");
    cmd->add_option("--out", c.out_path, "write the report to this file");
    cmd->add_option("--format", c.out_format, "file format: json|csv|md")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    cmd->add_option("--print", c.print_format, "stdout format: json|csv|md")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    cmd->add_flag("--quiet", c.quiet, "suppress the stdout report");
}

void add_range(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--n-max", c.n_max, "largest real dimension to cover");
    cmd->add_flag("--no-complex", c.no_complex, "skip the bidegree configurations");
    cmd->add_option("--n-max-complex", c.n_max_complex, "largest complex dimension to cover");
}

int die(rk_run* run, const char* what) {
    std::fprintf(stderr, "rkato: %s: %s\n", what, rk_last_error(run));
    return 2;
}

int apply_common(rk_run* run, const CommonOpts& c) {
    if (rk_set_seed(run, c.seed) != RK_OK) return die(run, "seed");
    if (c.tol_algebra > 0.0 && rk_set_tolerance(run, "algebra", c.tol_algebra) != RK_OK)
        return die(run, "tolerance");
    if (c.tol_eigen > 0.0 && rk_set_tolerance(run, "eigen", c.tol_eigen) != RK_OK)
        return die(run, "tolerance");
    if (c.tol_sweep > 0.0 && rk_set_tolerance(run, "sweep", c.tol_sweep) != RK_OK)
        return die(run, "tolerance");
    return 0;
}

int apply_range(rk_run* run, const CommonOpts& c) {
    if (rk_set_n_max(run, c.n_max) != RK_OK) return die(run, "n-max");
    if (rk_set_complex(run, c.no_complex ? 0 : 1, c.n_max_complex) != RK_OK)
        return die(run, "complex range");
    return 0;
}

int finish(rk_run* run, const CommonOpts& c) {
    if (!c.quiet) {
        const char* text = rk_report(run, c.print_format.c_str());
        if (!text) return die(run, "render");
        std::fputs(text, stdout);
    }
    if (!c.out_path.empty() &&
        rk_report_write(run, c.out_format.c_str(), c.out_path.c_str()) != RK_OK)
        return die(run, "write report");
    long failed = rk_failed(run);
    std::fprintf(stderr, "rkato: %ld passed, %ld failed\n", rk_passed(run), failed);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"refined Kato constants: tables, operator checks, field sweeps"};
    app.require_subcommand(1);

    CommonOpts copt;
    int ell_samples = 0;
    CLI::App* constants = app.add_subcommand("constants", "closed-form constants table");
    add_range(constants, copt);
    add_common(constants, copt);
    constants->add_option("--samples", ell_samples, "covector samples per ellipticity row");

    CommonOpts vopt;
    double perturb = 0.0;
    int eq_samples = 0;
    bool no_spot = false;
    CLI::App* verify = app.add_subcommand("verify", "operator and intertwiner identity checks");
    add_range(verify, vopt);
    add_common(verify, vopt);
    verify->add_option("--perturb", perturb,
                       "corrupt one entry of every constructed map by this amount");
    verify->add_option("--samples", eq_samples, "group elements per equivariance check");
    verify->add_flag("--no-spot", no_spot, "skip the large spot-check configuration");

    CommonOpts fopt;
    std::string catalog;
    int grid_points = 0;
    double grid_box = 0.0;
    CLI::App* fields = app.add_subcommand("fields", "grid sweeps over the field catalog");
    add_common(fields, fopt);
    fields->add_option("--catalog", catalog, "field catalog file (default: built-in catalog)")
        ->check(CLI::ExistingFile);
    fields->add_option("--grid", grid_points, "points per axis for every entry");
    fields->add_option("--box", grid_box, "half-width of the sweep box for every entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    RunPtr run(rk_run_new());
    if (!run) {
        std::fprintf(stderr, "rkato: out of memory\n");
        return 2;
    }

    if (constants->parsed()) {
        if (int rc = apply_common(run.get(), copt)) return rc;
        if (int rc = apply_range(run.get(), copt)) return rc;
        if (ell_samples > 0 && rk_set_samples(run.get(), "ellipticity", ell_samples) != RK_OK)
            return die(run.get(), "samples");
        if (rk_run_constants(run.get()) != RK_OK) return die(run.get(), "constants suite");
        return finish(run.get(), copt);
    }
    if (verify->parsed()) {
        if (int rc = apply_common(run.get(), vopt)) return rc;
        if (int rc = apply_range(run.get(), vopt)) return rc;
        if (rk_set_perturb(run.get(), perturb) != RK_OK) return die(run.get(), "perturb");
        if (eq_samples > 0 && rk_set_samples(run.get(), "equivariance", eq_samples) != RK_OK)
            return die(run.get(), "samples");
        if (no_spot && rk_set_spot_check(run.get(), 0) != RK_OK) return die(run.get(), "spot");
        if (rk_run_verify(run.get()) != RK_OK) return die(run.get(), "verify suite");
        return finish(run.get(), vopt);
    }
    if (int rc = apply_common(run.get(), fopt)) return rc;
    if (!catalog.empty() && rk_set_catalog_path(run.get(), catalog.c_str()) != RK_OK)
        return die(run.get(), "catalog");
    if (rk_set_grid(run.get(), grid_points, grid_box) != RK_OK) return die(run.get(), "grid");
    if (rk_run_fields(run.get()) != RK_OK) return die(run.get(), "fields suite");
    return finish(run.get(), fopt);
}
