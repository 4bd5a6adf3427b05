#pragma once

#include <cstdint>
#include <string>

#include "rkato/report.hpp"

namespace rkato {

// Options shared by the three check suites. Tolerances are the pinned
// defaults; `tol_algebra` guards exact linear algebra, `tol_eigen` sampled
// eigenvalue/equivariance checks, `tol_sweep` grid sweeps of analytic fields.
struct SuiteOptions {
    int n_max = 4;             // riemannian dimensions 1..n_max (capped at 10 / 6)
    bool include_complex = true;
    int n_max_complex = 2;     // bidegree dimensions 1..n_max_complex (capped at 6)
    std::uint64_t seed = 42;
    double tol_algebra = 1e-12;
    double tol_eigen = 1e-10;
    double tol_sweep = 1e-9;
    double perturb = 0.0;      // verify: corrupt entry (0,0) of each constructed map
    int equivariance_samples = 25;
    int ellipticity_samples = 8;
    bool spot_check = true;    // verify: include the large off-grid bidegree config
    std::string catalog_path;  // fields: empty = built-in catalog
    std::string catalog_text;  // fields: overrides catalog_path when nonempty
    int grid_points = 0;       // fields: override per-entry points per axis
    double grid_box = 0.0;     // fields: override per-entry box half width
};

// Closed-form constants vs sampled ellipticity minima, duality symmetry, and
// the bidegree-vs-riemannian comparisons.
Report run_constants(const SuiteOptions& opt);

// Structural identities: expansion identities, theta isometries and sections,
// image orthogonality, complement/coisometry identities, Cartan splits,
// symbol-complex exactness, rescaling uniqueness scans, the cross-family
// overlap obstruction, and group equivariance of symbols and intertwiners.
Report run_verify(const SuiteOptions& opt);

// Analytic field catalog: harmonicity, classical and refined ratio bounds,
// attainment, equality-case residuals, derivative cross-checks, duality
// transport, and the direct-sum bound.
Report run_fields(const SuiteOptions& opt);

}  // namespace rkato
