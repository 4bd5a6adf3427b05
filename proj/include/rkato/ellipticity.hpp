#pragma once

#include <optional>

#include "rkato/steinweiss.hpp"

namespace rkato {

// Symbol of L^*L at a unit real covector for the rescaled two-leg operator of
// a family: sum over present legs of weight * sigma^* sigma, with weights
// 1/(k+1), 1/(n-k+1) (hodge) resp. the (p,*)/(q,*) analogues. Self-adjoint
// positive semidefinite on the fiber; |xi| must be 1 within 1e-12.
Mat symbol_LstarL(const SpaceConfig& config, OperatorFamily family, const RVec& xi);

// Smallest symbol eigenvalue over sampled unit covectors, against the closed
// form. xi_spread tracks how much the minimum moved across samples (it is a
// constant in xi; this is a consistency diagnostic).
struct EllipticityResult {
    double closed_form = 0.0;
    double numeric = 0.0;
    double residual = 0.0;
    double xi_spread = 0.0;
    int n_samples = 0;
};

double epsilon_closed(const SpaceConfig& config, OperatorFamily family);

EllipticityResult ellipticity_constant(const SpaceConfig& config, OperatorFamily family,
                                       int n_samples, std::uint64_t seed);

// Max L-infinity distance between sorted full spectra across sampled xi
// (the spectrum should not depend on the direction at all).
double ellipticity_spectrum_spread(const SpaceConfig& config, OperatorFamily family,
                                   int n_samples, std::uint64_t seed);

// Closed-form refined constants.
// Riemannian, 1 <= k <= n-1: alpha = sqrt((n-k)/(n-k+1)) for k <= n/2,
// sqrt(k/(k+1)) otherwise (the two branches agree at k = n/2).
double riemannian_alpha_closed(int n, int k);
// Bidegree: 1/2 when p or q is extremal, otherwise
// min over the two families of max{(2p+1)/(2p+2), (2(n-p)+1)/(2(n-p)+2)}.
double bidegree_alpha_sq_closed(int n, int p, int q);

// The refined constant for one config. Extremal riemannian degrees
// (k in {0, n}) are the distinguished parallel case: harmonic fields there
// are parallel and no ratio bound is reported.
struct KatoConstant {
    SpaceConfig config;
    bool parallel = false;
    double epsilon = 0.0;  // the ellipticity constant the bound comes from
    double alpha = 0.0;
    double alpha_sq = 0.0;
    // Bidegree extras: the two per-family constants, the riemannian constant
    // of the underlying real degree p+q in dimension 2n (absent when that
    // degree is extremal, i.e. parallel), and the min of the applicable bounds.
    std::optional<double> alpha_sq_family1, alpha_sq_family2;
    std::optional<double> riemannian_alpha_sq;
    std::optional<double> min_alpha_sq;
};

KatoConstant kato_constant(const SpaceConfig& config);

// Constant for a direct sum of configs: the max of the component constants
// (a component with the parallel flag contributes 0); parallel only when
// every component is parallel.
KatoConstant direct_sum_constant(const std::vector<SpaceConfig>& configs);

// One table row: closed forms plus the sampled numeric ellipticity constant.
// For bidegree rows `epsilon` fields describe the binding (max) family.
struct ConstantsRow {
    SpaceConfig config;
    bool parallel = false;
    double eps_closed = 0.0;
    double eps_numeric = 0.0;
    double eps_residual = 0.0;
    double xi_spread = 0.0;
    double alpha = 0.0;
    double alpha_sq = 0.0;
    std::optional<double> alpha_sq_family1, alpha_sq_family2;
    std::optional<double> riemannian_alpha_sq;
    std::optional<double> min_alpha_sq;
};

// All riemannian rows (n <= n_max_real, 0 <= k <= n) and, when requested,
// all bidegree rows (n <= n_max_complex, 0 <= p,q <= n). Size caps: 10 / 6.
std::vector<ConstantsRow> constants_table(int n_max_real, bool include_complex,
                                          int n_max_complex, int n_samples,
                                          std::uint64_t seed);

}  // namespace rkato
