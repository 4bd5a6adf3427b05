#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rkato/polynomial.hpp"
#include "rkato/steinweiss.hpp"

namespace rkato {

// Scalar coefficient field on R^d with an exact gradient alongside the value.
struct ScalarFieldR {
    std::function<double(const RVec&)> value;
    std::function<RVec(const RVec&)> grad;
};

ScalarFieldR field_of(const Polynomial& p);

// Sampling lattice: [-half_width, half_width]^d plus optional seeded points.
struct GridSpec {
    double half_width = 2.0;
    int points_per_axis = 0;  // 0 -> default for the dimension
    int jitter_points = 0;
    std::uint64_t seed = 42;
};

int default_points_per_axis(int dim);
std::vector<RVec> make_grid(int dim, const GridSpec& g);

// Exact Wirtinger data per fiber blade for bidegree-valued fields.
struct KahlerComponents {
    std::vector<CPolynomial> comp;
    std::vector<std::vector<CPolynomial>> dz;     // [blade][j]
    std::vector<std::vector<CPolynomial>> dzbar;  // [blade][j]
};

// A form-valued field on flat space with exact derivatives, plus the catalog
// metadata describing which bound it is expected to meet.
struct FormField {
    std::string name;
    SpaceConfig config = SpaceConfig::riemannian(1, 0);
    OperatorFamily family = OperatorFamily::hodge;
    std::optional<double> expected_alpha;  // absent when the field is expected parallel
    bool parallel_expected = false;
    bool expect_violation = false;
    std::optional<RVec> attain;  // point where the bound should be attained
    GridSpec grid;

    std::vector<ScalarFieldR> rcomp;                  // riemannian backing
    std::shared_ptr<std::vector<Polynomial>> rpoly;   // set when rcomp is polynomial
    std::shared_ptr<KahlerComponents> kcomp;          // bidegree backing

    int ambient_dim() const { return config.ambient_real_dim(); }
    VectorSpace fiber_space() const;
    FormVector eval(const RVec& x) const;
    // Columns are coordinate-direction derivatives of the coefficient vector.
    Mat eval_nabla_coords(const RVec& x) const;
    // Full covariant derivative in the unit-frame tensor layout used by symbols.
    FormVector eval_nabla(const RVec& x) const;
};

FormField gradient_field(std::string name, const Polynomial& potential);
FormField constant_blade_field(std::string name, int n, Mask blade);
// d(e^{a.x} cos(b.x)) with |a| = |b|, a.b = 0; harmonic with ratio 1/sqrt(2).
FormField trig_exp_field(std::string name, const RVec& a, const RVec& b);
// c * z^exps dz_{blade}: a (p,0)-form field, p = |blade|.
FormField holomorphic_field(std::string name, int n, const std::vector<int>& exps,
                            Mask holo_blade);
FormField constant_bidegree_field(std::string name, int n, Mask holo_blade, Mask anti_blade);
// Conjugate of a bidegree field: (p,q) -> (q,p), coefficients conjugated.
FormField conjugate_field(const FormField& f);

// Pointwise first-order pieces; absent entries are degree-edge cases where the
// target space is empty.
struct FieldDerivatives {
    std::optional<FormVector> d, d_star;                           // riemannian
    std::optional<FormVector> del, delbar, del_star, delbar_star;  // bidegree
    double d_norm() const;
    double d_star_norm() const;
};

FieldDerivatives assemble_d_and_dstar(const FormField& f, const RVec& x);
double harmonic_residual_at(const FormField& f, const RVec& x);
double harmonic_residual(const FormField& f);

struct RatioSample {
    bool defined = false;
    double ratio = 0.0;
    double omega_norm = 0.0;
    double nabla_norm = 0.0;
};

// |d|omega|| / |nabla omega|; undefined below 1e-8 of the supplied scales.
RatioSample kato_ratio(const FormField& f, const RVec& x, double omega_scale = 1.0,
                       double nabla_scale = 1.0);

struct SweepResult {
    double max_ratio = 0.0;
    RVec argmax;
    int defined = 0;
    int undefined = 0;
    double omega_scale = 0.0;
    double nabla_scale = 0.0;
    double max_harmonic_residual = 0.0;
};

SweepResult sweep_ratio(const FormField& f);

// Distance of nabla omega from the one-parameter equality family generated by
// the |omega|-gradient direction. Zero exactly at bound-attaining fields.
double equality_residual_riemannian(const FormField& f, const RVec& x);
// Bidegree analogue: least-squares fit of the single-side tensor candidate.
double equality_residual_kahler(const FormField& f, const RVec& x);

// Ratio for the direct sum of two fields over the same ambient space.
RatioSample combined_kato_ratio(const FormField& a, const FormField& b, const RVec& x,
                                double omega_scale = 1.0, double nabla_scale = 1.0);
SweepResult sweep_combined_ratio(const FormField& a, const FormField& b);

struct FiniteDiffReport {
    double residual_coarse = 0.0;
    double residual_fine = 0.0;
    double order = 0.0;  // log2 decay rate of the centered-difference error
    bool exact = false;  // both residuals at rounding level
};

FiniteDiffReport finite_diff_check(const FormField& f, const RVec& x, double h);

// Coefficient transport under the duality pairing, with freshly derived
// gradients so commuting with nabla is a real check.
FormField star_transform(const FormField& f);

struct StarParallelReport {
    double max_commutator = 0.0;
    double max_isometry_dev = 0.0;
};

StarParallelReport hodge_star_parallel_check(const FormField& f);

}  // namespace rkato
