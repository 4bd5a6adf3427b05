#pragma once

#include <vector>

#include "rkato/exterior.hpp"
#include "rkato/spaces.hpp"

namespace rkato {

// Which source/target bundle pair an operator or constant refers to:
// Lambda^k over R^n, or Lambda^{p,q} over C^n.
struct SpaceConfig {
    bool kahler = false;
    int n = 0;
    int k = 0;     // riemannian degree
    int p = 0, q = 0;  // bidegree

    static SpaceConfig riemannian(int n, int k);
    static SpaceConfig bidegree(int n, int p, int q);
    FiberSpace fiber() const;
    CotangentKind cotangent() const { return kahler ? CotangentKind::cplx : CotangentKind::real; }
    int ambient_real_dim() const { return kahler ? 2 * n : n; }
    std::string name() const;
};

// First-order operators whose symbols we manipulate. d/d_star act on
// Lambda^k R^n; the other four act on Lambda^{p,q}.
enum class DiffOp { d, d_star, del, delbar, del_star, delbar_star };

std::string diffop_name(DiffOp op);

struct OperatorKind {
    DiffOp op;
    SpaceConfig config;
};

struct LinearMap {
    VectorSpace domain, codomain;
    Mat m;

    LinearMap() = default;
    LinearMap(VectorSpace dom, VectorSpace cod, Mat mat);
};

LinearMap lm_compose(const LinearMap& a, const LinearMap& b);  // a after b
LinearMap lm_adjoint(const LinearMap& a);
LinearMap lm_scale(cd s, const LinearMap& a);

// Degree shift of each operator on its source fiber (+1 raises).
int diffop_degree_shift(DiffOp op);

// The symbol at a real covector xi (length n, or 2n for bidegree configs),
// as a fiber -> fiber map: i xi ^ . for d, -i contraction for d_star, and the
// bidegree-part analogues. An out-of-range target degree is an error.
LinearMap symbol(const OperatorKind& kind, const RVec& xi);

// The xi-independent flattening of the same symbol: cotangent (x) fiber ->
// target fiber, sending slot c (x) omega to the slot-c term of the symbol.
// symbol(kind, xi) equals the contraction of this against the slot
// coefficients of xi ((1,0)/(0,1) parts for bidegree configs).
LinearMap symbol_flat(const OperatorKind& kind);

// Slot coefficient vector of a real covector for a config: xi itself
// (riemannian) or [holo; antiholo] of its bidegree split.
Vec slot_coefficients(const SpaceConfig& config, const RVec& xi);

// Canonical rescaling 1/sqrt(multiplicity) that makes c * symbol_flat a
// coisometry (and its adjoint the isometric intertwiner below).
double canonical_scale(const OperatorKind& kind);

// Isometric intertwiners embedding a target fiber into cotangent (x) fiber:
// theta = (-i * canonical_scale * symbol_flat)^adjoint.
// theta1: Lambda^{k+1} -> R^n (x) Lambda^k (wedge leg, scale 1/sqrt(k+1)).
LinearMap theta1(int n, int k);
// theta2: Lambda^{k-1} -> R^n (x) Lambda^k (contraction leg, 1/sqrt(n-k+1)).
LinearMap theta2(int n, int k);
// Bidegree analogues for del / delbar / del_star / delbar_star.
LinearMap theta_kahler(DiffOp which, int n, int p, int q);

// Which pair of legs a projection or rescaled operator uses.
enum class OperatorFamily { hodge, dolbeault_1, dolbeault_2 };

std::string family_name(OperatorFamily f);

// (Pi, Pi_perp) for a config and family. Pi stacks the adjoints of the two
// theta legs (raising target block first); a leg whose target degree would
// leave [0, n] is dropped. Pi_perp maps onto an orthonormal basis of the
// complement of the combined theta image, so Pi^* Pi + Pi_perp^* Pi_perp = id.
struct ProjectionPair {
    LinearMap pi;
    LinearMap pi_perp;
    bool has_raising = false;
    bool has_lowering = false;
};

ProjectionPair projection_pair(const SpaceConfig& config, OperatorFamily family);

// Exhaustive check of the two expansion identities behind adjointness:
//   (a) <xi ^ omega, e_I> = sum_m (-1)^(m-1) <xi, e_{i_m}> <omega, e_{I \ i_m}>
//   (b) <contract(xi, omega), e_T> = sum_i <xi, e_i> <omega, e_i ^ e_T>
// over all basis covectors xi and basis blades I/T, with random (complex)
// omega. (b) is skipped for k = 0 (no contraction on scalars).
struct IdentityReport {
    double max_residual_a = 0.0;
    double max_residual_b = 0.0;
    bool b_skipped = false;
    long cases_a = 0;
    long cases_b = 0;
};

IdentityReport verify_linalg_identities(int n, int k, std::uint64_t seed = 42);

// Coisometry scan: which moduli c make (c * symbol_flat)(c * symbol_flat)^*
// the identity on the target fiber. Rescalings of a first-order leg with this
// property are exactly |c| = canonical_scale.
struct UniquenessReport {
    std::vector<double> passing;   // the candidates that pass (as given)
    double canonical = 0.0;        // 1/sqrt(multiplicity)
    double worst_pass_gap = 0.0;   // max |abs(candidate) - canonical| over passing
    bool canonical_passes = false;
    bool exact_match = false;      // canonical passes and no stray candidate does
};

UniquenessReport uniqueness_scan(const OperatorKind& kind,
                                 const std::vector<double>& candidates,
                                 double tol = 1e-10);

// Largest singular value of the pairing between the images of two maps into
// the same codomain (0 = orthogonal images, 1 = nested/equal). Zero maps are
// an error.
double image_overlap(const LinearMap& a, const LinearMap& b);

}  // namespace rkato
