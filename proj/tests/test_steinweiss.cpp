#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rkato/group.hpp"
#include "rkato/steinweiss.hpp"

using namespace rkato;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

RVec axis(int dim, int i) {
    RVec e = RVec::Zero(dim);
    e[i] = 1.0;
    return e;
}

}  // namespace

TEST_CASE("wedge-leg intertwiner on the volume form of R^2") {
    LinearMap t = theta1(2, 1);  // Lambda^2 -> R^2 (x) Lambda^1
    REQUIRE(t.m.rows() == 4);
    REQUIRE(t.m.cols() == 1);
    // theta1(e12) = (e1 (x) e2 - e2 (x) e1)/sqrt(2); layout slot*fdim + fiber.
    CHECK(std::abs(t.m(1, 0) - cd(kInvSqrt2, 0)) < 1e-14);
    CHECK(std::abs(t.m(2, 0) + cd(kInvSqrt2, 0)) < 1e-14);
    CHECK(std::abs(t.m(0, 0)) < 1e-15);
    CHECK(std::abs(t.m(3, 0)) < 1e-15);
}

TEST_CASE("contraction-leg intertwiner on scalars over R^2") {
    LinearMap t = theta2(2, 1);  // Lambda^0 -> R^2 (x) Lambda^1
    // theta2(1) = -(e1 (x) e1 + e2 (x) e2)/sqrt(2).
    CHECK(std::abs(t.m(0, 0) + cd(kInvSqrt2, 0)) < 1e-14);
    CHECK(std::abs(t.m(3, 0) + cd(kInvSqrt2, 0)) < 1e-14);
    CHECK(std::abs(t.m(1, 0)) < 1e-15);
    CHECK(std::abs(t.m(2, 0)) < 1e-15);
}

TEST_CASE("bidegree raising intertwiner at the bottom of C^1") {
    LinearMap t = theta_kahler(DiffOp::del, 1, 0, 0);  // Lambda^{1,0} -> cot (x) C
    REQUIRE(t.m.rows() == 2);
    CHECK(std::abs(t.m(0, 0) - cd(1, 0)) < 1e-14);  // u_1-slot coefficient
    CHECK(std::abs(t.m(1, 0)) < 1e-15);
}

TEST_CASE("intertwiners are isometries with orthogonal images") {
    for (auto [n, k] : {std::pair{3, 1}, {4, 2}, {5, 3}}) {
        LinearMap a = theta1(n, k), b = theta2(n, k);
        CHECK((a.m.adjoint() * a.m - Mat::Identity(a.m.cols(), a.m.cols()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-13);
        CHECK((b.m.adjoint() * b.m - Mat::Identity(b.m.cols(), b.m.cols()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-13);
        CHECK(image_overlap(a, b) < 1e-12);
        CHECK(image_overlap(a, a) == doctest::Approx(1.0));
    }
}

TEST_CASE("projection onto the combined leg image") {
    ProjectionPair pp = projection_pair(SpaceConfig::riemannian(2, 1), OperatorFamily::hodge);
    CHECK(pp.has_raising);
    CHECK(pp.has_lowering);
    // Pi(e1 (x) e1) = (0, -1/sqrt(2)) over Lambda^2 (+) Lambda^0.
    CHECK(std::abs(pp.pi.m(0, 0)) < 1e-14);
    CHECK(std::abs(pp.pi.m(1, 0) + cd(kInvSqrt2, 0)) < 1e-14);
    int td = pp.pi.m.cols();
    Mat comp = pp.pi.m.adjoint() * pp.pi.m + pp.pi_perp.m.adjoint() * pp.pi_perp.m;
    CHECK((comp - Mat::Identity(td, td)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("symbols at axis covectors") {
    LinearMap sd = symbol({DiffOp::d, SpaceConfig::riemannian(2, 1)}, axis(2, 0));
    CHECK(std::abs(sd.m(0, 1) - cd(0, 1)) < 1e-14);  // sigma(d)_{e1} e2 = i e12
    CHECK(std::abs(sd.m(0, 0)) < 1e-15);
    LinearMap sds = symbol({DiffOp::d_star, SpaceConfig::riemannian(2, 2)}, axis(2, 0));
    CHECK(std::abs(sds.m(1, 0) + cd(0, 1)) < 1e-14);  // sigma(d*)_{e1} e12 = -i e2
    CHECK(std::abs(sds.m(0, 0)) < 1e-15);
}

TEST_CASE("bidegree symbol norm halves the covector") {
    LinearMap s = symbol({DiffOp::del, SpaceConfig::bidegree(1, 0, 0)}, axis(2, 0));
    Eigen::JacobiSVD<Mat> svd(s.m);
    CHECK(svd.singularValues()[0] == doctest::Approx(kInvSqrt2));
}

TEST_CASE("flattened symbol contracts to the symbol") {
    SpaceConfig cfg = SpaceConfig::bidegree(2, 1, 1);
    OperatorKind kind{DiffOp::delbar, cfg};
    RVec xi = Rng(3).unit_covector(4);
    LinearMap flat = symbol_flat(kind);
    Vec coef = slot_coefficients(cfg, xi);
    LinearMap s = symbol(kind, xi);
    int fd = s.m.cols();
    Mat contracted = Mat::Zero(s.m.rows(), fd);
    for (int c = 0; c < coef.size(); ++c)
        contracted += coef[c] * flat.m.middleCols(c * fd, fd);
    CHECK((contracted - s.m).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("canonical scales invert the legs") {
    OperatorKind up{DiffOp::d, SpaceConfig::riemannian(3, 1)};
    OperatorKind down{DiffOp::d_star, SpaceConfig::riemannian(3, 1)};
    CHECK(canonical_scale(up) == doctest::Approx(kInvSqrt2));        // 1/sqrt(k+1)
    CHECK(canonical_scale(down) == doctest::Approx(1 / std::sqrt(3.0)));  // 1/sqrt(n-k+1)
    LinearMap flat = symbol_flat(up);
    LinearMap theta = theta1(3, 1);
    Mat sec = (cd(0, -1) * canonical_scale(up)) * (flat.m * theta.m);
    CHECK((sec - Mat::Identity(sec.rows(), sec.cols())).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("expansion identities hold exhaustively") {
    IdentityReport r = verify_linalg_identities(4, 2);
    CHECK(r.max_residual_a < 1e-12);
    CHECK(r.max_residual_b < 1e-12);
    CHECK(!r.b_skipped);
    CHECK(r.cases_a > 0);
}

TEST_CASE("only the canonical modulus rescales a leg to a coisometry") {
    OperatorKind kind{DiffOp::d, SpaceConfig::riemannian(3, 1)};
    double canon = canonical_scale(kind);
    UniquenessReport r = uniqueness_scan(kind, {0.3, canon, 0.9, 1.2});
    REQUIRE(r.passing.size() == 1);
    CHECK(r.passing[0] == doctest::Approx(canon));
    CHECK(r.canonical_passes);
    CHECK(r.exact_match);
    CHECK(r.worst_pass_gap < 1e-14);
}

TEST_CASE("slot coefficients split real covectors") {
    RVec xi = axis(2, 0);  // dx_1 on C^1
    Vec c = slot_coefficients(SpaceConfig::bidegree(1, 0, 0), xi);
    REQUIRE(c.size() == 2);
    CHECK(std::abs(c[0] - cd(kInvSqrt2, 0)) < 1e-14);
    CHECK(std::abs(c[1] - cd(kInvSqrt2, 0)) < 1e-14);
    RVec eta(3);
    eta << 0.2, -1.0, 0.4;
    Vec r = slot_coefficients(SpaceConfig::riemannian(3, 1), eta);
    CHECK((r - eta.cast<cd>()).norm() < 1e-15);
}
