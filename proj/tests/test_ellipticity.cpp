#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rkato/ellipticity.hpp"

using namespace rkato;

TEST_CASE("closed-form constants for low degrees") {
    CHECK(riemannian_alpha_closed(3, 1) == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(riemannian_alpha_closed(4, 1) == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK(riemannian_alpha_closed(5, 2) == doctest::Approx(riemannian_alpha_closed(5, 3)));
    CHECK(riemannian_alpha_closed(6, 3) == doctest::Approx(std::sqrt(3.0) / 2.0));
}

TEST_CASE("hodge ellipticity constant at n=4, k=1") {
    SpaceConfig cfg = SpaceConfig::riemannian(4, 1);
    CHECK(epsilon_closed(cfg, OperatorFamily::hodge) == doctest::Approx(0.25));
    EllipticityResult r = ellipticity_constant(cfg, OperatorFamily::hodge, 6, 42);
    CHECK(r.residual < 1e-10);
    CHECK(r.xi_spread < 1e-10);
    // the symbol spectrum there is {1/2, 1/4}; the full spread check sees both
    CHECK(ellipticity_spectrum_spread(cfg, OperatorFamily::hodge, 4, 7) < 1e-10);
}

TEST_CASE("extremal degrees are the parallel case") {
    KatoConstant c = kato_constant(SpaceConfig::riemannian(3, 0));
    CHECK(c.parallel);
    CHECK(c.epsilon == doctest::Approx(1.0));
    CHECK(epsilon_closed(SpaceConfig::riemannian(5, 5), OperatorFamily::hodge) ==
          doctest::Approx(1.0));
}

TEST_CASE("riemannian constant complements the ellipticity constant") {
    KatoConstant c = kato_constant(SpaceConfig::riemannian(4, 1));
    CHECK(c.alpha_sq == doctest::Approx(0.75));
    CHECK(c.alpha == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK(c.alpha_sq == doctest::Approx(1.0 - c.epsilon));
}

TEST_CASE("dolbeault ellipticity constants") {
    CHECK(epsilon_closed(SpaceConfig::bidegree(3, 1, 1), OperatorFamily::dolbeault_1) ==
          doctest::Approx(1.0 / 6.0));
    CHECK(epsilon_closed(SpaceConfig::bidegree(3, 0, 1), OperatorFamily::dolbeault_1) ==
          doctest::Approx(0.5));
    EllipticityResult r = ellipticity_constant(SpaceConfig::bidegree(2, 1, 1),
                                               OperatorFamily::dolbeault_2, 5, 42);
    CHECK(r.closed_form == doctest::Approx(0.25));
    CHECK(r.residual < 1e-10);
}

TEST_CASE("diagonal bidegree constant and the riemannian comparison") {
    KatoConstant c = kato_constant(SpaceConfig::bidegree(2, 1, 1));
    CHECK(c.alpha_sq == doctest::Approx(0.75));
    REQUIRE(c.riemannian_alpha_sq.has_value());
    CHECK(*c.riemannian_alpha_sq == doctest::Approx(2.0 / 3.0));
    CHECK(c.alpha_sq > *c.riemannian_alpha_sq);  // two-leg families cannot reach it
    REQUIRE(c.min_alpha_sq.has_value());
    CHECK(*c.min_alpha_sq == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("mixed and extremal bidegree constants") {
    CHECK(kato_constant(SpaceConfig::bidegree(3, 1, 2)).alpha_sq == doctest::Approx(5.0 / 6.0));
    CHECK(bidegree_alpha_sq_closed(3, 1, 2) == doctest::Approx(5.0 / 6.0));
    KatoConstant hol = kato_constant(SpaceConfig::bidegree(2, 1, 0));
    CHECK(hol.alpha_sq == doctest::Approx(0.5));
    CHECK(*hol.riemannian_alpha_sq == doctest::Approx(0.75));
    CHECK(hol.alpha_sq < *hol.riemannian_alpha_sq);  // extremal bidegree improves
}

TEST_CASE("direct sums take the weakest component") {
    KatoConstant ds = direct_sum_constant(
        {SpaceConfig::riemannian(3, 1), SpaceConfig::riemannian(3, 2)});
    CHECK(!ds.parallel);
    CHECK(ds.alpha == doctest::Approx(riemannian_alpha_closed(3, 1)));
    KatoConstant absorbed = direct_sum_constant(
        {SpaceConfig::riemannian(3, 0), SpaceConfig::riemannian(3, 1)});
    CHECK(!absorbed.parallel);
    CHECK(absorbed.alpha == doctest::Approx(riemannian_alpha_closed(3, 1)));
    KatoConstant par = direct_sum_constant(
        {SpaceConfig::riemannian(2, 0), SpaceConfig::riemannian(2, 2)});
    CHECK(par.parallel);
}

TEST_CASE("constants table covers the requested range") {
    std::vector<ConstantsRow> rows = constants_table(3, true, 1, 3, 42);
    size_t riem = 2 + 3 + 4;  // n = 1..3
    size_t bideg = 4;         // n = 1
    CHECK(rows.size() == riem + bideg);
    for (const ConstantsRow& r : rows) {
        CHECK(r.eps_residual < 1e-10);
        CHECK(r.xi_spread < 1e-10);
        if (!r.parallel) CHECK(r.alpha_sq == doctest::Approx(1.0 - r.eps_closed));
    }
}
