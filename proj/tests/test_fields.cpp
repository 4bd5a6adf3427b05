#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rkato/catalog.hpp"
#include "rkato/fields.hpp"

using namespace rkato;

namespace {

RVec point(std::initializer_list<double> xs) {
    RVec p(static_cast<long>(xs.size()));
    long i = 0;
    for (double x : xs) p[i++] = x;
    return p;
}

FormField quad_field(int n) {
    return gradient_field("quad", potential_preset("quad_axial", n));
}

}  // namespace

TEST_CASE("polynomial arithmetic and derivatives are exact") {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    Polynomial p = x * x * x - x * y * y;  // not harmonic
    CHECK(p.eval(point({2.0, 1.0})) == doctest::Approx(6.0));
    CHECK(p.derivative(0).eval(point({2.0, 1.0})) == doctest::Approx(11.0));
    CHECK(p.laplacian().eval(point({2.0, 1.0})) == doctest::Approx(8.0));
    CHECK(potential_preset("quad_axial", 4).laplacian().empty());
    CHECK(potential_preset("planar_cubic", 3).laplacian().empty());
    CHECK(potential_preset("planar_quartic", 2).laplacian().empty());
}

TEST_CASE("complex polynomials differentiate by Wirtinger rules") {
    CPolynomial z2 = CPolynomial::monomial(2, {2, 0}, {0, 0}, 1.0);  // z_1^2
    RVec xy = point({1.0, 0.0, 1.0, 0.0});                          // z = (1+i, 0)
    CHECK(std::abs(z2.eval(xy) - cd(0, 2)) < 1e-14);                 // (1+i)^2 = 2i
    CHECK(std::abs(z2.dz(0).eval(xy) - cd(2, 2)) < 1e-14);
    CHECK(z2.dzbar(0).empty());
    CPolynomial c = z2.conjugated();
    CHECK(std::abs(c.eval(xy) - cd(0, -2)) < 1e-14);
}

TEST_CASE("gradient fields are harmonic one-forms with exact derivatives") {
    FormField f = quad_field(3);
    RVec e1 = point({1.0, 0.0, 0.0});
    CHECK(harmonic_residual_at(f, e1) < 1e-14);
    FieldDerivatives der = assemble_d_and_dstar(f, point({0.3, -0.2, 0.9}));
    CHECK(der.d_norm() < 1e-14);
    CHECK(der.d_star_norm() < 1e-14);
    FiniteDiffReport fd = finite_diff_check(f, point({0.4, 0.1, -0.3}), 1e-3);
    CHECK(fd.exact);  // linear components: centered differences are exact
}

TEST_CASE("quadratic gradient attains the refined constant on the axis") {
    FormField f = quad_field(3);
    RVec e1 = point({1.0, 0.0, 0.0});
    RatioSample r = kato_ratio(f, e1);
    REQUIRE(r.defined);
    CHECK(r.ratio == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(equality_residual_riemannian(f, e1) < 1e-12);
    SweepResult sw = sweep_ratio(f);
    CHECK(sw.max_ratio <= std::sqrt(2.0 / 3.0) + 1e-9);
    CHECK(sw.max_harmonic_residual < 1e-9 * std::max(1.0, sw.nabla_scale));
}

TEST_CASE("oscillating exponential attains with a nonzero second fundamental form") {
    FormField f = trig_exp_field("t", point({1.0, 0.0}), point({0.0, 1.0}));
    RVec origin = point({0.0, 0.0});
    CHECK(harmonic_residual_at(f, origin) < 1e-12);
    RatioSample r = kato_ratio(f, origin);
    REQUIRE(r.defined);
    CHECK(r.ratio == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(equality_residual_riemannian(f, origin) < 1e-10);
    FiniteDiffReport fd = finite_diff_check(f, point({0.2, -0.1}), 1e-3);
    CHECK((fd.exact || fd.order >= 1.9));
}

TEST_CASE("constant blades are parallel") {
    FormField f = constant_blade_field("c", 3, 0b101);  // e_{13}
    SweepResult sw = sweep_ratio(f);
    CHECK(sw.defined == 0);
    CHECK(sw.nabla_scale < 1e-14);
    CHECK(sw.omega_scale == doctest::Approx(1.0));
}

TEST_CASE("holomorphic monomial fields sit at ratio 1/sqrt(2)") {
    FormField f = holomorphic_field("h", 1, {1}, 0b1);  // z_1 dz_1
    RVec x = point({0.7, -0.4});
    CHECK(harmonic_residual_at(f, x) < 1e-13);
    RatioSample r = kato_ratio(f, x);
    REQUIRE(r.defined);
    CHECK(r.ratio == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(equality_residual_kahler(f, x) < 1e-12);
    SweepResult sw = sweep_ratio(f);
    CHECK(sw.max_ratio == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("conjugation swaps the bidegree and keeps ratios") {
    FormField f = holomorphic_field("h", 2, {0, 1}, 0b1);  // z_2 dz_1
    FormField g = conjugate_field(f);
    CHECK(g.config.p == 0);
    CHECK(g.config.q == 1);
    RVec x = point({0.3, 0.8, -0.2, 0.5});
    CHECK(std::abs(g.eval(x).norm() - f.eval(x).norm()) < 1e-13);
    CHECK(harmonic_residual_at(g, x) < 1e-13);
    RatioSample both = combined_kato_ratio(f, g, x);
    REQUIRE(both.defined);
    CHECK(both.ratio == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("the non-harmonic control violates only the refined bound") {
    Polynomial half_sq = potential_preset("half_sq", 3);
    FormField f = gradient_field("ctrl", half_sq);  // x_1 dx_1
    RVec x = point({0.5, 0.2, -0.7});
    FieldDerivatives der = assemble_d_and_dstar(f, x);
    CHECK(der.d_norm() < 1e-14);
    CHECK(der.d_star_norm() == doctest::Approx(1.0));  // d* (x_1 dx_1) = -1
    RatioSample r = kato_ratio(f, x);
    REQUIRE(r.defined);
    CHECK(r.ratio == doctest::Approx(1.0));  // classical bound tight, refined broken
}

TEST_CASE("duality transport commutes with differentiation") {
    StarParallelReport sp = hodge_star_parallel_check(quad_field(3));
    CHECK(sp.max_commutator < 1e-10);
    CHECK(sp.max_isometry_dev < 1e-12);
    FormField st = star_transform(quad_field(3));
    CHECK(st.config.k == 2);
}

TEST_CASE("grids honor caps and jitter") {
    GridSpec g;
    CHECK(make_grid(2, g).size() == 21 * 21);
    g.jitter_points = 5;
    CHECK(make_grid(2, g).size() == 21 * 21 + 5);
    GridSpec g5;
    CHECK(make_grid(5, g5).size() == 7 * 7 * 7 * 7 * 7);
    g5.points_per_axis = 3;
    std::vector<RVec> pts = make_grid(5, g5);
    CHECK(pts.size() == 3 * 3 * 3 * 3 * 3);
    for (const RVec& p : pts) CHECK(p.cwiseAbs().maxCoeff() <= g5.half_width + 1e-15);
}

TEST_CASE("catalog lines parse into configured fields") {
    std::string text =
        "# comment\n"
        "q3 | grad_poly | n=3; poly=quad_axial; attain=1,0,0 | 0.8164965809277260 | jitter=4\n"
        "cb | const_blade | n=3; blade=1,3 | parallel | box=2; pts=5\n"
        "h1 | holo_mono | n=1; exps=2; blade=1 | 0.7071067811865476 | box=1.5; pts=9\n";
    std::vector<FormField> fs = parse_catalog(text);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].name == "q3");
    CHECK(fs[0].config.n == 3);
    CHECK(fs[0].expected_alpha.has_value());
    CHECK(fs[0].grid.jitter_points == 4);
    REQUIRE(fs[0].attain.has_value());
    CHECK((*fs[0].attain - point({1.0, 0.0, 0.0})).norm() < 1e-15);
    CHECK(fs[1].parallel_expected);
    CHECK(!fs[1].expected_alpha.has_value());
    CHECK(fs[2].config.kahler);
    CHECK(fs[2].grid.half_width == doctest::Approx(1.5));
    CHECK(fs[2].grid.points_per_axis == 9);
}

TEST_CASE("catalog errors carry the line number") {
    CHECK_THROWS_WITH_AS(parse_catalog("bad | nosuch | n=1 | 1 | box=2\n"),
                         doctest::Contains("line 1"), std::invalid_argument);
    CHECK_THROWS(parse_catalog("x | grad_poly | n=3; poly=quad_axial; junk=1 | 0.5 | box=2\n"));
}

TEST_CASE("the built-in catalog parses and stays consistent") {
    std::vector<FormField> fs = parse_catalog(default_catalog_text());
    CHECK(fs.size() >= 15);
    bool has_control = false;
    for (const FormField& f : fs) {
        CHECK(!f.name.empty());
        if (f.expect_violation) has_control = true;
        if (!f.parallel_expected) CHECK(f.expected_alpha.has_value());
    }
    CHECK(has_control);
}
