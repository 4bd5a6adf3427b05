#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rkato/exterior.hpp"
#include "rkato/group.hpp"

using namespace rkato;

namespace {

FormVector form(const ExteriorSpace& s, std::initializer_list<cd> coeffs) {
    Vec v(static_cast<long>(coeffs.size()));
    long i = 0;
    for (cd c : coeffs) v[i++] = c;
    return FormVector(VectorSpace(s), v);
}

FormVector random_form(const VectorSpace& s, Rng& rng) {
    Vec v(s.dim());
    for (int i = 0; i < s.dim(); ++i) v[i] = rng.cgaussian();
    return FormVector(s, v);
}

}  // namespace

TEST_CASE("blade indexing round-trips") {
    ExteriorSpace s(5, 3);
    CHECK(s.dim() == 10);
    for (int i = 0; i < s.dim(); ++i) CHECK(s.index_of(s.blade(i)) == i);
}

TEST_CASE("wedge against a fixed blade") {
    ExteriorSpace one(3, 1);
    FormVector xi = form(one, {1.0, 2.0, 0.0});  // e1 + 2 e2
    FormVector w = form(one, {0.0, 0.0, 1.0});   // e3
    FormVector prod = wedge(xi, w);              // e13 + 2 e23
    ExteriorSpace two(3, 2);
    CHECK(inner(prod, form(two, {0, 0, 1})).real() == doctest::Approx(2.0));
    CHECK(inner(prod, form(two, {0, 1, 0})).real() == doctest::Approx(1.0));
    CHECK(std::abs(inner(prod, form(two, {1, 0, 0}))) < 1e-15);
}

TEST_CASE("wedge is graded-commutative and associative") {
    Rng rng(7);
    VectorSpace one(ExteriorSpace(5, 1)), two(ExteriorSpace(5, 2));
    FormVector a = random_form(one, rng), b = random_form(one, rng);
    FormVector c = random_form(two, rng);
    CHECK((wedge(a, b) + wedge(b, a)).norm() < 1e-12);
    CHECK((wedge(a, c) - wedge(c, a)).norm() < 1e-12);  // deg 1 * deg 2 commutes
    CHECK(wedge(a, a).norm() < 1e-12);
    FormVector ab_c = wedge(wedge(a, b), c);
    FormVector a_bc = wedge(a, wedge(b, c));
    CHECK((ab_c - a_bc).norm() < 1e-12);
}

TEST_CASE("contraction is adjoint to wedging") {
    Rng rng(11);
    VectorSpace low(ExteriorSpace(4, 2)), high(ExteriorSpace(4, 3));
    for (int trial = 0; trial < 5; ++trial) {
        Vec v(4);
        for (int i = 0; i < 4; ++i) v[i] = rng.cgaussian();
        FormVector a = random_form(low, rng), b = random_form(high, rng);
        FormVector va = wedge(FormVector(VectorSpace(ExteriorSpace(4, 1)), v), a);
        cd lhs = inner(va, b);
        cd rhs = inner(a, contract(v, b));
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("hodge star on one-forms in R^3") {
    ExteriorSpace one(3, 1), two(3, 2);
    CHECK((hodge_star(form(one, {1, 0, 0})) - form(two, {0, 0, 1})).norm() < 1e-15);
    CHECK((hodge_star(form(one, {0, 1, 0})) + form(two, {0, 1, 0})).norm() < 1e-15);
    CHECK((hodge_star(form(one, {0, 0, 1})) - form(two, {1, 0, 0})).norm() < 1e-15);
}

TEST_CASE("hodge star: defining pairing, isometry, and square") {
    Rng rng(3);
    int n = 4, k = 2;
    VectorSpace s(ExteriorSpace(n, k));
    // real coefficients: the defining pairing is bilinear, not sesquilinear
    Vec ec(s.dim()), wc(s.dim());
    for (int i = 0; i < s.dim(); ++i) {
        ec[i] = rng.gaussian();
        wc[i] = rng.gaussian();
    }
    FormVector eta(s, ec), w(s, wc);
    FormVector top = wedge(eta, hodge_star(w));
    ExteriorSpace topspace(n, n);
    CHECK(std::abs(inner(top, form(topspace, {1})) - inner(eta, w)) < 1e-12);
    CHECK(hodge_star(w).norm() == doctest::Approx(w.norm()));
    double sign = ((k * (n - k)) % 2 == 0) ? 1.0 : -1.0;
    CHECK((hodge_star(hodge_star(w)) - sign * w).norm() < 1e-12);
}

TEST_CASE("hodge star matrix is a signed permutation") {
    Mat m = hodge_star_matrix(5, 2);
    CHECK(m.rows() == 10);
    for (int j = 0; j < m.cols(); ++j) {
        int hits = 0;
        for (int i = 0; i < m.rows(); ++i) {
            if (std::abs(m(i, j)) > 0) {
                ++hits;
                CHECK(std::abs(std::abs(m(i, j).real()) - 1.0) < 1e-15);
                CHECK(m(i, j).imag() == 0.0);
            }
        }
        CHECK(hits == 1);
    }
}

TEST_CASE("bidegree wedges anticommute across factors") {
    BidegreeSpace zero(2, 0, 0);
    FormVector one(VectorSpace(zero), Vec::Ones(1));
    FormVector uv = wedge_v(2, wedge_u(1, one));
    FormVector vu = wedge_u(1, wedge_v(2, one));
    CHECK((uv + vu).norm() < 1e-15);
}

TEST_CASE("bidegree contractions are adjoint to the matching wedges") {
    Rng rng(19);
    VectorSpace low(BidegreeSpace(3, 1, 1)), up_p(BidegreeSpace(3, 2, 1)),
        up_q(BidegreeSpace(3, 1, 2));
    FormVector a = random_form(low, rng);
    FormVector bp = random_form(up_p, rng), bq = random_form(up_q, rng);
    for (int i = 1; i <= 3; ++i) {
        CHECK(std::abs(inner(wedge_u(i, a), bp) - inner(a, contract_Z(i, bp))) < 1e-12);
        CHECK(std::abs(inner(wedge_v(i, a), bq) - inner(a, contract_W(i, bq))) < 1e-12);
    }
}

TEST_CASE("bidegree split of a real covector") {
    Rng rng(23);
    RVec xi = rng.unit_covector(6);  // n = 3
    ComplexCovector c = bidegree_split(xi);
    CHECK(c.n == 3);
    CHECK((bidegree_join(c) - xi).norm() < 1e-14);
    CHECK(c.holo.squaredNorm() + c.antiholo.squaredNorm() == doctest::Approx(1.0));
    CHECK((c.antiholo - c.holo.conjugate()).norm() < 1e-14);
    RVec dx1 = RVec::Zero(2);  // n = 1: xi = dx_1
    dx1[0] = 1.0;
    ComplexCovector c1 = bidegree_split(dx1);
    CHECK(std::abs(c1.holo[0] - cd(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
}
