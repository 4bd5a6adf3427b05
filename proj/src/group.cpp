#include "rkato/group.hpp"

#include <cmath>

#include "rkato/exterior.hpp"

namespace rkato {

double Rng::uniform01() {
    // 53-bit mantissa, shifted into (0, 1] so log() is always finite.
    return (double((eng_() >> 11)) + 1.0) * 0x1p-53;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01(), u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
}

cd Rng::cgaussian() { return cd(gaussian(), gaussian()) / std::sqrt(2.0); }

RVec Rng::unit_covector(int d) {
    require(d >= 1, "unit covector: dimension must be positive");
    RVec v(d);
    double norm2 = 0.0;
    do {
        for (int i = 0; i < d; ++i) v[i] = gaussian();
        norm2 = v.squaredNorm();
    } while (norm2 < 1e-12);
    return v / std::sqrt(norm2);
}

GroupElement group_identity(GroupKind kind, int n) {
    return GroupElement{kind, n, Mat::Identity(n, n)};
}

namespace {

void validate(const GroupElement& g) {
    require(g.n >= 1 && g.m.rows() == g.n && g.m.cols() == g.n,
            "group element: matrix shape mismatch");
    double unit_res = (g.m.adjoint() * g.m - Mat::Identity(g.n, g.n)).cwiseAbs().maxCoeff();
    require(unit_res < 1e-12, "group element: columns are not orthonormal");
    if (g.kind == GroupKind::orthogonal) {
        require(g.m.imag().cwiseAbs().maxCoeff() == 0.0,
                "group element: orthogonal matrix must be real");
        require(std::abs(g.m.real().determinant() - 1.0) < 1e-10,
                "group element: rotation must have determinant +1");
    } else {
        require(std::abs(std::abs(g.m.determinant()) - 1.0) < 1e-10,
                "group element: unitary determinant must have modulus 1");
    }
}

}  // namespace

GroupElement random_element(GroupKind kind, int n, Rng& rng) {
    require(n >= 1, "random group element: n must be positive");
    GroupElement g{kind, n, Mat(n, n)};
    if (kind == GroupKind::orthogonal) {
        Eigen::MatrixXd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = rng.gaussian();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
        Eigen::MatrixXd q = qr.householderQ();
        Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (int j = 0; j < n; ++j)
            if (r(j, j) < 0) q.col(j) = -q.col(j);
        if (q.determinant() < 0) q.col(n - 1) = -q.col(n - 1);
        g.m = q.cast<cd>();
    } else {
        Mat a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = rng.cgaussian();
        Eigen::HouseholderQR<Mat> qr(a);
        Mat q = qr.householderQ() * Mat::Identity(n, n);
        Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (int j = 0; j < n; ++j) {
            cd d = r(j, j);
            if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
        }
        g.m = q;
    }
    validate(g);
    return g;
}

GroupElement random_element(GroupKind kind, int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_element(kind, n, rng);
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
    require(a.kind == b.kind && a.n == b.n, "compose: group mismatch");
    GroupElement g{a.kind, a.n, a.m * b.m};
    validate(g);
    return g;
}

namespace {

// Lambda^k of an n x n matrix via iterated wedges of image columns.
Mat exterior_power(const Mat& m, int n, int k) {
    ExteriorSpace src(n, k, ScalarKind::cplx);
    ExteriorSpace one(n, 1, ScalarKind::cplx);
    ExteriorSpace zero(n, 0, ScalarKind::cplx);
    Mat out(src.dim(), src.dim());
    for (int c = 0; c < src.dim(); ++c) {
        FormVector acc(VectorSpace(zero), Vec::Ones(1));
        for (int i : blade_indices(src.blade(c)))
            acc = wedge(acc, FormVector(VectorSpace(one), m.col(i - 1)));
        out.col(c) = acc.coeffs;
    }
    return out;
}

Mat fiber_action(const GroupElement& g, const FiberSpace& f) {
    if (const auto* e = std::get_if<ExteriorSpace>(&f)) {
        require(g.kind == GroupKind::orthogonal,
                "action: exterior fibers carry the rotation action only");
        require(e->n() == g.n, "action: ambient dimension mismatch");
        return exterior_power(g.m, g.n, e->k());
    }
    if (const auto* b = std::get_if<BidegreeSpace>(&f)) {
        require(g.kind == GroupKind::unitary,
                "action: bidegree fibers carry the unitary action only");
        require(b->n() == g.n, "action: ambient dimension mismatch");
        Mat ap = exterior_power(g.m.conjugate(), g.n, b->p());
        Mat aq = exterior_power(g.m, g.n, b->q());
        Mat out(b->dim(), b->dim());
        // basis layout is I-outer, J-inner: kron(ap, aq)
        for (int i = 0; i < ap.rows(); ++i)
            for (int j = 0; j < ap.cols(); ++j)
                out.block(i * aq.rows(), j * aq.cols(), aq.rows(), aq.cols()) = ap(i, j) * aq;
        return out;
    }
    fail("action: abstract spaces carry no group action");
}

}  // namespace

Mat action_matrix(const GroupElement& g, const VectorSpace& space) {
    int fd = space.fiber_total_dim();
    Mat fib = Mat::Zero(fd, fd);
    int off = 0;
    for (const auto& f : space.summands) {
        int d = fiber_dim(f);
        fib.block(off, off, d, d) = fiber_action(g, f);
        off += d;
    }
    if (space.cot == CotangentKind::none) return fib;

    int cd_ = space.cot_dim();
    Mat cot(cd_, cd_);
    if (space.cot == CotangentKind::real) {
        cot = g.m;
    } else {
        cot.setZero();
        cot.topLeftCorner(g.n, g.n) = g.m.conjugate();
        cot.bottomRightCorner(g.n, g.n) = g.m;
    }
    Mat out(cd_ * fd, cd_ * fd);
    for (int i = 0; i < cd_; ++i)
        for (int j = 0; j < cd_; ++j) out.block(i * fd, j * fd, fd, fd) = cot(i, j) * fib;
    return out;
}

FormVector act_on_form(const GroupElement& g, const FormVector& w) {
    require(w.space.cot == CotangentKind::none && w.space.summands.size() == 1,
            "act_on_form: expected a plain fiber form (use act_on_tensor)");
    return FormVector(w.space, action_matrix(g, w.space) * w.coeffs);
}

FormVector act_on_tensor(const GroupElement& g, const FormVector& t) {
    require(t.space.cot != CotangentKind::none,
            "act_on_tensor: expected a cotangent-tensored vector");
    return FormVector(t.space, action_matrix(g, t.space) * t.coeffs);
}

}  // namespace rkato
