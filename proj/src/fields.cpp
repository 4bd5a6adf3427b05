#include "rkato/fields.hpp"

#include <algorithm>
#include <cmath>

#include "rkato/group.hpp"

namespace rkato {

namespace {

constexpr double kUndefinedFrac = 1e-8;  // ratio undefined below this fraction of scale
constexpr double kFdExact = 1e-12;       // centered differences at rounding level
const double kSqrt2 = std::sqrt(2.0);

Vec unit_axis(int n, int mu) {
    Vec e = Vec::Zero(n);
    e[mu] = 1.0;
    return e;
}

}  // namespace

ScalarFieldR field_of(const Polynomial& p) {
    auto poly = std::make_shared<Polynomial>(p);
    auto partials = std::make_shared<std::vector<Polynomial>>();
    for (int i = 0; i < p.nvars(); ++i) partials->push_back(p.derivative(i));
    ScalarFieldR f;
    f.value = [poly](const RVec& x) { return poly->eval(x); };
    f.grad = [partials, d = p.nvars()](const RVec& x) {
        RVec g(d);
        for (int i = 0; i < d; ++i) g[i] = (*partials)[static_cast<size_t>(i)].eval(x);
        return g;
    };
    return f;
}

int default_points_per_axis(int dim) {
    if (dim <= 3) return 21;
    if (dim == 4) return 9;
    if (dim == 5) return 7;
    return 5;
}

std::vector<RVec> make_grid(int dim, const GridSpec& g) {
    require(dim >= 1, "make_grid: dimension must be positive");
    require(g.half_width > 0, "make_grid: half_width must be positive");
    int per_axis = g.points_per_axis > 0 ? g.points_per_axis : default_points_per_axis(dim);
    std::vector<RVec> pts;
    std::vector<int> idx(static_cast<size_t>(dim), 0);
    for (;;) {
        RVec x(dim);
        for (int i = 0; i < dim; ++i)
            x[i] = per_axis == 1 ? 0.0
                                 : -g.half_width + 2.0 * g.half_width * idx[static_cast<size_t>(i)] /
                                       (per_axis - 1);
        pts.push_back(std::move(x));
        int i = 0;
        while (i < dim && ++idx[static_cast<size_t>(i)] == per_axis) idx[static_cast<size_t>(i++)] = 0;
        if (i == dim) break;
    }
    if (g.jitter_points > 0) {
        Rng rng(g.seed);
        for (int j = 0; j < g.jitter_points; ++j) {
            RVec x(dim);
            for (int i = 0; i < dim; ++i) x[i] = -g.half_width + 2.0 * g.half_width * rng.uniform01();
            pts.push_back(std::move(x));
        }
    }
    return pts;
}

VectorSpace FormField::fiber_space() const { return sum_space({config.fiber()}); }

FormVector FormField::eval(const RVec& x) const {
    require(x.size() == ambient_dim(), "field eval: point dimension mismatch");
    VectorSpace fs = fiber_space();
    Vec out(fs.dim());
    if (!config.kahler) {
        require(static_cast<int>(rcomp.size()) == fs.dim(), "field eval: missing backing");
        for (int t = 0; t < fs.dim(); ++t) out[t] = rcomp[static_cast<size_t>(t)].value(x);
    } else {
        require(kcomp && static_cast<int>(kcomp->comp.size()) == fs.dim(),
                "field eval: missing backing");
        for (int t = 0; t < fs.dim(); ++t) out[t] = kcomp->comp[static_cast<size_t>(t)].eval(x);
    }
    return FormVector(fs, std::move(out));
}

Mat FormField::eval_nabla_coords(const RVec& x) const {
    require(x.size() == ambient_dim(), "field eval: point dimension mismatch");
    int fd = fiber_dim(config.fiber());
    Mat d(fd, ambient_dim());
    if (!config.kahler) {
        require(static_cast<int>(rcomp.size()) == fd, "field eval: missing backing");
        for (int t = 0; t < fd; ++t) {
            RVec g = rcomp[static_cast<size_t>(t)].grad(x);
            for (int mu = 0; mu < ambient_dim(); ++mu) d(t, mu) = g[mu];
        }
    } else {
        require(kcomp != nullptr, "field eval: missing backing");
        int n = config.n;
        for (int t = 0; t < fd; ++t)
            for (int j = 0; j < n; ++j) {
                cd dz = kcomp->dz[static_cast<size_t>(t)][static_cast<size_t>(j)].eval(x);
                cd db = kcomp->dzbar[static_cast<size_t>(t)][static_cast<size_t>(j)].eval(x);
                d(t, j) = dz + db;                 // d/dx_j
                d(t, n + j) = cd(0, 1) * (dz - db);  // d/dy_j
            }
    }
    return d;
}

FormVector FormField::eval_nabla(const RVec& x) const {
    VectorSpace ts = tensor_space(config.cotangent(), config.fiber());
    int fd = fiber_dim(config.fiber());
    Vec out(ts.dim());
    if (!config.kahler) {
        Mat d = eval_nabla_coords(x);
        for (int mu = 0; mu < config.n; ++mu) out.segment(mu * fd, fd) = d.col(mu);
    } else {
        require(kcomp != nullptr, "field eval: missing backing");
        int n = config.n;
        for (int t = 0; t < fd; ++t)
            for (int j = 0; j < n; ++j) {
                // slot j pairs with Z_j = sqrt(2) d/dz_j, slot n+j with W_j.
                out[j * fd + t] =
                    kSqrt2 * kcomp->dz[static_cast<size_t>(t)][static_cast<size_t>(j)].eval(x);
                out[(n + j) * fd + t] =
                    kSqrt2 * kcomp->dzbar[static_cast<size_t>(t)][static_cast<size_t>(j)].eval(x);
            }
    }
    return FormVector(ts, std::move(out));
}

namespace {

std::shared_ptr<KahlerComponents> make_kahler(int n, std::vector<CPolynomial> comps) {
    auto k = std::make_shared<KahlerComponents>();
    k->comp = std::move(comps);
    k->dz.resize(k->comp.size());
    k->dzbar.resize(k->comp.size());
    for (size_t t = 0; t < k->comp.size(); ++t)
        for (int j = 0; j < n; ++j) {
            k->dz[t].push_back(k->comp[t].dz(j));
            k->dzbar[t].push_back(k->comp[t].dzbar(j));
        }
    return k;
}

}  // namespace

FormField gradient_field(std::string name, const Polynomial& potential) {
    int n = potential.nvars();
    require(n >= 1, "gradient_field: potential needs at least one variable");
    FormField f;
    f.name = std::move(name);
    f.config = SpaceConfig::riemannian(n, 1);
    f.rpoly = std::make_shared<std::vector<Polynomial>>();
    for (int mu = 0; mu < n; ++mu) f.rpoly->push_back(potential.derivative(mu));
    for (const auto& p : *f.rpoly) f.rcomp.push_back(field_of(p));
    return f;
}

FormField constant_blade_field(std::string name, int n, Mask blade) {
    int k = blade_degree(blade);
    FormField f;
    f.name = std::move(name);
    f.config = SpaceConfig::riemannian(n, k);
    ExteriorSpace s(n, k);
    f.rpoly = std::make_shared<std::vector<Polynomial>>();
    for (int t = 0; t < s.dim(); ++t)
        f.rpoly->push_back(Polynomial::constant(n, s.blade(t) == blade ? 1.0 : 0.0));
    for (const auto& p : *f.rpoly) f.rcomp.push_back(field_of(p));
    return f;
}

FormField trig_exp_field(std::string name, const RVec& a, const RVec& b) {
    int n = static_cast<int>(a.size());
    require(b.size() == n, "trig_exp_field: a and b must have the same length");
    require(std::abs(a.norm() - b.norm()) < 1e-12 && a.norm() > 0,
            "trig_exp_field: |a| and |b| must match and be nonzero");
    require(std::abs(a.dot(b)) < 1e-12, "trig_exp_field: a and b must be orthogonal");
    FormField f;
    f.name = std::move(name);
    f.config = SpaceConfig::riemannian(n, 1);
    for (int mu = 0; mu < n; ++mu) {
        ScalarFieldR c;
        c.value = [a, b, mu](const RVec& x) {
            double ax = a.dot(x), bx = b.dot(x);
            return std::exp(ax) * (a[mu] * std::cos(bx) - b[mu] * std::sin(bx));
        };
        c.grad = [a, b, mu, n](const RVec& x) {
            double ax = a.dot(x), bx = b.dot(x);
            double e = std::exp(ax), cs = std::cos(bx), sn = std::sin(bx);
            RVec g(n);
            for (int nu = 0; nu < n; ++nu)
                g[nu] = e * ((a[mu] * a[nu] - b[mu] * b[nu]) * cs -
                             (a[mu] * b[nu] + a[nu] * b[mu]) * sn);
            return g;
        };
        f.rcomp.push_back(std::move(c));
    }
    return f;
}

FormField holomorphic_field(std::string name, int n, const std::vector<int>& exps,
                            Mask holo_blade) {
    require(static_cast<int>(exps.size()) == n, "holomorphic_field: exponent arity mismatch");
    int p = blade_degree(holo_blade);
    BidegreeSpace s(n, p, 0);
    FormField f;
    f.name = std::move(name);
    f.config = SpaceConfig::bidegree(n, p, 0);
    f.family = OperatorFamily::dolbeault_2;
    std::vector<CPolynomial> comps(static_cast<size_t>(s.dim()), CPolynomial(n));
    comps[static_cast<size_t>(s.index_of(holo_blade, 0))] =
        CPolynomial::monomial(n, exps, std::vector<int>(static_cast<size_t>(n), 0), cd(1.0, 0.0));
    f.kcomp = make_kahler(n, std::move(comps));
    return f;
}

FormField constant_bidegree_field(std::string name, int n, Mask holo_blade, Mask anti_blade) {
    int p = blade_degree(holo_blade), q = blade_degree(anti_blade);
    BidegreeSpace s(n, p, q);
    FormField f;
    f.name = std::move(name);
    f.config = SpaceConfig::bidegree(n, p, q);
    f.family = OperatorFamily::dolbeault_2;
    std::vector<CPolynomial> comps(static_cast<size_t>(s.dim()), CPolynomial(n));
    std::vector<int> zero(static_cast<size_t>(n), 0);
    comps[static_cast<size_t>(s.index_of(holo_blade, anti_blade))] =
        CPolynomial::monomial(n, zero, zero, cd(1.0, 0.0));
    f.kcomp = make_kahler(n, std::move(comps));
    return f;
}

FormField conjugate_field(const FormField& f) {
    require(f.config.kahler && f.kcomp, "conjugate_field: needs a bidegree field");
    int n = f.config.n, p = f.config.p, q = f.config.q;
    BidegreeSpace src(n, p, q), dst(n, q, p);
    // conj(ebar_I ^ e_J) reorders to (-1)^{pq} ebar_J ^ e_I.
    double sign = ((p * q) & 1) ? -1.0 : 1.0;
    std::vector<CPolynomial> comps(static_cast<size_t>(dst.dim()), CPolynomial(n));
    for (int t = 0; t < src.dim(); ++t) {
        auto [I, J] = src.blade(t);
        comps[static_cast<size_t>(dst.index_of(J, I))] =
            f.kcomp->comp[static_cast<size_t>(t)].conjugated().scaled(sign);
    }
    FormField g;
    g.name = f.name + "_conj";
    g.config = SpaceConfig::bidegree(n, q, p);
    g.family = f.family == OperatorFamily::dolbeault_2   ? OperatorFamily::dolbeault_1
               : f.family == OperatorFamily::dolbeault_1 ? OperatorFamily::dolbeault_2
                                                         : f.family;
    g.expected_alpha = f.expected_alpha;
    g.parallel_expected = f.parallel_expected;
    g.attain = f.attain;
    g.grid = f.grid;
    g.kcomp = make_kahler(n, std::move(comps));
    return g;
}

double FieldDerivatives::d_norm() const {
    if (d) return d->norm();
    double s = 0.0;
    if (del) s += del->coeffs.squaredNorm();
    if (delbar) s += delbar->coeffs.squaredNorm();
    return std::sqrt(s);
}

double FieldDerivatives::d_star_norm() const {
    if (d_star) return d_star->norm();
    double s = 0.0;
    if (del_star) s += del_star->coeffs.squaredNorm();
    if (delbar_star) s += delbar_star->coeffs.squaredNorm();
    return std::sqrt(s);
}

FieldDerivatives assemble_d_and_dstar(const FormField& f, const RVec& x) {
    FieldDerivatives out;
    if (!f.config.kahler) {
        int n = f.config.n, k = f.config.k;
        Mat d = f.eval_nabla_coords(x);
        ExteriorSpace fib(n, k, ScalarKind::cplx);
        ExteriorSpace one(n, 1, ScalarKind::cplx);
        if (k + 1 <= n) {
            FormVector acc = FormVector::zero(VectorSpace(ExteriorSpace(n, k + 1, ScalarKind::cplx)));
            for (int mu = 0; mu < n; ++mu)
                acc = acc + wedge(FormVector(VectorSpace(one), unit_axis(n, mu)),
                                  FormVector(VectorSpace(fib), d.col(mu)));
            out.d = std::move(acc);
        }
        if (k >= 1) {
            FormVector acc = FormVector::zero(VectorSpace(ExteriorSpace(n, k - 1, ScalarKind::cplx)));
            for (int mu = 0; mu < n; ++mu)
                acc = acc - contract(unit_axis(n, mu), FormVector(VectorSpace(fib), d.col(mu)));
            out.d_star = std::move(acc);
        }
    } else {
        require(f.kcomp != nullptr, "field eval: missing backing");
        int n = f.config.n, p = f.config.p, q = f.config.q;
        BidegreeSpace fib(n, p, q);
        VectorSpace vfib{FiberSpace(fib)};
        int fd = fib.dim();
        std::vector<FormVector> zc, wc;  // nabla along Z_j resp. W_j
        for (int j = 0; j < n; ++j) {
            Vec z(fd), w(fd);
            for (int t = 0; t < fd; ++t) {
                z[t] = kSqrt2 * f.kcomp->dz[static_cast<size_t>(t)][static_cast<size_t>(j)].eval(x);
                w[t] = kSqrt2 *
                       f.kcomp->dzbar[static_cast<size_t>(t)][static_cast<size_t>(j)].eval(x);
            }
            zc.emplace_back(vfib, std::move(z));
            wc.emplace_back(vfib, std::move(w));
        }
        if (p + 1 <= n) {
            FormVector acc = FormVector::zero(VectorSpace(BidegreeSpace(n, p + 1, q)));
            for (int j = 0; j < n; ++j) acc = acc + wedge_u(j + 1, zc[static_cast<size_t>(j)]);
            out.del = std::move(acc);
        }
        if (q + 1 <= n) {
            FormVector acc = FormVector::zero(VectorSpace(BidegreeSpace(n, p, q + 1)));
            for (int j = 0; j < n; ++j) acc = acc + wedge_v(j + 1, wc[static_cast<size_t>(j)]);
            out.delbar = std::move(acc);
        }
        if (p >= 1) {
            FormVector acc = FormVector::zero(VectorSpace(BidegreeSpace(n, p - 1, q)));
            for (int j = 0; j < n; ++j) acc = acc - contract_Z(j + 1, wc[static_cast<size_t>(j)]);
            out.del_star = std::move(acc);
        }
        if (q >= 1) {
            FormVector acc = FormVector::zero(VectorSpace(BidegreeSpace(n, p, q - 1)));
            for (int j = 0; j < n; ++j) acc = acc - contract_W(j + 1, zc[static_cast<size_t>(j)]);
            out.delbar_star = std::move(acc);
        }
    }
    return out;
}

double harmonic_residual_at(const FormField& f, const RVec& x) {
    FieldDerivatives der = assemble_d_and_dstar(f, x);
    switch (f.family) {
        case OperatorFamily::hodge:
            return der.d_norm() + der.d_star_norm();
        case OperatorFamily::dolbeault_1:
            require(f.config.kahler, "harmonic_residual: dolbeault family needs a bidegree field");
            return (der.del ? der.del->norm() : 0.0) + (der.del_star ? der.del_star->norm() : 0.0);
        case OperatorFamily::dolbeault_2:
            require(f.config.kahler, "harmonic_residual: dolbeault family needs a bidegree field");
            return (der.delbar ? der.delbar->norm() : 0.0) +
                   (der.delbar_star ? der.delbar_star->norm() : 0.0);
    }
    fail("harmonic_residual: unknown family");
}

double harmonic_residual(const FormField& f) {
    double worst = 0.0;
    for (const RVec& x : make_grid(f.ambient_dim(), f.grid))
        worst = std::max(worst, harmonic_residual_at(f, x));
    return worst;
}

RatioSample kato_ratio(const FormField& f, const RVec& x, double omega_scale,
                       double nabla_scale) {
    RatioSample r;
    FormVector omega = f.eval(x);
    Mat d = f.eval_nabla_coords(x);
    r.omega_norm = omega.norm();
    r.nabla_norm = d.norm();
    if (r.omega_norm <= kUndefinedFrac * omega_scale ||
        r.nabla_norm <= kUndefinedFrac * nabla_scale)
        return r;
    RVec t(d.cols());
    for (int mu = 0; mu < d.cols(); ++mu) t[mu] = omega.coeffs.dot(d.col(mu)).real();
    r.ratio = (t.norm() / r.omega_norm) / r.nabla_norm;
    r.defined = true;
    return r;
}

SweepResult sweep_ratio(const FormField& f) {
    std::vector<RVec> pts = make_grid(f.ambient_dim(), f.grid);
    SweepResult r;
    for (const RVec& x : pts) {
        r.omega_scale = std::max(r.omega_scale, f.eval(x).norm());
        r.nabla_scale = std::max(r.nabla_scale, f.eval_nabla_coords(x).norm());
        r.max_harmonic_residual = std::max(r.max_harmonic_residual, harmonic_residual_at(f, x));
    }
    r.argmax = RVec::Zero(f.ambient_dim());
    for (const RVec& x : pts) {
        RatioSample s = kato_ratio(f, x, r.omega_scale, r.nabla_scale);
        if (!s.defined) {
            ++r.undefined;
            continue;
        }
        ++r.defined;
        if (s.ratio > r.max_ratio) {
            r.max_ratio = s.ratio;
            r.argmax = x;
        }
    }
    return r;
}

double equality_residual_riemannian(const FormField& f, const RVec& x) {
    require(!f.config.kahler, "equality_residual_riemannian: needs a riemannian field");
    FormVector omega = f.eval(x);
    FormVector nabla = f.eval_nabla(x);
    double on = omega.norm();
    if (on < 1e-14) return nabla.norm();

    Mat d = f.eval_nabla_coords(x);
    RVec t(d.cols());
    for (int mu = 0; mu < d.cols(); ++mu) t[mu] = omega.coeffs.dot(d.col(mu)).real() / on;
    if (t.norm() < 1e-14) return nabla.norm();
    RVec xi0 = t / t.norm();

    // Candidate family: multiples of the part of xi0 (x) omega orthogonal to
    // the combined theta image.
    int fd = fiber_dim(f.config.fiber());
    Vec s = slot_coefficients(f.config, xi0);
    Vec t0(nabla.coeffs.size());
    for (int c = 0; c < s.size(); ++c) t0.segment(c * fd, fd) = s[c] * omega.coeffs;

    ProjectionPair pp = projection_pair(f.config, OperatorFamily::hodge);
    Vec proj = t0 - pp.pi.m.adjoint() * (pp.pi.m * t0);
    double pn2 = proj.squaredNorm();
    if (pn2 < 1e-28) return nabla.norm();
    double fhat = proj.dot(nabla.coeffs).real() / pn2;
    return (nabla.coeffs - fhat * proj).norm();
}

double equality_residual_kahler(const FormField& f, const RVec& x) {
    require(f.config.kahler, "equality_residual_kahler: needs a bidegree field");
    int n = f.config.n, p = f.config.p, q = f.config.q;
    bool holo_side = (q == 0 || p == n);
    bool anti_side = (p == 0 || q == n);
    require(holo_side || anti_side,
            "equality_residual_kahler: only extreme bidegrees have a one-sided equality family");
    FormVector omega = f.eval(x);
    FormVector nabla = f.eval_nabla(x);
    double on2 = omega.coeffs.squaredNorm();
    if (on2 < 1e-28) return nabla.norm();
    int fd = fiber_dim(f.config.fiber());
    int lo = holo_side ? 0 : n;
    Vec cand = Vec::Zero(nabla.coeffs.size());
    for (int j = lo; j < lo + n; ++j) {
        cd c = omega.coeffs.dot(nabla.coeffs.segment(j * fd, fd)) / on2;
        cand.segment(j * fd, fd) = c * omega.coeffs;
    }
    return (nabla.coeffs - cand).norm();
}

RatioSample combined_kato_ratio(const FormField& a, const FormField& b, const RVec& x,
                                double omega_scale, double nabla_scale) {
    require(a.ambient_dim() == b.ambient_dim(),
            "combined_kato_ratio: fields live over different ambient spaces");
    RatioSample r;
    FormVector wa = a.eval(x), wb = b.eval(x);
    Mat da = a.eval_nabla_coords(x), db = b.eval_nabla_coords(x);
    r.omega_norm = std::sqrt(wa.coeffs.squaredNorm() + wb.coeffs.squaredNorm());
    r.nabla_norm = std::sqrt(da.squaredNorm() + db.squaredNorm());
    if (r.omega_norm <= kUndefinedFrac * omega_scale ||
        r.nabla_norm <= kUndefinedFrac * nabla_scale)
        return r;
    RVec t(da.cols());
    for (int mu = 0; mu < da.cols(); ++mu)
        t[mu] = wa.coeffs.dot(da.col(mu)).real() + wb.coeffs.dot(db.col(mu)).real();
    r.ratio = (t.norm() / r.omega_norm) / r.nabla_norm;
    r.defined = true;
    return r;
}

SweepResult sweep_combined_ratio(const FormField& a, const FormField& b) {
    require(a.ambient_dim() == b.ambient_dim(),
            "sweep_combined_ratio: fields live over different ambient spaces");
    std::vector<RVec> pts = make_grid(a.ambient_dim(), a.grid);
    SweepResult r;
    for (const RVec& x : pts) {
        double on = std::sqrt(a.eval(x).coeffs.squaredNorm() + b.eval(x).coeffs.squaredNorm());
        double nn = std::sqrt(a.eval_nabla_coords(x).squaredNorm() +
                              b.eval_nabla_coords(x).squaredNorm());
        r.omega_scale = std::max(r.omega_scale, on);
        r.nabla_scale = std::max(r.nabla_scale, nn);
    }
    r.argmax = RVec::Zero(a.ambient_dim());
    for (const RVec& x : pts) {
        RatioSample s = combined_kato_ratio(a, b, x, r.omega_scale, r.nabla_scale);
        if (!s.defined) {
            ++r.undefined;
            continue;
        }
        ++r.defined;
        if (s.ratio > r.max_ratio) {
            r.max_ratio = s.ratio;
            r.argmax = x;
        }
    }
    return r;
}

FiniteDiffReport finite_diff_check(const FormField& f, const RVec& x, double h) {
    require(h > 0, "finite_diff_check: step must be positive");
    Mat d = f.eval_nabla_coords(x);
    auto residual = [&](double hh) {
        double worst = 0.0;
        for (int mu = 0; mu < d.cols(); ++mu) {
            RVec xp = x, xm = x;
            xp[mu] += hh;
            xm[mu] -= hh;
            Vec fd = (f.eval(xp).coeffs - f.eval(xm).coeffs) / (2.0 * hh);
            worst = std::max(worst, (fd - d.col(mu)).norm());
        }
        return worst;
    };
    FiniteDiffReport rep;
    rep.residual_coarse = residual(h);
    rep.residual_fine = residual(h / 2.0);
    rep.exact = rep.residual_coarse < kFdExact && rep.residual_fine < kFdExact;
    if (!rep.exact && rep.residual_fine > 0.0)
        rep.order = std::log2(rep.residual_coarse / rep.residual_fine);
    return rep;
}

FormField star_transform(const FormField& f) {
    require(!f.config.kahler, "star_transform: needs a riemannian field");
    require(f.rpoly != nullptr, "star_transform: field lacks polynomial backing");
    int n = f.config.n, k = f.config.k;
    Mat s = hodge_star_matrix(n, k);
    FormField g;
    g.name = f.name + "_star";
    g.config = SpaceConfig::riemannian(n, n - k);
    g.grid = f.grid;
    g.rpoly = std::make_shared<std::vector<Polynomial>>();
    for (int j = 0; j < s.rows(); ++j) {
        Polynomial acc(n);
        for (int i = 0; i < s.cols(); ++i) {
            double c = s(j, i).real();
            if (c != 0.0) acc = acc + (*f.rpoly)[static_cast<size_t>(i)].scaled(c);
        }
        g.rpoly->push_back(std::move(acc));
    }
    for (const auto& p : *g.rpoly) g.rcomp.push_back(field_of(p));
    return g;
}

StarParallelReport hodge_star_parallel_check(const FormField& f) {
    FormField g = star_transform(f);
    Mat s = hodge_star_matrix(f.config.n, f.config.k);
    StarParallelReport rep;
    for (const RVec& x : make_grid(f.ambient_dim(), f.grid)) {
        Mat df = f.eval_nabla_coords(x);
        Mat dg = g.eval_nabla_coords(x);
        for (int mu = 0; mu < df.cols(); ++mu)
            rep.max_commutator = std::max(rep.max_commutator, (dg.col(mu) - s * df.col(mu)).norm());
        rep.max_isometry_dev =
            std::max(rep.max_isometry_dev, std::abs(g.eval(x).norm() - f.eval(x).norm()));
    }
    return rep;
}

}  // namespace rkato
