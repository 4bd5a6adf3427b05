#include "rkato/steinweiss.hpp"

#include <sstream>

#include "rkato/group.hpp"

namespace rkato {

SpaceConfig SpaceConfig::riemannian(int n, int k) {
    SpaceConfig c;
    c.kahler = false;
    c.n = n;
    c.k = k;
    (void)ExteriorSpace(n, k);  // validates ranges
    return c;
}

SpaceConfig SpaceConfig::bidegree(int n, int p, int q) {
    SpaceConfig c;
    c.kahler = true;
    c.n = n;
    c.p = p;
    c.q = q;
    (void)BidegreeSpace(n, p, q);
    return c;
}

FiberSpace SpaceConfig::fiber() const {
    if (kahler) return BidegreeSpace(n, p, q);
    return ExteriorSpace(n, k);
}

std::string SpaceConfig::name() const {
    std::ostringstream os;
    if (kahler)
        os << "n=" << n << " (p,q)=(" << p << "," << q << ")";
    else
        os << "n=" << n << " k=" << k;
    return os.str();
}

std::string diffop_name(DiffOp op) {
    switch (op) {
        case DiffOp::d: return "d";
        case DiffOp::d_star: return "d_star";
        case DiffOp::del: return "del";
        case DiffOp::delbar: return "delbar";
        case DiffOp::del_star: return "del_star";
        case DiffOp::delbar_star: return "delbar_star";
    }
    return "?";
}

std::string family_name(OperatorFamily f) {
    switch (f) {
        case OperatorFamily::hodge: return "hodge";
        case OperatorFamily::dolbeault_1: return "dolbeault_1";
        case OperatorFamily::dolbeault_2: return "dolbeault_2";
    }
    return "?";
}

LinearMap::LinearMap(VectorSpace dom, VectorSpace cod, Mat mat)
    : domain(std::move(dom)), codomain(std::move(cod)), m(std::move(mat)) {
    require(m.cols() == domain.dim() && m.rows() == codomain.dim(),
            "linear map: matrix shape does not match spaces");
}

LinearMap lm_compose(const LinearMap& a, const LinearMap& b) {
    require(b.codomain == a.domain, "compose: inner spaces do not match");
    return LinearMap(b.domain, a.codomain, a.m * b.m);
}

LinearMap lm_adjoint(const LinearMap& a) {
    return LinearMap(a.codomain, a.domain, a.m.adjoint());
}

LinearMap lm_scale(cd s, const LinearMap& a) {
    return LinearMap(a.domain, a.codomain, s * a.m);
}

int diffop_degree_shift(DiffOp op) {
    switch (op) {
        case DiffOp::d:
        case DiffOp::del:
        case DiffOp::delbar: return +1;
        default: return -1;
    }
}

namespace {

void check_op_config(const OperatorKind& kind) {
    bool riem = (kind.op == DiffOp::d || kind.op == DiffOp::d_star);
    require(riem == !kind.config.kahler,
            "operator kind: " + diffop_name(kind.op) +
                " does not act on this space variant");
}

// Source and target fibers of an operator; throws when the target degree
// leaves [0, n].
FiberSpace op_source(const OperatorKind& kind) { return kind.config.fiber(); }

FiberSpace op_target(const OperatorKind& kind) {
    const SpaceConfig& c = kind.config;
    switch (kind.op) {
        case DiffOp::d: return ExteriorSpace(c.n, c.k + 1);
        case DiffOp::d_star: return ExteriorSpace(c.n, c.k - 1);
        case DiffOp::del: return BidegreeSpace(c.n, c.p + 1, c.q);
        case DiffOp::delbar: return BidegreeSpace(c.n, c.p, c.q + 1);
        case DiffOp::del_star: return BidegreeSpace(c.n, c.p - 1, c.q);
        case DiffOp::delbar_star: return BidegreeSpace(c.n, c.p, c.q - 1);
    }
    fail("operator kind: unknown op");
}

// Per-slot fiber action of the flattened symbol, without the factor i / -i:
// slot c acts by a wedge or a contraction against the frame element c.
FormVector slot_action(const OperatorKind& kind, int slot, const FormVector& blade) {
    const SpaceConfig& c = kind.config;
    switch (kind.op) {
        case DiffOp::d: {
            Vec e = Vec::Zero(c.n);
            e[slot] = 1.0;
            ExteriorSpace one(c.n, 1);
            return wedge(FormVector(VectorSpace(one), e), blade);
        }
        case DiffOp::d_star: {
            Vec e = Vec::Zero(c.n);
            e[slot] = 1.0;
            return contract(e, blade);
        }
        case DiffOp::del:
            return (slot < c.n) ? wedge_u(slot + 1, blade)
                                : FormVector::zero(VectorSpace(op_target(kind)));
        case DiffOp::delbar:
            return (slot >= c.n) ? wedge_v(slot - c.n + 1, blade)
                                 : FormVector::zero(VectorSpace(op_target(kind)));
        case DiffOp::del_star:
            return (slot >= c.n) ? contract_Z(slot - c.n + 1, blade)
                                 : FormVector::zero(VectorSpace(op_target(kind)));
        case DiffOp::delbar_star:
            return (slot < c.n) ? contract_W(slot + 1, blade)
                                : FormVector::zero(VectorSpace(op_target(kind)));
    }
    fail("operator kind: unknown op");
}

cd symbol_phase(DiffOp op) {
    // i for the wedge legs, -i for the contraction legs.
    return (diffop_degree_shift(op) > 0) ? cd(0, 1) : cd(0, -1);
}

}  // namespace

LinearMap symbol_flat(const OperatorKind& kind) {
    check_op_config(kind);
    FiberSpace src = op_source(kind);
    FiberSpace dst = op_target(kind);
    VectorSpace dom = tensor_space(kind.config.cotangent(), src);
    VectorSpace cod{dst};
    int nslots = dom.cot_dim();
    int fd = fiber_dim(src);
    Mat m = Mat::Zero(cod.dim(), dom.dim());
    cd phase = symbol_phase(kind.op);
    for (int slot = 0; slot < nslots; ++slot) {
        for (int b = 0; b < fd; ++b) {
            Vec unit = Vec::Zero(fd);
            unit[b] = 1.0;
            FormVector img = slot_action(kind, slot, FormVector(VectorSpace(src), unit));
            m.col(slot * fd + b) = phase * img.coeffs;
        }
    }
    return LinearMap(dom, cod, std::move(m));
}

Vec slot_coefficients(const SpaceConfig& config, const RVec& xi) {
    if (!config.kahler) {
        require(xi.size() == config.n, "symbol: covector length must equal n");
        return xi.cast<cd>();
    }
    require(xi.size() == 2 * config.n,
            "symbol: covector length must equal 2n for bidegree configs");
    ComplexCovector split = bidegree_split(xi);
    Vec s(2 * config.n);
    s.head(config.n) = split.holo;
    s.tail(config.n) = split.antiholo;
    return s;
}

LinearMap symbol(const OperatorKind& kind, const RVec& xi) {
    check_op_config(kind);
    LinearMap flat = symbol_flat(kind);
    Vec s = slot_coefficients(kind.config, xi);
    int fd = fiber_dim(kind.config.fiber());
    Mat m = Mat::Zero(flat.codomain.dim(), fd);
    for (int slot = 0; slot < s.size(); ++slot)
        if (s[slot] != cd(0)) m += s[slot] * flat.m.middleCols(slot * fd, fd);
    return LinearMap(VectorSpace(op_source(kind)), flat.codomain, std::move(m));
}

double canonical_scale(const OperatorKind& kind) {
    check_op_config(kind);
    const SpaceConfig& c = kind.config;
    int mult = 0;
    switch (kind.op) {
        case DiffOp::d: mult = c.k + 1; break;
        case DiffOp::d_star: mult = c.n - c.k + 1; break;
        case DiffOp::del: mult = c.p + 1; break;
        case DiffOp::delbar: mult = c.q + 1; break;
        case DiffOp::del_star: mult = c.n - c.p + 1; break;
        case DiffOp::delbar_star: mult = c.n - c.q + 1; break;
    }
    return 1.0 / std::sqrt(double(mult));
}

namespace {

LinearMap theta_for(const OperatorKind& kind) {
    LinearMap flat = symbol_flat(kind);
    return lm_adjoint(lm_scale(cd(0, -1) * canonical_scale(kind), flat));
}

}  // namespace

LinearMap theta1(int n, int k) {
    return theta_for({DiffOp::d, SpaceConfig::riemannian(n, k)});
}

LinearMap theta2(int n, int k) {
    return theta_for({DiffOp::d_star, SpaceConfig::riemannian(n, k)});
}

LinearMap theta_kahler(DiffOp which, int n, int p, int q) {
    require(which != DiffOp::d && which != DiffOp::d_star,
            "theta_kahler: expected a bidegree operator");
    return theta_for({which, SpaceConfig::bidegree(n, p, q)});
}

namespace {

// The raising/lowering theta legs of a family that exist for this config.
struct Legs {
    std::optional<LinearMap> up, down;
};

Legs family_legs(const SpaceConfig& config, OperatorFamily family) {
    Legs legs;
    auto mk = [&](DiffOp op) { return theta_for({op, config}); };
    if (family == OperatorFamily::hodge) {
        require(!config.kahler, "projection_pair: hodge family needs a riemannian config");
        if (config.k + 1 <= config.n) legs.up = mk(DiffOp::d);
        if (config.k - 1 >= 0) legs.down = mk(DiffOp::d_star);
    } else if (family == OperatorFamily::dolbeault_1) {
        require(config.kahler, "projection_pair: dolbeault families need a bidegree config");
        if (config.p + 1 <= config.n) legs.up = mk(DiffOp::del);
        if (config.p - 1 >= 0) legs.down = mk(DiffOp::del_star);
    } else {
        require(config.kahler, "projection_pair: dolbeault families need a bidegree config");
        if (config.q + 1 <= config.n) legs.up = mk(DiffOp::delbar);
        if (config.q - 1 >= 0) legs.down = mk(DiffOp::delbar_star);
    }
    return legs;
}

}  // namespace

ProjectionPair projection_pair(const SpaceConfig& config, OperatorFamily family) {
    Legs legs = family_legs(config, family);
    require(legs.up || legs.down, "projection_pair: no legs exist for this config");

    VectorSpace dom = tensor_space(config.cotangent(), config.fiber());
    int N = dom.dim();
    std::vector<FiberSpace> targets;
    int cols = 0;
    if (legs.up) {
        targets.push_back(legs.up->domain.summands[0]);
        cols += legs.up->domain.dim();
    }
    if (legs.down) {
        targets.push_back(legs.down->domain.summands[0]);
        cols += legs.down->domain.dim();
    }
    Mat T(N, cols);
    int off = 0;
    if (legs.up) {
        T.middleCols(off, legs.up->domain.dim()) = legs.up->m;
        off += legs.up->domain.dim();
    }
    if (legs.down) T.middleCols(off, legs.down->domain.dim()) = legs.down->m;

    ProjectionPair out;
    out.has_raising = legs.up.has_value();
    out.has_lowering = legs.down.has_value();
    out.pi = LinearMap(dom, sum_space(targets), T.adjoint());

    // Orthonormal basis of the complement of im(T) via a rank-revealing QR.
    Eigen::ColPivHouseholderQR<Mat> qr(T);
    qr.setThreshold(1e-10);
    require(qr.rank() == cols, "projection_pair: theta legs lost rank");
    Mat Q = qr.householderQ() * Mat::Identity(N, N);
    Mat Q2 = Q.rightCols(N - cols);
    out.pi_perp = LinearMap(dom, VectorSpace(FiberSpace(AbstractSpace{int(N - cols), "F_perp"})),
                            Q2.adjoint());
    return out;
}

IdentityReport verify_linalg_identities(int n, int k, std::uint64_t seed) {
    (void)ExteriorSpace(n, k);
    IdentityReport rep;
    Rng rng(seed);
    ExteriorSpace sk(n, k, ScalarKind::cplx);
    ExteriorSpace one(n, 1, ScalarKind::cplx);
    const int omega_samples = 5;

    for (int trial = 0; trial < omega_samples; ++trial) {
        Vec wc(sk.dim());
        for (int i = 0; i < sk.dim(); ++i) wc[i] = rng.cgaussian();
        FormVector omega(VectorSpace(sk), wc);

        if (k + 1 <= n) {
            ExteriorSpace tgt(n, k + 1, ScalarKind::cplx);
            for (int p = 1; p <= n; ++p) {
                Vec xi = Vec::Zero(n);
                xi[p - 1] = 1.0;
                FormVector xf(VectorSpace(one), xi);
                FormVector lhs_form = wedge(xf, omega);
                for (int bi = 0; bi < tgt.dim(); ++bi) {
                    Mask I = tgt.blade(bi);
                    cd lhs = lhs_form.coeffs[tgt.index_of(I)];
                    cd rhs = 0;
                    int m = 0;
                    for (int idx : blade_indices(I)) {
                        double sgn = (m % 2 == 0) ? 1.0 : -1.0;  // (-1)^(m-1), 1-based
                        ++m;
                        if (idx == p)
                            rhs += sgn * omega.coeffs[sk.index_of(I & ~blade_bit(idx))];
                    }
                    rep.max_residual_a = std::max(rep.max_residual_a, std::abs(lhs - rhs));
                    ++rep.cases_a;
                }
            }
        }

        if (k == 0) {
            rep.b_skipped = true;
        } else {
            ExteriorSpace tgt(n, k - 1, ScalarKind::cplx);
            for (int p = 1; p <= n; ++p) {
                Vec xi = Vec::Zero(n);
                xi[p - 1] = 1.0;
                FormVector contracted = contract(xi, omega);
                for (int bt = 0; bt < tgt.dim(); ++bt) {
                    Mask T = tgt.blade(bt);
                    cd lhs = contracted.coeffs[bt];
                    // rhs: <omega, e_p ^ e_T>
                    cd rhs = 0;
                    int s = insert_sign(p, T);
                    if (s) rhs = double(s) * omega.coeffs[sk.index_of(T | blade_bit(p))];
                    rep.max_residual_b = std::max(rep.max_residual_b, std::abs(lhs - rhs));
                    ++rep.cases_b;
                }
            }
        }
    }
    return rep;
}

UniquenessReport uniqueness_scan(const OperatorKind& kind,
                                 const std::vector<double>& candidates, double tol) {
    UniquenessReport rep;
    rep.canonical = canonical_scale(kind);
    LinearMap flat = symbol_flat(kind);
    Mat gram = flat.m * flat.m.adjoint();  // = multiplicity * id on the target
    Mat id = Mat::Identity(gram.rows(), gram.cols());
    auto residual = [&](double c) {
        return ((c * c) * gram - id).cwiseAbs().maxCoeff();
    };
    for (double c : candidates) {
        if (residual(c) < tol) {
            rep.passing.push_back(c);
            rep.worst_pass_gap =
                std::max(rep.worst_pass_gap, std::abs(std::abs(c) - rep.canonical));
        }
    }
    rep.canonical_passes = residual(rep.canonical) < tol;
    rep.exact_match = rep.canonical_passes && rep.worst_pass_gap <= tol;
    return rep;
}

double image_overlap(const LinearMap& a, const LinearMap& b) {
    require(a.codomain == b.codomain, "image_overlap: codomain mismatch");
    auto ortho = [](const Mat& m) {
        require(m.norm() > 0, "image_overlap: zero map has no image");
        Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
        double smax = svd.singularValues()[0];
        int r = 0;
        for (int i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()[i] > 1e-12 * smax) ++r;
        return Mat(svd.matrixU().leftCols(r));
    };
    Mat qa = ortho(a.m), qb = ortho(b.m);
    Eigen::JacobiSVD<Mat> svd(qa.adjoint() * qb);
    return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
}

}  // namespace rkato
