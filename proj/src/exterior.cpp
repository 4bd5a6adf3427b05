#include "rkato/exterior.hpp"

namespace rkato {

namespace {

const ExteriorSpace& exterior_of(const FormVector& w, const char* who) {
    require(w.space.cot == CotangentKind::none && w.space.summands.size() == 1,
            std::string(who) + ": expected a plain exterior form");
    const auto* e = std::get_if<ExteriorSpace>(&w.space.summands[0]);
    require(e != nullptr, std::string(who) + ": expected a plain exterior form");
    return *e;
}

const BidegreeSpace& bidegree_of(const FormVector& w, const char* who) {
    require(w.space.cot == CotangentKind::none && w.space.summands.size() == 1,
            std::string(who) + ": expected a plain bidegree form");
    const auto* b = std::get_if<BidegreeSpace>(&w.space.summands[0]);
    require(b != nullptr, std::string(who) + ": expected a plain bidegree form");
    return *b;
}

ScalarKind join_scalar(ScalarKind a, ScalarKind b) {
    return (a == ScalarKind::cplx || b == ScalarKind::cplx) ? ScalarKind::cplx
                                                            : ScalarKind::real;
}

}  // namespace

FormVector wedge(const FormVector& a, const FormVector& b) {
    const ExteriorSpace& sa = exterior_of(a, "wedge");
    const ExteriorSpace& sb = exterior_of(b, "wedge");
    require(sa.n() == sb.n(), "wedge: ambient dimension mismatch");
    require(sa.k() + sb.k() <= sa.n(), "wedge: degree overflow (k + l > n)");
    ExteriorSpace target(sa.n(), sa.k() + sb.k(), join_scalar(sa.scalar(), sb.scalar()));
    Vec out = Vec::Zero(target.dim());
    for (int i = 0; i < sa.dim(); ++i) {
        cd ca = a.coeffs[i];
        if (ca == cd(0)) continue;
        for (int j = 0; j < sb.dim(); ++j) {
            cd cb = b.coeffs[j];
            if (cb == cd(0)) continue;
            int s = merge_sign(sa.blade(i), sb.blade(j));
            if (!s) continue;
            out[target.index_of(sa.blade(i) | sb.blade(j))] += double(s) * ca * cb;
        }
    }
    return FormVector(VectorSpace(target), std::move(out));
}

FormVector contract(const Vec& v, const FormVector& w) {
    const ExteriorSpace& sw = exterior_of(w, "contract");
    require(v.size() == sw.n(), "contract: covector length must equal n");
    require(sw.k() >= 1, "contract: degree must be at least 1");
    ExteriorSpace target(sw.n(), sw.k() - 1, sw.scalar());
    Vec out = Vec::Zero(target.dim());
    for (int j = 0; j < sw.dim(); ++j) {
        cd cw = w.coeffs[j];
        if (cw == cd(0)) continue;
        Mask I = sw.blade(j);
        for (int i : blade_indices(I)) {
            int s = remove_sign(i, I);
            out[target.index_of(I & ~blade_bit(i))] +=
                double(s) * std::conj(v[i - 1]) * cw;
        }
    }
    return FormVector(VectorSpace(target), std::move(out));
}

Mat hodge_star_matrix(int n, int k) {
    ExteriorSpace src(n, k);
    ExteriorSpace dst(n, n - k);
    Mat m = Mat::Zero(dst.dim(), src.dim());
    Mask full = (n == 31) ? ~Mask{0} >> 1 : (Mask{1} << n) - 1;
    for (int i = 0; i < src.dim(); ++i) {
        Mask I = src.blade(i);
        Mask Ic = full & ~I;
        m(dst.index_of(Ic), i) = double(merge_sign(I, Ic));
    }
    return m;
}

FormVector hodge_star(const FormVector& w) {
    const ExteriorSpace& s = exterior_of(w, "hodge_star");
    require(s.scalar() == ScalarKind::real, "hodge_star: requires a real exterior space");
    ExteriorSpace target(s.n(), s.n() - s.k());
    return FormVector(VectorSpace(target), hodge_star_matrix(s.n(), s.k()) * w.coeffs);
}

ComplexCovector bidegree_split(const RVec& xi) {
    require(xi.size() > 0 && xi.size() % 2 == 0,
            "bidegree_split: covector length must be even (ambient R^{2n})");
    ComplexCovector out;
    out.n = static_cast<int>(xi.size()) / 2;
    out.real_part = xi;
    out.holo = Vec(out.n);
    out.antiholo = Vec(out.n);
    const double r = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < out.n; ++j) {
        out.holo[j] = cd(xi[j] * r, -xi[out.n + j] * r);
        out.antiholo[j] = std::conj(out.holo[j]);
    }
    return out;
}

RVec bidegree_join(const ComplexCovector& xi) {
    RVec out(2 * xi.n);
    const double r = std::sqrt(2.0);
    for (int j = 0; j < xi.n; ++j) {
        out[j] = r * xi.holo[j].real();
        out[xi.n + j] = -r * xi.holo[j].imag();
    }
    return out;
}

namespace {

// Shared body for the four bidegree blade operations: act on the (I or J)
// factor with an insert/remove, with an optional crossing sign (-1)^p.
enum class Which { holo, antiholo };
enum class Op { raise_deg, lower_deg };

FormVector bidegree_step(int i, const FormVector& w, Which which, Op op, const char* who) {
    const BidegreeSpace& s = bidegree_of(w, who);
    require(i >= 1 && i <= s.n(), std::string(who) + ": frame index out of range");
    int p = s.p(), q = s.q();
    if (which == Which::holo)
        p += (op == Op::raise_deg) ? 1 : -1;
    else
        q += (op == Op::raise_deg) ? 1 : -1;
    require(p >= 0 && p <= s.n() && q >= 0 && q <= s.n(),
            std::string(who) + ": target bidegree out of range");
    BidegreeSpace target(s.n(), p, q);
    Vec out = Vec::Zero(target.dim());
    double cross = (which == Which::antiholo && (s.p() & 1)) ? -1.0 : 1.0;
    for (int b = 0; b < s.dim(); ++b) {
        cd c = w.coeffs[b];
        if (c == cd(0)) continue;
        auto [I, J] = s.blade(b);
        Mask& act = (which == Which::holo) ? I : J;
        int sgn = (op == Op::raise_deg) ? insert_sign(i, act) : remove_sign(i, act);
        if (!sgn) continue;
        act = (op == Op::raise_deg) ? (act | blade_bit(i)) : (act & ~blade_bit(i));
        out[target.index_of(I, J)] += cross * double(sgn) * c;
    }
    return FormVector(VectorSpace(target), std::move(out));
}

}  // namespace

FormVector wedge_u(int i, const FormVector& w) {
    return bidegree_step(i, w, Which::holo, Op::raise_deg, "wedge_u");
}
FormVector wedge_v(int i, const FormVector& w) {
    return bidegree_step(i, w, Which::antiholo, Op::raise_deg, "wedge_v");
}
FormVector contract_Z(int i, const FormVector& w) {
    return bidegree_step(i, w, Which::holo, Op::lower_deg, "contract_Z");
}
FormVector contract_W(int i, const FormVector& w) {
    return bidegree_step(i, w, Which::antiholo, Op::lower_deg, "contract_W");
}

}  // namespace rkato
