#include "rkato/spaces.hpp"

#include <numeric>
#include <sstream>

namespace rkato {

std::vector<int> blade_indices(Mask m) {
    std::vector<int> out;
    for (int i = 1; m; ++i, m >>= 1)
        if (m & 1) out.push_back(i);
    return out;
}

std::string blade_name(Mask m) {
    if (!m) return "1";
    std::ostringstream os;
    os << "e_{";
    bool first = true;
    for (int i : blade_indices(m)) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << "}";
    return os.str();
}

std::vector<Mask> enumerate_blades(int n, int k) {
    std::vector<Mask> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= blade_bit(i);
        out.push_back(m);
        if (k == 0) break;
        // advance the rightmost index that can still move
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int j = pos + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    k = std::min(k, n - k);
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void fail(const std::string& msg) { throw std::invalid_argument(msg); }

ExteriorSpace::ExteriorSpace(int n, int k, ScalarKind scalar)
    : n_(n), k_(k), scalar_(scalar) {
    require(n >= 1 && n <= 31, "exterior space: n out of range");
    require(k >= 0 && k <= n, "exterior space: degree k out of range [0, n]");
    basis_ = enumerate_blades(n, k);
    for (int i = 0; i < dim(); ++i) pos_[basis_[static_cast<size_t>(i)]] = i;
}

int ExteriorSpace::index_of(Mask m) const {
    auto it = pos_.find(m);
    require(it != pos_.end(), "exterior space: blade not in basis");
    return it->second;
}

BidegreeSpace::BidegreeSpace(int n, int p, int q) : n_(n), p_(p), q_(q) {
    require(n >= 1 && n <= 31, "bidegree space: n out of range");
    require(p >= 0 && p <= n, "bidegree space: p out of range [0, n]");
    require(q >= 0 && q <= n, "bidegree space: q out of range [0, n]");
    auto ps = enumerate_blades(n, p);
    auto qs = enumerate_blades(n, q);
    for (Mask I : ps)
        for (Mask J : qs) basis_.emplace_back(I, J);
    for (int i = 0; i < dim(); ++i) {
        auto [I, J] = basis_[static_cast<size_t>(i)];
        pos_[(static_cast<std::uint64_t>(I) << 32) | J] = i;
    }
}

int BidegreeSpace::index_of(Mask I, Mask J) const {
    auto it = pos_.find((static_cast<std::uint64_t>(I) << 32) | J);
    require(it != pos_.end(), "bidegree space: blade pair not in basis");
    return it->second;
}

int fiber_dim(const FiberSpace& f) {
    return std::visit([](const auto& s) { return s.dim(); }, f);
}

std::string fiber_name(const FiberSpace& f) {
    std::ostringstream os;
    if (const auto* e = std::get_if<ExteriorSpace>(&f))
        os << "Lambda^" << e->k() << "(R^" << e->n() << ")";
    else if (const auto* b = std::get_if<BidegreeSpace>(&f))
        os << "Lambda^{" << b->p() << "," << b->q() << "}(C^" << b->n() << ")";
    else
        os << std::get<AbstractSpace>(f).label << "[" << fiber_dim(f) << "]";
    return os.str();
}

bool same_fiber(const FiberSpace& a, const FiberSpace& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            return x == std::get<T>(b);
        },
        a);
}

int VectorSpace::cot_dim() const {
    if (cot == CotangentKind::none) return 0;
    require(summands.size() == 1, "cotangent factor requires a single fiber");
    const FiberSpace& f = summands[0];
    if (cot == CotangentKind::real) {
        const auto* e = std::get_if<ExteriorSpace>(&f);
        require(e != nullptr, "real cotangent factor requires an exterior fiber");
        return e->n();
    }
    const auto* b = std::get_if<BidegreeSpace>(&f);
    require(b != nullptr, "complex cotangent factor requires a bidegree fiber");
    return 2 * b->n();
}

int VectorSpace::fiber_total_dim() const {
    int d = 0;
    for (const auto& f : summands) d += fiber_dim(f);
    return d;
}

int VectorSpace::block_offset(size_t which) const {
    require(which < summands.size(), "summand index out of range");
    int off = 0;
    for (size_t i = 0; i < which; ++i) off += fiber_dim(summands[i]);
    return off;
}

std::string VectorSpace::name() const {
    std::ostringstream os;
    if (cot == CotangentKind::real) os << "R^n (x) ";
    if (cot == CotangentKind::cplx) os << "(Cbar^n (+) C^n) (x) ";
    for (size_t i = 0; i < summands.size(); ++i) {
        if (i) os << " (+) ";
        os << fiber_name(summands[i]);
    }
    return os.str();
}

bool VectorSpace::operator==(const VectorSpace& o) const {
    if (cot != o.cot || summands.size() != o.summands.size()) return false;
    for (size_t i = 0; i < summands.size(); ++i)
        if (!same_fiber(summands[i], o.summands[i])) return false;
    return true;
}

VectorSpace tensor_space(CotangentKind cot, FiberSpace f) {
    VectorSpace s(cot, std::move(f));
    if (cot != CotangentKind::none) (void)s.cot_dim();  // validate pairing
    return s;
}

VectorSpace sum_space(std::vector<FiberSpace> fs) {
    require(!fs.empty(), "direct sum needs at least one summand");
    VectorSpace s;
    s.summands = std::move(fs);
    return s;
}

FormVector::FormVector(VectorSpace s, Vec c) : space(std::move(s)), coeffs(std::move(c)) {
    require(coeffs.size() == space.dim(), "coefficient length does not match space dimension");
}

FormVector FormVector::zero(VectorSpace s) {
    Vec c = Vec::Zero(s.dim());
    return FormVector(std::move(s), std::move(c));
}

FormVector operator+(const FormVector& a, const FormVector& b) {
    require(a.space == b.space, "vector addition: space mismatch");
    return FormVector(a.space, a.coeffs + b.coeffs);
}

FormVector operator-(const FormVector& a, const FormVector& b) {
    require(a.space == b.space, "vector subtraction: space mismatch");
    return FormVector(a.space, a.coeffs - b.coeffs);
}

FormVector operator*(cd s, const FormVector& a) { return FormVector(a.space, s * a.coeffs); }

cd inner(const FormVector& a, const FormVector& b) {
    require(a.space == b.space, "inner product: space mismatch");
    return b.coeffs.dot(a.coeffs);  // Eigen's dot conjugates its first factor
}

}  // namespace rkato
