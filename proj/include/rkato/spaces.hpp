#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "rkato/multiindex.hpp"

namespace rkato {

using cd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

enum class ScalarKind { real, cplx };

// Lambda^k R^n (or complex-valued forms on R^n). Basis blades in lexicographic
// order; coefficients are stored complex either way, ScalarKind only gates
// operations that require real scalars (e.g. the Hodge star).
class ExteriorSpace {
public:
    ExteriorSpace(int n, int k, ScalarKind scalar = ScalarKind::real);

    int n() const { return n_; }
    int k() const { return k_; }
    ScalarKind scalar() const { return scalar_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Mask>& basis() const { return basis_; }
    Mask blade(int i) const { return basis_[static_cast<size_t>(i)]; }
    int index_of(Mask m) const;

    bool operator==(const ExteriorSpace& o) const {
        return n_ == o.n_ && k_ == o.k_ && scalar_ == o.scalar_;
    }

private:
    int n_, k_;
    ScalarKind scalar_;
    std::vector<Mask> basis_;
    std::unordered_map<Mask, int> pos_;
};

// Lambda^p Cbar^n (x) Lambda^q C^n. A basis element is a pair (I, J):
// the blade ebar_I of unit (1,0)-covectors wedged with the blade e_J of unit
// (0,1)-covectors, in that order, inside Lambda^{p+q} of the complexified
// cotangent space. Pairs are ordered lexicographically with I outer.
class BidegreeSpace {
public:
    BidegreeSpace(int n, int p, int q);

    int n() const { return n_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::pair<Mask, Mask>>& basis() const { return basis_; }
    std::pair<Mask, Mask> blade(int i) const { return basis_[static_cast<size_t>(i)]; }
    int index_of(Mask I, Mask J) const;

    bool operator==(const BidegreeSpace& o) const {
        return n_ == o.n_ && p_ == o.p_ && q_ == o.q_;
    }

private:
    int n_, p_, q_;
    std::vector<std::pair<Mask, Mask>> basis_;
    std::unordered_map<std::uint64_t, int> pos_;
};

// Placeholder space with no blade structure (e.g. the abstract complement
// F^perp that a kernel-basis projection maps into).
struct AbstractSpace {
    int dim_ = 0;
    std::string label;
    int dim() const { return dim_; }
    bool operator==(const AbstractSpace& o) const {
        return dim_ == o.dim_ && label == o.label;
    }
};

using FiberSpace = std::variant<ExteriorSpace, BidegreeSpace, AbstractSpace>;

int fiber_dim(const FiberSpace& f);
std::string fiber_name(const FiberSpace& f);
bool same_fiber(const FiberSpace& a, const FiberSpace& b);

// Cotangent factor in front of a fiber: none, R^n (basis dx_1..dx_n), or the
// complexified cotangent of C^n split as Cbar^n (+) C^n. For the complex kind
// slots 0..n-1 are the unit (1,0)-covectors u_i = dz_i/sqrt(2) and slots
// n..2n-1 the unit (0,1)-covectors v_i = dzbar_i/sqrt(2).
enum class CotangentKind { none, real, cplx };

// domain/codomain descriptor for vectors and linear maps: an optional
// cotangent factor tensored with a direct sum of fibers. A cotangent factor
// requires exactly one summand. Vector layout: cotangent slot index c and
// fiber index f flatten to c * fiber_dim + f; sum components are concatenated
// blocks.
struct VectorSpace {
    CotangentKind cot = CotangentKind::none;
    std::vector<FiberSpace> summands;

    VectorSpace() = default;
    VectorSpace(FiberSpace f) : summands{std::move(f)} {}
    VectorSpace(CotangentKind c, FiberSpace f) : cot(c), summands{std::move(f)} {}

    int cot_dim() const;
    int fiber_total_dim() const;
    int dim() const { return (cot == CotangentKind::none ? 1 : cot_dim()) * fiber_total_dim(); }
    int block_offset(size_t which) const;
    std::string name() const;
    bool operator==(const VectorSpace& o) const;
};

VectorSpace tensor_space(CotangentKind cot, FiberSpace f);
VectorSpace sum_space(std::vector<FiberSpace> fs);

// An element of a VectorSpace: coefficients over the layout above.
struct FormVector {
    VectorSpace space;
    Vec coeffs;

    FormVector() = default;
    FormVector(VectorSpace s, Vec c);
    static FormVector zero(VectorSpace s);
    double norm() const { return coeffs.norm(); }
};

FormVector operator+(const FormVector& a, const FormVector& b);
FormVector operator-(const FormVector& a, const FormVector& b);
FormVector operator*(cd s, const FormVector& a);

// Hermitian inner product, linear in the first argument, conjugate-linear in
// the second; restricts to the Euclidean product on real vectors.
cd inner(const FormVector& a, const FormVector& b);

[[noreturn]] void fail(const std::string& msg);

inline void require(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
}

}  // namespace rkato
