#pragma once

#include <cstdint>
#include <random>

#include "rkato/spaces.hpp"

namespace rkato {

// Deterministic RNG: Box-Muller over mt19937_64 so identical seeds give
// identical streams regardless of the standard library's distribution
// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform01();  // in (0, 1]
    double gaussian();
    cd cgaussian();  // standard complex normal
    // Uniformly random unit covector in R^d (Gaussian direction).
    RVec unit_covector(int d);

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

enum class GroupKind { orthogonal, unitary };

// A rotation (SO(n), real entries) or unitary (U(n)) matrix with validated
// orthonormality.
struct GroupElement {
    GroupKind kind;
    int n;
    Mat m;  // n x n, real-valued for orthogonal
};

GroupElement group_identity(GroupKind kind, int n);

// Haar-distributed element: QR of a Gaussian matrix with the standard
// diagonal phase fix; orthogonal elements additionally get det = +1 by
// negating the last column when needed.
GroupElement random_element(GroupKind kind, int n, std::uint64_t seed);
GroupElement random_element(GroupKind kind, int n, Rng& rng);

GroupElement compose(const GroupElement& a, const GroupElement& b);

// Matrix of the induced representation on any of our spaces: exterior powers
// via iterated wedges, bidegree spaces as Lambda^p(conj g) (x) Lambda^q(g),
// cotangent factors as g resp. blockdiag(conj g, g), direct sums blockwise.
// Orthogonal elements act on exterior-fiber spaces, unitary ones on
// bidegree-fiber spaces; mixing the two is an error.
Mat action_matrix(const GroupElement& g, const VectorSpace& space);

FormVector act_on_form(const GroupElement& g, const FormVector& w);
FormVector act_on_tensor(const GroupElement& g, const FormVector& t);

}  // namespace rkato
