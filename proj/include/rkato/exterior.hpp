#pragma once

#include "rkato/spaces.hpp"

namespace rkato {

// --- plain exterior algebra over R^n --------------------------------------

// a ^ b for forms over the same R^n; degree overflow (k+l > n) is an error.
FormVector wedge(const FormVector& a, const FormVector& b);

// Contraction by a covector v (coefficients over the dx_i basis): the adjoint
// of wedge-by-v, <v ^ a, b> = <a, contract(v, b)>. Conjugate-linear in v.
// Degree 0 input is an error (no Lambda^{-1}).
FormVector contract(const Vec& v, const FormVector& w);

// Hodge star on Lambda^k R^n with real scalars, fixed by eta ^ *omega =
// <eta, omega> e_{1..n}.
FormVector hodge_star(const FormVector& w);

// Matrix of the star on Lambda^k R^n (a signed permutation).
Mat hodge_star_matrix(int n, int k);

// --- Kahler covectors ------------------------------------------------------

// A real covector xi on R^{2n} ~ C^n together with its (1,0)/(0,1) parts in
// the unit bases u_i = dz_i/sqrt(2), v_i = dzbar_i/sqrt(2). Real coordinates
// are blocked: slot j is x_{j+1}, slot n+j is y_{j+1}, z_j = x_j + i y_j.
struct ComplexCovector {
    int n = 0;
    RVec real_part;  // length 2n
    Vec holo;        // length n, coefficients over u_i
    Vec antiholo;    // length n, coefficients over v_i (conj(holo) for real xi)
};

// Split a real covector into bidegree parts. Coefficients: holo_j =
// (a_j - i b_j)/sqrt(2) for xi = sum a_j dx_j + b_j dy_j.
ComplexCovector bidegree_split(const RVec& xi);

// Rebuild the real covector from the parts (inverse of bidegree_split).
RVec bidegree_join(const ComplexCovector& xi);

// --- blade-level bidegree operations ---------------------------------------
// All of these act on honest wedge representatives ebar_I ^ e_J in
// Lambda^{p+q} of the complexified cotangent space, so operations touching
// the e_J factor cross the p factors of ebar_I and pick up (-1)^p.

// u_i ^ (ebar_I ^ e_J): raises p. Out-of-range target degree is an error.
FormVector wedge_u(int i, const FormVector& w);
// v_i ^ (ebar_I ^ e_J): raises q, crossing sign (-1)^p.
FormVector wedge_v(int i, const FormVector& w);
// Contraction by the unit (1,0) tangent frame Z_i (pairs with u-factors): lowers p.
FormVector contract_Z(int i, const FormVector& w);
// Contraction by the unit (0,1) tangent frame W_i (pairs with v-factors,
// crossing sign (-1)^p): lowers q.
FormVector contract_W(int i, const FormVector& w);

}  // namespace rkato
