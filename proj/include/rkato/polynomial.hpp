#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "rkato/spaces.hpp"

namespace rkato {

// Sparse real multivariate polynomial with exact differentiation; used to back
// the analytic field catalog, so sweeps compare against exact derivatives.
class Polynomial {
public:
    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
    static Polynomial constant(int nvars, double c);
    static Polynomial variable(int nvars, int var);  // 0-based

    int nvars() const { return nvars_; }
    bool empty() const { return terms_.empty(); }
    void add_term(std::vector<int> exps, double coef);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(double s) const;

    Polynomial derivative(int var) const;
    double eval(const RVec& x) const;
    // Sum of second partials; the harmonic presets are built to make this vanish.
    Polynomial laplacian() const;

private:
    int nvars_;
    std::map<std::vector<int>, double> terms_;
};

// Complex polynomial in z_1..z_n and their conjugates, evaluated on R^{2n}
// points with blocked coordinates (x_1..x_n, y_1..y_n), z_j = x_j + i y_j.
// Backs the bidegree field catalog with exact Wirtinger derivatives.
class CPolynomial {
public:
    explicit CPolynomial(int n = 0) : n_(n) {}
    static CPolynomial monomial(int n, std::vector<int> z_exps, std::vector<int> zbar_exps,
                                cd coef);

    int nvars() const { return n_; }
    bool empty() const { return terms_.empty(); }

    CPolynomial operator+(const CPolynomial& o) const;
    CPolynomial scaled(cd s) const;
    CPolynomial conjugated() const;  // swaps z and zbar exponents, conjugates coefficients

    CPolynomial dz(int j) const;     // 0-based Wirtinger d/dz_j
    CPolynomial dzbar(int j) const;

    cd eval(const RVec& xy) const;

private:
    struct Key {
        std::vector<int> a, b;
        bool operator<(const Key& o) const {
            return std::tie(a, b) < std::tie(o.a, o.b);
        }
    };
    int n_;
    std::map<Key, cd> terms_;
};

}  // namespace rkato
