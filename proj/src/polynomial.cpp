#include "rkato/polynomial.hpp"

#include <cmath>

namespace rkato {

Polynomial Polynomial::constant(int nvars, double c) {
    Polynomial p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
    require(var >= 0 && var < nvars, "polynomial variable index out of range");
    Polynomial p(nvars);
    std::vector<int> e(nvars, 0);
    e[var] = 1;
    p.add_term(std::move(e), 1.0);
    return p;
}

void Polynomial::add_term(std::vector<int> exps, double coef) {
    require(static_cast<int>(exps.size()) == nvars_, "exponent arity mismatch");
    if (coef == 0.0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exps), coef);
    } else {
        it->second += coef;
        if (it->second == 0.0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require(nvars_ == o.nvars_, "polynomial arity mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + o.scaled(-1.0);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require(nvars_ == o.nvars_, "polynomial arity mismatch");
    Polynomial r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

Polynomial Polynomial::scaled(double s) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    require(var >= 0 && var < nvars_, "derivative variable out of range");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        d[var] -= 1;
        r.add_term(std::move(d), c * e[var]);
    }
    return r;
}

double Polynomial::eval(const RVec& x) const {
    require(x.size() == nvars_, "eval point arity mismatch");
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int p = 0; p < e[i]; ++p) t *= x[i];
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::laplacian() const {
    Polynomial r(nvars_);
    for (int i = 0; i < nvars_; ++i) r = r + derivative(i).derivative(i);
    return r;
}

CPolynomial CPolynomial::monomial(int n, std::vector<int> z_exps, std::vector<int> zbar_exps,
                                  cd coef) {
    require(static_cast<int>(z_exps.size()) == n && static_cast<int>(zbar_exps.size()) == n,
            "monomial exponent arity mismatch");
    CPolynomial p(n);
    if (coef != cd(0.0, 0.0)) p.terms_[Key{std::move(z_exps), std::move(zbar_exps)}] = coef;
    return p;
}

CPolynomial CPolynomial::operator+(const CPolynomial& o) const {
    require(n_ == o.n_, "polynomial arity mismatch");
    CPolynomial r = *this;
    for (const auto& [k, c] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == cd(0.0, 0.0)) r.terms_.erase(it);
        }
    }
    return r;
}

CPolynomial CPolynomial::scaled(cd s) const {
    CPolynomial r(n_);
    if (s == cd(0.0, 0.0)) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
}

CPolynomial CPolynomial::conjugated() const {
    CPolynomial r(n_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.b, k.a}, std::conj(c));
    return r;
}

CPolynomial CPolynomial::dz(int j) const {
    require(j >= 0 && j < n_, "derivative variable out of range");
    CPolynomial r(n_);
    for (const auto& [k, c] : terms_) {
        if (k.a[j] == 0) continue;
        Key d = k;
        d.a[j] -= 1;
        r.terms_[std::move(d)] += c * double(k.a[j]);
    }
    return r;
}

CPolynomial CPolynomial::dzbar(int j) const {
    require(j >= 0 && j < n_, "derivative variable out of range");
    CPolynomial r(n_);
    for (const auto& [k, c] : terms_) {
        if (k.b[j] == 0) continue;
        Key d = k;
        d.b[j] -= 1;
        r.terms_[std::move(d)] += c * double(k.b[j]);
    }
    return r;
}

cd CPolynomial::eval(const RVec& xy) const {
    require(xy.size() == 2 * n_, "eval point must have 2n blocked coordinates");
    std::vector<cd> z(n_), zb(n_);
    for (int j = 0; j < n_; ++j) {
        z[j] = cd(xy[j], xy[n_ + j]);
        zb[j] = std::conj(z[j]);
    }
    cd acc(0.0, 0.0);
    for (const auto& [k, c] : terms_) {
        cd t = c;
        for (int j = 0; j < n_; ++j) {
            for (int p = 0; p < k.a[j]; ++p) t *= z[j];
            for (int p = 0; p < k.b[j]; ++p) t *= zb[j];
        }
        acc += t;
    }
    return acc;
}

}  // namespace rkato
