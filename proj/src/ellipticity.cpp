#include "rkato/ellipticity.hpp"

#include <algorithm>

#include "rkato/group.hpp"

namespace rkato {

namespace {

struct Leg {
    DiffOp op;
    double weight;
};

// The two rescaled legs of a family, with absent target degrees dropped.
std::vector<Leg> family_symbol_legs(const SpaceConfig& c, OperatorFamily family) {
    std::vector<Leg> legs;
    if (family == OperatorFamily::hodge) {
        require(!c.kahler, "symbol_LstarL: hodge family needs a riemannian config");
        if (c.k + 1 <= c.n) legs.push_back({DiffOp::d, 1.0 / double(c.k + 1)});
        if (c.k - 1 >= 0) legs.push_back({DiffOp::d_star, 1.0 / double(c.n - c.k + 1)});
    } else if (family == OperatorFamily::dolbeault_1) {
        require(c.kahler, "symbol_LstarL: dolbeault families need a bidegree config");
        if (c.p + 1 <= c.n) legs.push_back({DiffOp::del, 1.0 / double(c.p + 1)});
        if (c.p - 1 >= 0) legs.push_back({DiffOp::del_star, 1.0 / double(c.n - c.p + 1)});
    } else {
        require(c.kahler, "symbol_LstarL: dolbeault families need a bidegree config");
        if (c.q + 1 <= c.n) legs.push_back({DiffOp::delbar, 1.0 / double(c.q + 1)});
        if (c.q - 1 >= 0) legs.push_back({DiffOp::delbar_star, 1.0 / double(c.n - c.q + 1)});
    }
    require(!legs.empty(), "symbol_LstarL: no legs exist for this config");
    return legs;
}

}  // namespace

Mat symbol_LstarL(const SpaceConfig& config, OperatorFamily family, const RVec& xi) {
    require(xi.size() == config.ambient_real_dim(),
            "symbol_LstarL: covector length does not match the ambient dimension");
    require(std::abs(xi.norm() - 1.0) < 1e-12, "symbol_LstarL: covector must be unit");
    int fd = fiber_dim(config.fiber());
    Mat out = Mat::Zero(fd, fd);
    for (const Leg& leg : family_symbol_legs(config, family)) {
        LinearMap s = symbol({leg.op, config}, xi);
        out += leg.weight * (s.m.adjoint() * s.m);
    }
    return out;
}

double epsilon_closed(const SpaceConfig& c, OperatorFamily family) {
    if (family == OperatorFamily::hodge) {
        if (c.k == 0 || c.k == c.n) return 1.0;
        return std::min(1.0 / double(c.k + 1), 1.0 / double(c.n - c.k + 1));
    }
    int deg = (family == OperatorFamily::dolbeault_1) ? c.p : c.q;
    if (deg == 0 || deg == c.n) return 0.5;
    return 0.5 * std::min(1.0 / double(deg + 1), 1.0 / double(c.n - deg + 1));
}

EllipticityResult ellipticity_constant(const SpaceConfig& config, OperatorFamily family,
                                       int n_samples, std::uint64_t seed) {
    require(n_samples >= 1, "ellipticity_constant: need at least one sample");
    EllipticityResult res;
    res.closed_form = epsilon_closed(config, family);
    res.n_samples = n_samples;
    Rng rng(seed);
    double lo = 0.0, hi = 0.0;
    for (int s = 0; s < n_samples; ++s) {
        RVec xi = rng.unit_covector(config.ambient_real_dim());
        Eigen::SelfAdjointEigenSolver<Mat> es(symbol_LstarL(config, family, xi),
                                              Eigen::EigenvaluesOnly);
        double lmin = es.eigenvalues()[0];
        if (s == 0) {
            lo = hi = lmin;
        } else {
            lo = std::min(lo, lmin);
            hi = std::max(hi, lmin);
        }
    }
    res.numeric = lo;
    res.xi_spread = hi - lo;
    res.residual = std::abs(res.numeric - res.closed_form);
    return res;
}

double ellipticity_spectrum_spread(const SpaceConfig& config, OperatorFamily family,
                                   int n_samples, std::uint64_t seed) {
    require(n_samples >= 2, "spectrum spread: need at least two samples");
    Rng rng(seed);
    Eigen::VectorXd ref;
    double spread = 0.0;
    for (int s = 0; s < n_samples; ++s) {
        RVec xi = rng.unit_covector(config.ambient_real_dim());
        Eigen::SelfAdjointEigenSolver<Mat> es(symbol_LstarL(config, family, xi),
                                              Eigen::EigenvaluesOnly);
        Eigen::VectorXd ev = es.eigenvalues();  // ascending
        if (s == 0)
            ref = ev;
        else
            spread = std::max(spread, (ev - ref).cwiseAbs().maxCoeff());
    }
    return spread;
}

double riemannian_alpha_closed(int n, int k) {
    require(k >= 1 && k <= n - 1, "riemannian_alpha_closed: extremal degrees are parallel");
    if (2 * k <= n) return std::sqrt(double(n - k) / double(n - k + 1));
    return std::sqrt(double(k) / double(k + 1));
}

double bidegree_alpha_sq_closed(int n, int p, int q) {
    if (p == 0 || p == n || q == 0 || q == n) return 0.5;
    auto branch = [n](int d) {
        return std::max(double(2 * d + 1) / double(2 * d + 2),
                        double(2 * (n - d) + 1) / double(2 * (n - d) + 2));
    };
    return std::min(branch(p), branch(q));
}

KatoConstant kato_constant(const SpaceConfig& config) {
    KatoConstant out;
    out.config = config;
    if (!config.kahler) {
        if (config.k == 0 || config.k == config.n) {
            out.parallel = true;
            out.epsilon = 1.0;
            return out;
        }
        out.epsilon = epsilon_closed(config, OperatorFamily::hodge);
        out.alpha_sq = 1.0 - out.epsilon;
        out.alpha = std::sqrt(out.alpha_sq);
        return out;
    }
    double e1 = epsilon_closed(config, OperatorFamily::dolbeault_1);
    double e2 = epsilon_closed(config, OperatorFamily::dolbeault_2);
    out.epsilon = std::max(e1, e2);
    out.alpha_sq_family1 = 1.0 - e1;
    out.alpha_sq_family2 = 1.0 - e2;
    out.alpha_sq = 1.0 - out.epsilon;
    out.alpha = std::sqrt(out.alpha_sq);
    int deg = config.p + config.q;
    if (deg > 0 && deg < 2 * config.n) {
        double a = riemannian_alpha_closed(2 * config.n, deg);
        out.riemannian_alpha_sq = a * a;
        out.min_alpha_sq = std::min(out.alpha_sq, a * a);
    } else {
        out.min_alpha_sq = out.alpha_sq;  // riemannian side is parallel
    }
    return out;
}

KatoConstant direct_sum_constant(const std::vector<SpaceConfig>& configs) {
    require(!configs.empty(), "direct_sum_constant: need at least one summand");
    KatoConstant out;
    out.config = configs.front();
    out.parallel = true;
    for (const SpaceConfig& c : configs) {
        KatoConstant kc = kato_constant(c);
        if (kc.parallel) continue;
        out.parallel = false;
        if (kc.alpha > out.alpha) {
            out.alpha = kc.alpha;
            out.alpha_sq = kc.alpha_sq;
            out.epsilon = kc.epsilon;
        }
    }
    return out;
}

std::vector<ConstantsRow> constants_table(int n_max_real, bool include_complex,
                                          int n_max_complex, int n_samples,
                                          std::uint64_t seed) {
    require(n_max_real >= 1, "constants_table: n_max must be at least 1");
    require(n_max_real <= 10, "constants_table: riemannian n_max capped at 10");
    require(!include_complex || (n_max_complex >= 1 && n_max_complex <= 6),
            "constants_table: bidegree n_max capped at 6");
    std::vector<ConstantsRow> rows;

    auto fill_common = [&](ConstantsRow& r, const KatoConstant& kc) {
        r.parallel = kc.parallel;
        r.alpha = kc.alpha;
        r.alpha_sq = kc.alpha_sq;
        r.alpha_sq_family1 = kc.alpha_sq_family1;
        r.alpha_sq_family2 = kc.alpha_sq_family2;
        r.riemannian_alpha_sq = kc.riemannian_alpha_sq;
        r.min_alpha_sq = kc.min_alpha_sq;
    };

    for (int n = 1; n <= n_max_real; ++n) {
        for (int k = 0; k <= n; ++k) {
            SpaceConfig c = SpaceConfig::riemannian(n, k);
            ConstantsRow r;
            r.config = c;
            EllipticityResult er =
                ellipticity_constant(c, OperatorFamily::hodge, n_samples, seed);
            r.eps_closed = er.closed_form;
            r.eps_numeric = er.numeric;
            r.eps_residual = er.residual;
            r.xi_spread = er.xi_spread;
            fill_common(r, kato_constant(c));
            rows.push_back(std::move(r));
        }
    }
    if (include_complex) {
        for (int n = 1; n <= n_max_complex; ++n) {
            for (int p = 0; p <= n; ++p) {
                for (int q = 0; q <= n; ++q) {
                    SpaceConfig c = SpaceConfig::bidegree(n, p, q);
                    ConstantsRow r;
                    r.config = c;
                    EllipticityResult e1 =
                        ellipticity_constant(c, OperatorFamily::dolbeault_1, n_samples, seed);
                    EllipticityResult e2 =
                        ellipticity_constant(c, OperatorFamily::dolbeault_2, n_samples, seed);
                    // the binding family is the one with the larger epsilon
                    const EllipticityResult& eb = (e1.closed_form >= e2.closed_form) ? e1 : e2;
                    r.eps_closed = eb.closed_form;
                    r.eps_numeric = eb.numeric;
                    r.eps_residual = std::max(e1.residual, e2.residual);
                    r.xi_spread = std::max(e1.xi_spread, e2.xi_spread);
                    fill_common(r, kato_constant(c));
                    rows.push_back(std::move(r));
                }
            }
        }
    }
    return rows;
}

}  // namespace rkato
