// Acceptance gate: one line per criterion, exit code = number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "rkato/catalog.hpp"
#include "rkato/ellipticity.hpp"
#include "rkato/fields.hpp"
#include "rkato/suites.hpp"

using namespace rkato;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

int g_failed = 0;

void criterion(int idx, const std::string& what, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
                detail.c_str());
    if (!ok) ++g_failed;
}

RVec axis_point(int dim) {
    RVec e = RVec::Zero(dim);
    e[0] = 1.0;
    return e;
}

}  // namespace

int main() {
    criterion(1, "riemannian ellipticity constants match closed forms up to n=10",
              [](std::string& detail) {
                  auto t0 = std::chrono::steady_clock::now();
                  auto rows = constants_table(10, false, 1, 6, 42);
                  double worst = 0.0;
                  int checked = 0;
                  for (const ConstantsRow& r : rows) {
                      worst = std::max(worst, r.eps_residual);
                      worst = std::max(worst, r.xi_spread);
                      if (!r.parallel) {
                          double a = riemannian_alpha_closed(r.config.n, r.config.k);
                          worst = std::max(worst, std::abs(r.alpha_sq - (1.0 - r.eps_closed)));
                          worst = std::max(worst, std::abs(r.alpha - a));
                      }
                      ++checked;
                  }
                  double secs = seconds_since(t0);
                  detail = std::to_string(checked) + " rows, worst residual " + fmt(worst) +
                           ", " + fmt(secs) + " s";
                  return checked == 65 && worst <= 1e-10 && secs < 30.0;
              });

    criterion(2, "bidegree ellipticity constants match closed forms up to n=6",
              [](std::string& detail) {
                  auto t0 = std::chrono::steady_clock::now();
                  auto rows = constants_table(1, true, 6, 5, 42);
                  double worst = 0.0;
                  int checked = 0;
                  for (const ConstantsRow& r : rows) {
                      if (!r.config.kahler) continue;
                      worst = std::max(worst, r.eps_residual);
                      worst = std::max(worst, r.xi_spread);
                      double closed =
                          bidegree_alpha_sq_closed(r.config.n, r.config.p, r.config.q);
                      worst = std::max(worst, std::abs(r.alpha_sq - closed));
                      ++checked;
                  }
                  double secs = seconds_since(t0);
                  detail = std::to_string(checked) + " rows, worst residual " + fmt(worst) +
                           ", " + fmt(secs) + " s";
                  int expect = 0;
                  for (int n = 1; n <= 6; ++n) expect += (n + 1) * (n + 1);
                  return checked == expect && worst <= 1e-10 && secs < 60.0;
              });

    criterion(3, "catalog fields attain their constants and the field suite passes",
              [](std::string& detail) {
                  double worst = 0.0;
                  for (int n : {3, 4, 5}) {
                      FormField f = gradient_field("quad", potential_preset("quad_axial", n));
                      RatioSample r = kato_ratio(f, axis_point(n));
                      if (!r.defined) return false;
                      worst = std::max(worst,
                                       std::abs(r.ratio - riemannian_alpha_closed(n, 1)));
                      worst = std::max(worst, equality_residual_riemannian(f, axis_point(n)));
                  }
                  if (worst > 1e-9) {
                      detail = "attainment gap " + fmt(worst);
                      return false;
                  }
                  double inv_sqrt2 = 1.0 / std::sqrt(2.0);
                  double hworst = 0.0;
                  {
                      FormField f = holomorphic_field("h1", 1, {1}, 0b1);
                      RVec x(2);
                      x << 1.0, 0.5;
                      RatioSample r = kato_ratio(f, x);
                      if (!r.defined) return false;
                      hworst = std::max(hworst, std::abs(r.ratio - inv_sqrt2));
                      hworst = std::max(hworst, equality_residual_kahler(f, x));
                  }
                  {
                      FormField f = holomorphic_field("h2", 2, {0, 1}, 0b1);
                      RVec x(4);
                      x << 1.0, 1.0, 0.5, -0.5;
                      RatioSample r = kato_ratio(f, x);
                      if (!r.defined) return false;
                      hworst = std::max(hworst, std::abs(r.ratio - inv_sqrt2));
                      hworst = std::max(hworst, equality_residual_kahler(f, x));
                  }
                  if (hworst > 1e-10) {
                      detail = "holomorphic attainment gap " + fmt(hworst);
                      return false;
                  }
                  SuiteOptions opt;
                  Report rep = run_fields(opt);
                  detail = "gaps " + fmt(worst) + " / " + fmt(hworst) + "; field suite " +
                           std::to_string(rep.summary.passed) + " passed, " +
                           std::to_string(rep.summary.failed) + " failed";
                  return rep.summary.failed == 0 && rep.summary.passed > 0;
              });

    criterion(4, "operator identity suite passes with 100 group elements",
              [](std::string& detail) {
                  SuiteOptions opt;
                  opt.n_max = 6;
                  opt.include_complex = true;
                  opt.n_max_complex = 3;
                  opt.equivariance_samples = 100;
                  opt.spot_check = true;
                  Report rep = run_verify(opt);
                  detail = std::to_string(rep.summary.passed) + " passed, " +
                           std::to_string(rep.summary.failed) + " failed";
                  return rep.summary.failed == 0 && rep.summary.passed > 0;
              });

    criterion(5, "leg images are orthogonal per family but overlap across families",
              [](std::string& detail) {
                  double worst = 0.0;
                  for (int n = 1; n <= 6; ++n)
                      for (int k = 1; k + 1 <= n; ++k)
                          worst = std::max(worst, image_overlap(theta1(n, k), theta2(n, k)));
                  double cross = image_overlap(theta_kahler(DiffOp::del_star, 2, 1, 0),
                                               theta_kahler(DiffOp::delbar, 2, 1, 0));
                  detail = "within-family max " + fmt(worst) + ", cross-family " + fmt(cross);
                  return worst <= 1e-12 && cross > 0.1;
              });

    criterion(6, "exactly the canonical rescalings pass the coisometry scan up to n=6",
              [](std::string& detail) {
                  int scans = 0;
                  for (int n = 1; n <= 6; ++n)
                      for (int k = 0; k <= n; ++k)
                          for (DiffOp op : {DiffOp::d, DiffOp::d_star}) {
                              if (op == DiffOp::d && k + 1 > n) continue;
                              if (op == DiffOp::d_star && k < 1) continue;
                              OperatorKind kind{op, SpaceConfig::riemannian(n, k)};
                              double canon = canonical_scale(kind);
                              std::vector<double> grid;
                              int best = 0;
                              double gap = 1e30;
                              for (int i = 1; i <= 200; ++i) {
                                  double v = 1.5 * i / 200.0;
                                  grid.push_back(v);
                                  if (std::abs(v - canon) < gap) {
                                      gap = std::abs(v - canon);
                                      best = i - 1;
                                  }
                              }
                              grid[static_cast<size_t>(best)] = canon;
                              UniquenessReport ur = uniqueness_scan(kind, grid, 1e-10);
                              if (!ur.exact_match || ur.passing.size() != 1) {
                                  detail = "scan failed at n=" + std::to_string(n) +
                                           " k=" + std::to_string(k);
                                  return false;
                              }
                              ++scans;
                          }
                  detail = std::to_string(scans) + " scans, each passing only the canonical";
                  return scans > 0;
              });

    criterion(7, "corrupted maps and the non-harmonic control are caught",
              [](std::string& detail) {
                  SuiteOptions opt;
                  opt.n_max = 2;
                  opt.include_complex = false;
                  opt.equivariance_samples = 5;
                  opt.spot_check = false;
                  opt.perturb = 1e-3;
                  Report rep = run_verify(opt);
                  if (rep.summary.failed < 1) {
                      detail = "perturbed verify run failed nothing";
                      return false;
                  }
                  FormField ctrl = gradient_field("ctrl", potential_preset("half_sq", 3));
                  SweepResult sw = sweep_ratio(ctrl);
                  bool breaks_refined =
                      sw.max_ratio > riemannian_alpha_closed(3, 1) + 1e-6;
                  bool keeps_classical = sw.defined > 0 && sw.max_ratio <= 1.0 + 1e-9;
                  bool nonharmonic =
                      sw.max_harmonic_residual > 1e-9 * std::max(1.0, sw.nabla_scale);
                  detail = std::to_string(rep.summary.failed) +
                           " corruption failures; control ratio " + fmt(sw.max_ratio);
                  return breaks_refined && keeps_classical && nonharmonic;
              });

    std::printf("%s\n", g_failed == 0 ? "ACCEPTANCE: all criteria passed"
                                      : "ACCEPTANCE: criteria failed");
    return g_failed;
}
