#include "spiralis/analysis.hpp"

#include <cmath>
#include <string>

namespace spiralis {

MonotonicityReport check_monotone_curvature(const CurveSamples& samples, double tol) {
  if (samples.rows.size() < 3)
    throw InsufficientSamples("monotone check: need at least 3 rows");

  MonotonicityReport report;
  int direction = 0;  // +1 increasing, -1 decreasing, 0 undecided
  for (std::size_t i = 1; i < samples.rows.size(); ++i) {
    const double d = samples.rows[i].kappa - samples.rows[i - 1].kappa;
    if (std::fabs(d) <= tol) continue;
    const int sign = d > 0.0 ? 1 : -1;
    if (direction == 0) {
      direction = sign;
    } else if (sign != direction) {
      if (!report.first_violation_s) report.first_violation_s = samples.rows[i].s;
      report.max_violation = std::fmax(report.max_violation, std::fabs(d));
    }
  }

  if (report.first_violation_s) {
    report.monotone = false;
    report.direction = MonotoneDirection::None;
  } else {
    report.monotone = true;
    report.direction = direction > 0   ? MonotoneDirection::Increasing
                       : direction < 0 ? MonotoneDirection::Decreasing
                                       : MonotoneDirection::Constant;
  }
  return report;
}

namespace {

LcgPoint lcg_point(double rho, double drho_ds) {
  if (!std::isfinite(rho) || !(rho > 0.0))
    throw DegenerateRho("lcg: radius of curvature not positive and finite");
  if (!std::isfinite(drho_ds))
    throw DegenerateRho("lcg: radius derivative not finite");
  return {std::log(rho), std::log(rho / std::fabs(drho_ds))};
}

void check_derivative_sign(double drho_ds, int& sign) {
  if (drho_ds == 0.0)
    throw DegenerateRho("lcg: d(rho)/ds vanishes on the stretch (no LCG exists)");
  const int s = drho_ds > 0.0 ? 1 : -1;
  if (sign == 0)
    sign = s;
  else if (s != sign)
    throw DegenerateRho("lcg: d(rho)/ds changes sign on the stretch");
}

}  // namespace

std::vector<LcgPoint> compute_lcg(const IntrinsicCurve& curve, int n) {
  return compute_lcg(curve, n, curve.domain());
}

std::vector<LcgPoint> compute_lcg(const IntrinsicCurve& curve, int n,
                                  Interval stretch) {
  if (n < 2) throw InvalidParameter("lcg: need n >= 2 points");
  if (stretch.lo < curve.domain().lo || stretch.hi > curve.domain().hi)
    throw OutOfDomain("lcg: stretch exceeds the curve domain");

  std::vector<LcgPoint> points;
  points.reserve(n);
  int sign = 0;
  for (int i = 0; i < n; ++i) {
    double t = stretch.lo + stretch.length() * i / (n - 1);
    if (i == n - 1) t = stretch.hi;

    const double rho = curve.radius_at(t);
    double drho_ds;
    if (auto closed = curve.radius_derivative_at(t)) {
      drho_ds = *closed;
    } else {
      // Central difference on the radius callable, shrinking the step near
      // the domain ends.
      double h = 1e-6 * std::fmax(1.0, std::fabs(t));
      h = std::fmin(h, t - curve.domain().lo);
      h = std::fmin(h, curve.domain().hi - t);
      if (h > 0.0) {
        drho_ds = (curve.radius_at(t + h) - curve.radius_at(t - h)) / (2.0 * h);
      } else {
        const double h1 = 1e-6 * std::fmax(1.0, std::fabs(t));
        const bool at_lo = t <= curve.domain().lo;
        drho_ds = at_lo ? (curve.radius_at(t + h1) - rho) / h1
                        : (rho - curve.radius_at(t - h1)) / h1;
      }
    }
    check_derivative_sign(drho_ds, sign);
    points.push_back(lcg_point(rho, drho_ds));
  }
  return points;
}

std::vector<LcgPoint> compute_lcg(const CurveSamples& samples) {
  const auto& rows = samples.rows;
  if (rows.size() < 3) throw InsufficientSamples("lcg: need at least 3 rows");

  std::vector<double> rho(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rho[i] = 1.0 / rows[i].kappa;

  std::vector<LcgPoint> points;
  points.reserve(rows.size());
  int sign = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double drho_ds;
    if (i == 0) {
      drho_ds = (rho[1] - rho[0]) / (rows[1].s - rows[0].s);
    } else if (i + 1 == rows.size()) {
      drho_ds = (rho[i] - rho[i - 1]) / (rows[i].s - rows[i - 1].s);
    } else {
      drho_ds = (rho[i + 1] - rho[i - 1]) / (rows[i + 1].s - rows[i - 1].s);
    }
    check_derivative_sign(drho_ds, sign);
    points.push_back(lcg_point(rho[i], drho_ds));
  }
  return points;
}

LcgFit fit_lcg_line(const std::vector<LcgPoint>& points) {
  if (points.size() < 2)
    throw InsufficientSamples("lcg fit: need at least 2 points");

  const double n = static_cast<double>(points.size());
  double mx = 0.0, my = 0.0;
  for (const auto& p : points) {
    mx += p.log_rho;
    my += p.log_rho_ds_drho;
  }
  mx /= n;
  my /= n;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& p : points) {
    const double dx = p.log_rho - mx;
    const double dy = p.log_rho_ds_drho - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0)
    throw DegenerateAbscissa("lcg fit: all log_rho values coincide");

  LcgFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;

  double ss_res = 0.0;
  for (const auto& p : points) {
    const double r = p.log_rho_ds_drho - (fit.slope * p.log_rho + fit.intercept);
    fit.max_residual = std::fmax(fit.max_residual, std::fabs(r));
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::fmax(0.0, 1.0 - ss_res / syy)
                            : (ss_res == 0.0 ? 1.0 : 0.0);
  return fit;
}

}  // namespace spiralis
