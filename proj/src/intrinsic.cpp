#include "spiralis/intrinsic.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "spiralis/quadrature.hpp"

namespace spiralis {

namespace {

// Inner tolerance for nested quadrature (tangent angle inside a position
// integrand); tighter than the outer request so the nesting does not
// dominate the error budget.
double inner_tol(double tol) { return std::fmax(tol * 1e-2, 1e-14); }

void validate_domain(const Interval& domain, double min_lo, const char* what) {
  if (!std::isfinite(domain.lo) || !std::isfinite(domain.hi))
    throw InvalidDomain(std::string(what) + ": domain must be finite");
  if (!(domain.lo < domain.hi))
    throw InvalidDomain(std::string(what) + ": domain must be a nonempty interval");
  if (domain.lo < min_lo)
    throw InvalidDomain(std::string(what) + ": domain must start at or above " +
                        std::to_string(min_lo));
}

}  // namespace

IntrinsicCurve::IntrinsicCurve(ArcLengthForm form, Interval domain, Pose pose)
    : form_(std::move(form)), domain_(domain), pose_(pose) {
  validate_domain(domain_, 0.0, "arc-length curve");
  if (!std::get<ArcLengthForm>(form_).kappa)
    throw InvalidParameter("arc-length curve: curvature function required");
}

IntrinsicCurve::IntrinsicCurve(TangentAngleForm form, Interval domain, Pose pose)
    : form_(std::move(form)), domain_(domain), pose_(pose) {
  validate_domain(domain_, 0.0, "tangent-angle curve");
  const auto& f = std::get<TangentAngleForm>(form_);
  if (!f.rho) throw InvalidParameter("tangent-angle curve: radius function required");
  // Spot-check positivity of rho; a full proof is the constructor caller's job.
  for (int i = 0; i <= 32; ++i) {
    const double psi = domain_.lo + domain_.length() * i / 32.0;
    if (!(f.rho(psi) > 0.0))
      throw InvalidParameter("tangent-angle curve: rho must be positive on the domain");
  }
}

void IntrinsicCurve::check_in_domain(double t) const {
  const double slack =
      1e-12 * std::fmax(1.0, std::fmax(std::fabs(domain_.lo), std::fabs(domain_.hi)));
  if (!domain_.contains(t, slack))
    throw OutOfDomain("parameter " + std::to_string(t) + " outside [" +
                      std::to_string(domain_.lo) + ", " + std::to_string(domain_.hi) + "]");
}

double IntrinsicCurve::curvature_at(double t) const {
  check_in_domain(t);
  if (const auto* arc = std::get_if<ArcLengthForm>(&form_)) return arc->kappa(t);
  return 1.0 / std::get<TangentAngleForm>(form_).rho(t);
}

double IntrinsicCurve::radius_at(double t) const {
  check_in_domain(t);
  if (const auto* arc = std::get_if<ArcLengthForm>(&form_))
    return arc->rho ? arc->rho(t) : 1.0 / arc->kappa(t);
  return std::get<TangentAngleForm>(form_).rho(t);
}

std::optional<double> IntrinsicCurve::radius_derivative_at(double t) const {
  check_in_domain(t);
  if (const auto* arc = std::get_if<ArcLengthForm>(&form_)) {
    if (!arc->drho_ds) return std::nullopt;
    return arc->drho_ds(t);
  }
  const auto& ta = std::get<TangentAngleForm>(form_);
  if (!ta.drho_dtheta) return std::nullopt;
  // ds = rho dpsi, so drho/ds = rho'(psi) / rho(psi).
  return ta.drho_dtheta(t) / ta.rho(t);
}

double IntrinsicCurve::tangent_angle_at(double t, double tol) const {
  check_in_domain(t);
  if (const auto* arc = std::get_if<ArcLengthForm>(&form_)) {
    if (arc->theta) return arc->theta(t);
    if (t == domain_.lo) return 0.0;
    return integrate(arc->kappa, domain_.lo, t, tol, tol).value;
  }
  return t - domain_.lo;
}

Vec2 IntrinsicCurve::position_at(double t, double tol) const {
  check_in_domain(t);
  Vec2 local{0.0, 0.0};
  if (const auto* arc = std::get_if<ArcLengthForm>(&form_)) {
    RealFunction theta_rel;
    if (arc->theta) {
      theta_rel = arc->theta;
    } else {
      const double itol = inner_tol(tol);
      theta_rel = [this, arc, itol](double u) {
        return u == domain_.lo ? 0.0
                               : integrate(arc->kappa, domain_.lo, u, itol, itol).value;
      };
    }
    local.x = integrate([&](double u) { return std::cos(theta_rel(u)); },
                        domain_.lo, t, tol, tol)
                  .value;
    local.y = integrate([&](double u) { return std::sin(theta_rel(u)); },
                        domain_.lo, t, tol, tol)
                  .value;
  } else {
    const auto& ta = std::get<TangentAngleForm>(form_);
    const double lo = domain_.lo;
    local.x = integrate([&](double psi) { return ta.rho(psi) * std::cos(psi - lo); },
                        lo, t, tol, tol)
                  .value;
    local.y = integrate([&](double psi) { return ta.rho(psi) * std::sin(psi - lo); },
                        lo, t, tol, tol)
                  .value;
  }
  return pose_.apply(local);
}

CurveSamples IntrinsicCurve::sample(int n, double tol) const {
  if (n < 2) throw InvalidParameter("sample: need n >= 2");

  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i)
    grid[i] = domain_.lo + domain_.length() * i / (n - 1);
  grid.back() = domain_.hi;

  CurveSamples out;
  out.rows.resize(n);

  if (const auto* arc = std::get_if<ArcLengthForm>(&form_)) {
    const double itol = inner_tol(tol);
    double theta_acc = arc->theta ? arc->theta(grid[0]) : 0.0;
    Vec2 p{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
      if (i > 0) {
        const double t0 = grid[i - 1];
        const double t1 = grid[i];
        RealFunction theta_rel;
        if (arc->theta) {
          theta_rel = arc->theta;
        } else {
          const double theta_start = theta_acc;
          theta_rel = [arc, t0, theta_start, itol](double u) {
            return u == t0 ? theta_start
                           : theta_start + integrate(arc->kappa, t0, u, itol, itol).value;
          };
        }
        p.x += integrate([&](double u) { return std::cos(theta_rel(u)); }, t0, t1,
                         tol, tol)
                   .value;
        p.y += integrate([&](double u) { return std::sin(theta_rel(u)); }, t0, t1,
                         tol, tol)
                   .value;
        theta_acc = arc->theta ? arc->theta(t1)
                               : theta_acc + integrate(arc->kappa, t0, t1, itol, itol).value;
      }
      const Vec2 world = pose_.apply(p);
      out.rows[i] = {grid[i], world.x, world.y, pose_.heading + theta_acc,
                     arc->kappa(grid[i])};
    }
  } else {
    const auto& ta = std::get<TangentAngleForm>(form_);
    const double lo = domain_.lo;
    double s_acc = 0.0;
    Vec2 p{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
      if (i > 0) {
        s_acc += integrate(ta.rho, grid[i - 1], grid[i], tol, tol).value;
        p.x += integrate([&](double psi) { return ta.rho(psi) * std::cos(psi - lo); },
                         grid[i - 1], grid[i], tol, tol)
                   .value;
        p.y += integrate([&](double psi) { return ta.rho(psi) * std::sin(psi - lo); },
                         grid[i - 1], grid[i], tol, tol)
                   .value;
      }
      const Vec2 world = pose_.apply(p);
      out.rows[i] = {s_acc, world.x, world.y, pose_.heading + (grid[i] - lo),
                     1.0 / ta.rho(grid[i])};
    }
  }
  return out;
}

}  // namespace spiralis
