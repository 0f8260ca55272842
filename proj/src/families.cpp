#include "spiralis/families.hpp"

#include <cmath>
#include <string>

#include "spiralis/hypergeom.hpp"

namespace spiralis {

namespace {

constexpr double kSeriesTol = 1e-15;

bool near_nonpositive_integer(double x) {
  const double r = std::round(x);
  return r <= 0.0 && std::fabs(x - r) < 1e-12;
}

// Tangent angle of the pseudospiral measured with the s = 0 convention of
// the defining equation: k0 ln(s) for m = 1, k0 s^(1-m)/(1-m) otherwise.
double pseudospiral_theta_origin(double k0, double m, double s) {
  if (m == 1.0) return k0 * std::log(s);
  return k0 * std::pow(s, 1.0 - m) / (1.0 - m);
}

// y component of the m = 2 closed form: the limit of the generic Eq-style
// expression, whose n = 0 coefficient degenerates there. Derivation:
// split off the constant term and take m -> 2, which turns it into
// -k0 ln s plus a regular series in z = -k0^2 / (4 s^2).
double closed_form_y_m2(double k0, double s) {
  const double z = -k0 * k0 / (4.0 * s * s);
  double factorial_ratio = 1.0;  // (n-1)!/( (3/2)_n n! n! ) running value
  double zpow = 1.0;
  double sum = 0.0;
  for (int n = 1; n <= kMaxSeriesTerms; ++n) {
    // update ratio from n-1 to n: multiply by (n-1)/( (1/2+n) n^2 ) for n>1,
    // seed at n=1: 0!/( (3/2) * 1 * 1 ).
    if (n == 1)
      factorial_ratio = 1.0 / 1.5;
    else
      factorial_ratio *= (n - 1.0) / ((0.5 + n) * n * n);
    zpow *= z;
    const double term = factorial_ratio * zpow;
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fmax(1.0, std::fabs(sum))) break;
  }
  return -k0 * std::log(s) + 0.5 * k0 * sum;
}

}  // namespace

bool pseudospiral_m_excluded(double m) {
  if (m == 1.0 || m == 2.0) return false;  // dedicated branches
  const double bx = (2.0 * m - 3.0) / (2.0 * (m - 1.0));
  const double by = (3.0 * m - 4.0) / (2.0 * (m - 1.0));
  return near_nonpositive_integer(bx) || near_nonpositive_integer(by);
}

IntrinsicCurve make_pseudospiral(const PseudospiralParams& p, Interval s_domain,
                                 Pose pose) {
  if (!(p.alpha > 0.0))
    throw InvalidParameter("pseudospiral: alpha must be positive");
  if (p.m >= 1.0 && s_domain.lo <= 0.0)
    throw InvalidDomain("pseudospiral: m >= 1 needs s_lo > 0 (tangent angle "
                        "diverges at s = 0)");

  const double alpha = p.alpha;
  const double m = p.m;
  const double k0 = 1.0 / alpha;
  const double s_lo = s_domain.lo;

  ArcLengthForm form;
  form.kappa = [k0, m](double s) { return k0 * std::pow(s, -m); };
  form.rho = [alpha, m](double s) { return alpha * std::pow(s, m); };
  form.drho_ds = [alpha, m](double s) { return alpha * m * std::pow(s, m - 1.0); };
  if (s_lo > 0.0) {
    const double theta_lo = pseudospiral_theta_origin(k0, m, s_lo);
    form.theta = [k0, m, theta_lo](double s) {
      return pseudospiral_theta_origin(k0, m, s) - theta_lo;
    };
  } else {
    // s_lo = 0 (only m < 1 reaches here): pow(0, 1-m) = 0, no offset needed.
    form.theta = [k0, m](double s) {
      return pseudospiral_theta_origin(k0, m, s);
    };
  }
  return IntrinsicCurve(std::move(form), s_domain, pose);
}

Vec2 pseudospiral_closed_form(const PseudospiralParams& p, double s) {
  if (!(p.alpha > 0.0))
    throw InvalidParameter("pseudospiral: alpha must be positive");
  if (!(s > 0.0))
    throw DomainError("pseudospiral closed form: s must be positive");

  const double k0 = 1.0 / p.alpha;
  const double m = p.m;

  if (m == 1.0) {
    const double w = k0 * std::log(s);
    const double c = std::cos(w);
    const double sn = std::sin(w);
    const double pref = s / (1.0 + k0 * k0);
    return {pref * (c + k0 * sn), pref * (-k0 * c + sn)};
  }

  if (pseudospiral_m_excluded(m)) {
    const double bump = 1e-6 * std::fmax(1.0, std::fabs(m));
    throw InvalidParameter(
        "pseudospiral closed form: m = " + std::to_string(m) +
        " makes a hypergeometric denominator parameter a nonpositive integer; "
        "nearest valid exponents are m = " + std::to_string(m - bump) + " and m = " +
        std::to_string(m + bump));
  }

  const double one_m = 1.0 - m;
  const double z = -k0 * k0 * std::pow(s, 2.0 * one_m) / (4.0 * one_m * one_m);
  const double x =
      s * hyp1f2(1.0 / (2.0 * one_m), 0.5, (2.0 * m - 3.0) / (2.0 * (m - 1.0)), z,
                 kSeriesTol)
              .value;
  double y;
  if (m == 2.0) {
    y = closed_form_y_m2(k0, s);
  } else {
    y = k0 * std::pow(s, 2.0 - m) / ((m - 2.0) * (m - 1.0)) *
        hyp1f2((m - 2.0) / (2.0 * (m - 1.0)), 1.5,
               (3.0 * m - 4.0) / (2.0 * (m - 1.0)), z, kSeriesTol)
            .value;
  }
  return {x, y};
}

Vec2 pseudospiral_closed_form_segment(const PseudospiralParams& p, double s_from,
                                      double s_to) {
  if (s_from == 0.0) {
    if (p.m >= 1.0)
      throw DomainError("pseudospiral closed form: m >= 1 has no position at s = 0");
    // For m < 1 the antiderivative vanishes at 0 and theta(0) = 0.
    return pseudospiral_closed_form(p, s_to);
  }
  const Vec2 a = pseudospiral_closed_form(p, s_from);
  const Vec2 b = pseudospiral_closed_form(p, s_to);
  const double theta_from = pseudospiral_theta_origin(1.0 / p.alpha, p.m, s_from);
  return rotate(b - a, -theta_from);
}

IntrinsicCurve make_lac(const LacParams& p, Interval s_domain, Pose pose) {
  const double alpha = p.alpha;
  const double c0 = p.c0;
  const double c1 = p.c1;
  const double s_lo = s_domain.lo;

  ArcLengthForm form;
  if (alpha == 0.0) {
    // rho = c0 e^(c1 s)
    if (!(c0 > 0.0))
      throw InvalidParameter("lac: alpha = 0 needs c0 > 0 for a positive radius");
    form.kappa = [c0, c1](double s) { return std::exp(-c1 * s) / c0; };
    form.rho = [c0, c1](double s) { return c0 * std::exp(c1 * s); };
    form.drho_ds = [c0, c1](double s) { return c0 * c1 * std::exp(c1 * s); };
    if (c1 == 0.0) {
      form.theta = [c0, s_lo](double s) { return (s - s_lo) / c0; };
    } else {
      form.theta = [c0, c1, s_lo](double s) {
        return (std::exp(-c1 * s_lo) - std::exp(-c1 * s)) / (c0 * c1);
      };
    }
    return IntrinsicCurve(std::move(form), s_domain, pose);
  }

  if (c0 == 0.0) {
    // Constant radius: a circle of radius c1^(1/alpha).
    if (!(c1 > 0.0))
      throw InvalidParameter("lac: c0 = 0 needs c1 > 0 for a positive radius");
    const double rho = std::pow(c1, 1.0 / alpha);
    const double kappa = 1.0 / rho;
    form.kappa = [kappa](double) { return kappa; };
    form.rho = [rho](double) { return rho; };
    form.drho_ds = [](double) { return 0.0; };
    form.theta = [kappa, s_lo](double s) { return kappa * (s - s_lo); };
    return IntrinsicCurve(std::move(form), s_domain, pose);
  }

  // rho = (c0 s + c1)^(1/alpha): the base must stay positive on the domain
  // (it is linear, so the endpoints decide).
  if (!(c0 * s_domain.lo + c1 > 0.0) || !(c0 * s_domain.hi + c1 > 0.0))
    throw InvalidParameter("lac: c0 s + c1 must be positive on the domain");

  form.kappa = [c0, c1, alpha](double s) {
    return std::pow(c0 * s + c1, -1.0 / alpha);
  };
  form.rho = [c0, c1, alpha](double s) { return std::pow(c0 * s + c1, 1.0 / alpha); };
  form.drho_ds = [c0, c1, alpha](double s) {
    return (c0 / alpha) * std::pow(c0 * s + c1, 1.0 / alpha - 1.0);
  };
  if (alpha == 1.0) {
    form.theta = [c0, c1, s_lo](double s) {
      return std::log((c0 * s + c1) / (c0 * s_lo + c1)) / c0;
    };
  } else {
    const double q = 1.0 - 1.0 / alpha;
    form.theta = [c0, c1, s_lo, q](double s) {
      return (std::pow(c0 * s + c1, q) - std::pow(c0 * s_lo + c1, q)) / (c0 * q);
    };
  }
  return IntrinsicCurve(std::move(form), s_domain, pose);
}

IntrinsicCurve make_glac(const GlacParams& p, Interval s_domain, Pose pose) {
  if (p.alpha == 0.0) throw InvalidParameter("glac: alpha must be nonzero");

  if (p.c2 == 0.0) {
    // Zero shift reduces exactly to the LAC family: the radius shift
    // directly, the curvature shift with the exponent sign flipped
    // (kappa = base^(1/alpha) means rho = base^(-1/alpha)).
    const double lac_alpha =
        p.shift_kind == ShiftKind::RadiusShift ? p.alpha : -p.alpha;
    return make_lac({lac_alpha, p.c0, p.c1}, s_domain, pose);
  }

  const double alpha = p.alpha;
  const double c0 = p.c0;
  const double c1 = p.c1;
  const double c2 = p.c2;

  auto base_ok = [&](double s) { return c0 * s + c1 > 0.0; };
  auto shifted = [=](double s) { return std::pow(c0 * s + c1, 1.0 / alpha) + c2; };
  if (!base_ok(s_domain.lo) || !base_ok(s_domain.hi) ||
      !(shifted(s_domain.lo) > 0.0) || !(shifted(s_domain.hi) > 0.0))
    throw InvalidParameter("glac: shifted quantity must stay positive on the domain");

  auto shifted_derivative = [=](double s) {
    return (c0 / alpha) * std::pow(c0 * s + c1, 1.0 / alpha - 1.0);
  };

  ArcLengthForm form;
  if (p.shift_kind == ShiftKind::RadiusShift) {
    form.rho = shifted;
    form.kappa = [shifted](double s) { return 1.0 / shifted(s); };
    form.drho_ds = shifted_derivative;
  } else {
    form.kappa = shifted;
    form.rho = [shifted](double s) { return 1.0 / shifted(s); };
    form.drho_ds = [shifted, shifted_derivative](double s) {
      const double k = shifted(s);
      return -shifted_derivative(s) / (k * k);
    };
  }
  // No closed-form tangent angle: positions go through nested quadrature.
  return IntrinsicCurve(std::move(form), s_domain, pose);
}

double superspiral_radius(const SuperspiralParams& p, double psi) {
  return hyp2f1(p.a, p.b, p.c, -psi, 1e-14).value;
}

IntrinsicCurve make_superspiral(const SuperspiralParams& p, Interval theta_domain,
                                Pose pose, double scale) {
  if (!validate_superspiral_params(p.a, p.b, p.c))
    throw InvalidParameter("superspiral: require c > b > 0 and a > 0");
  if (!(scale > 0.0)) throw InvalidParameter("superspiral: scale must be positive");
  if (theta_domain.lo < 0.0)
    throw InvalidDomain("superspiral: tangent-angle domain starts below 0");

  const SuperspiralParams params = p;
  TangentAngleForm form;
  form.rho = [params, scale](double psi) {
    return scale * superspiral_radius(params, psi);
  };
  // d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z), and z = -psi.
  const SuperspiralParams bumped{params.a + 1.0, params.b + 1.0, params.c + 1.0};
  const double slope = params.a * params.b / params.c;
  form.drho_dtheta = [bumped, slope, scale](double psi) {
    return -scale * slope * superspiral_radius(bumped, psi);
  };
  return IntrinsicCurve(std::move(form), theta_domain, pose);
}

}  // namespace spiralis
