#include "spiralis/quadrature.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace spiralis {

namespace {

// Kronrod-15 abscissae on [-1, 1] (positive half; the rule is symmetric).
// Even indices are Kronrod-only points, odd indices are the embedded
// Gauss-7 points, index 7 is the midpoint.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double error = 0.0;
  double resabs = 0.0;  // integral of |f|, for the roundoff floor

  bool operator<(const Panel& other) const { return error < other.error; }
};

double eval_checked(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v))
    throw NonFiniteEvaluation("integrand non-finite at x = " + std::to_string(x));
  return v;
}

// One G7-K15 application on [a, b], QUADPACK-style error scaling.
Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fv1[7];
  double fv2[7];
  const double fc = eval_checked(f, center);

  double resg = kWg[3] * fc;
  double resk = kWgk[7] * fc;
  double resabs = kWgk[7] * std::fabs(fc);

  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;  // embedded Gauss points
    const double dx = half * kXgk[jtw];
    fv1[jtw] = eval_checked(f, center - dx);
    fv2[jtw] = eval_checked(f, center + dx);
    const double fsum = fv1[jtw] + fv2[jtw];
    resg += kWg[j] * fsum;
    resk += kWgk[jtw] * fsum;
    resabs += kWgk[jtw] * (std::fabs(fv1[jtw]) + std::fabs(fv2[jtw]));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;  // Kronrod-only points
    const double dx = half * kXgk[jtwm1];
    fv1[jtwm1] = eval_checked(f, center - dx);
    fv2[jtwm1] = eval_checked(f, center + dx);
    const double fsum = fv1[jtwm1] + fv2[jtwm1];
    resk += kWgk[jtwm1] * fsum;
    resabs += kWgk[jtwm1] * (std::fabs(fv1[jtwm1]) + std::fabs(fv2[jtwm1]));
  }

  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

  Panel p;
  p.lo = a;
  p.hi = b;
  p.value = resk * half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);
  p.resabs = resabs;

  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::fmin(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) err = std::fmax(eps * 50.0 * resabs, err);
  p.error = err;
  return p;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double abs_tol, double rel_tol) {
  if (lo > hi) throw InvalidInterval("integrate: lo > hi");
  if (!(abs_tol > 0.0) && !(rel_tol > 0.0))
    throw InvalidParameter("integrate: need a positive tolerance");
  if (lo == hi) return {0.0, 0.0, 0, true};

  std::priority_queue<Panel> queue;
  queue.push(gk15(f, lo, hi));
  double total_value = queue.top().value;
  double total_error = queue.top().error;
  double total_resabs = queue.top().resabs;

  // Requested target, never pushed below what double precision can attain:
  // once every panel error sits at its 50*eps*resabs floor, further
  // subdivision cannot reduce the sum.
  const double eps = std::numeric_limits<double>::epsilon();
  auto target = [&](double value, double resabs) {
    return std::fmax(std::fmax(abs_tol, rel_tol * std::fabs(value)),
                     50.0 * eps * resabs);
  };

  while (total_error > target(total_value, total_resabs) &&
         static_cast<int>(queue.size()) < kMaxSubintervals) {
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      // Interval at floating-point resolution; cannot refine further.
      queue.push(worst);
      break;
    }
    const Panel left = gk15(f, worst.lo, mid);
    const Panel right = gk15(f, mid, worst.hi);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    total_resabs += left.resabs + right.resabs - worst.resabs;
    queue.push(left);
    queue.push(right);
  }

  const bool met_during_loop = total_error <= target(total_value, total_resabs);

  // Re-sum from the final partition; the incremental totals drift slightly.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  total_value = 0.0;
  total_error = 0.0;
  total_resabs = 0.0;
  for (const Panel& p : panels) {
    total_value += p.value;
    total_error += p.error;
    total_resabs += p.resabs;
  }

  QuadratureResult r;
  r.value = total_value;
  r.error_estimate = total_error;
  r.subintervals_used = static_cast<int>(panels.size());
  r.converged = met_during_loop || total_error <= target(total_value, total_resabs);
  if (!r.converged)
    throw NonConvergence("integrate: error " + std::to_string(total_error) +
                         " above tolerance after " +
                         std::to_string(panels.size()) + " subintervals");
  return r;
}

}  // namespace spiralis
