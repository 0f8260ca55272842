#include "spiralis/hypergeom.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace spiralis {

namespace {

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// Sums 1 + sum_{n>=1} t_n where t_{n+1} = t_n * ratio(n). Stops once two
// consecutive terms drop below tol * max(1, |partial|).
SeriesResult sum_hypergeometric(const std::function<double(int)>& ratio,
                                double tol, const char* name) {
  double term = 1.0;
  double sum = 1.0;
  double prev_mag = 1.0;
  int small_run = 0;
  int last_significant = 0;

  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    term *= ratio(n);
    sum += term;
    const double mag = std::fabs(term);
    const double threshold = tol * std::fmax(1.0, std::fabs(sum));
    if (mag < threshold) {
      if (++small_run >= 2) {
        SeriesResult r;
        r.value = sum;
        r.terms_used = last_significant + 1;
        r.truncation_estimate = std::fmax(mag, prev_mag);
        r.converged = true;
        return r;
      }
    } else {
      small_run = 0;
      last_significant = n + 1;
    }
    prev_mag = mag;
  }
  throw NonConvergence(std::string(name) + ": series did not meet tolerance within " +
                       std::to_string(kMaxSeriesTerms) + " terms");
}

}  // namespace

double pochhammer(double a, int n) {
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + k;
  return p;
}

SeriesResult hyp1f2(double a, double b, double c, double z, double tol) {
  if (is_nonpositive_integer(b) || is_nonpositive_integer(c))
    throw InvalidParameter("hyp1f2: denominator parameter is a nonpositive integer");
  if (!(tol > 0.0)) throw InvalidParameter("hyp1f2: tol must be positive");

  auto ratio = [&](int n) {
    return (a + n) / ((b + n) * (c + n)) * z / (n + 1);
  };
  return sum_hypergeometric(ratio, tol, "hyp1f2");
}

SeriesResult hyp2f1(double a, double b, double c, double z, double tol) {
  if (is_nonpositive_integer(c))
    throw InvalidParameter("hyp2f1: parameter c is a nonpositive integer");
  if (z > 0.0) throw DomainError("hyp2f1: only z <= 0 is supported");
  if (!(tol > 0.0)) throw InvalidParameter("hyp2f1: tol must be positive");

  if (z > -0.5) {
    auto ratio = [&](int n) {
      return (a + n) * (b + n) / ((c + n) * (n + 1)) * z;
    };
    return sum_hypergeometric(ratio, tol, "hyp2f1");
  }

  // Pfaff: 2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; w), w = z/(z-1) in [1/3, 1).
  const double w = z / (z - 1.0);
  const double b2 = c - b;
  auto ratio = [&](int n) {
    return (a + n) * (b2 + n) / ((c + n) * (n + 1)) * w;
  };
  SeriesResult r = sum_hypergeometric(ratio, tol, "hyp2f1");
  const double scale = std::pow(1.0 - z, -a);
  r.value *= scale;
  r.truncation_estimate *= std::fabs(scale);
  return r;
}

bool validate_superspiral_params(double a, double b, double c) {
  return c > b && b > 0.0 && a > 0.0;
}

}  // namespace spiralis
