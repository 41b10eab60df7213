#include "fmra/contraction.hpp"

#include <cmath>
#include <stdexcept>

namespace fmra {

Contraction Contraction::affine(double a, double b) {
  Contraction c;
  c.family_ = MapFamily::Affine;
  c.a = a;
  c.b = b;
  c.lip_ = std::abs(a);
  return c;
}

Contraction Contraction::quadratic(double alpha, double beta, double gamma) {
  Contraction c;
  c.family_ = MapFamily::Quadratic;
  c.alpha = alpha;
  c.beta = beta;
  c.gamma = gamma;
  // derivative 2*alpha*x + beta is affine, so the max on [0,1] sits at an endpoint
  c.lip_ = std::max(std::abs(beta), std::abs(2 * alpha + beta));
  return c;
}

Contraction Contraction::logexp(double s, double base, double t) {
  if (base <= 1.0) throw std::invalid_argument("logexp: base must exceed 1");
  Contraction c;
  c.family_ = MapFamily::LogExp;
  c.s = s;
  c.base = base;
  c.t = t;
  // derivative s/((x+1) ln base) is decreasing, max at x = 0
  c.lip_ = std::abs(s) / std::log(base);
  return c;
}

Contraction Contraction::generic(std::function<double(double)> fwd, double lipschitz,
                                 std::function<double(double)> inv, double bisect_tol) {
  Contraction c;
  c.family_ = MapFamily::Generic;
  c.fwd_ = std::move(fwd);
  c.inv_ = std::move(inv);
  c.lip_ = lipschitz;
  c.bisect_tol_ = bisect_tol;
  return c;
}

double Contraction::eval(double x) const {
  switch (family_) {
    case MapFamily::Affine:
      return a * x + b;
    case MapFamily::Quadratic:
      return (alpha * x + beta) * x + gamma;
    case MapFamily::LogExp:
      return s * std::log(x + 1.0) / std::log(base) + t;
    case MapFamily::Generic:
      return fwd_(x);
  }
  return 0;
}

double Contraction::inverse(double y) const {
  switch (family_) {
    case MapFamily::Affine:
      return (y - b) / a;
    case MapFamily::Quadratic: {
      if (alpha == 0.0) return (y - gamma) / beta;
      // root on the increasing branch for either sign of alpha
      double disc = beta * beta - 4 * alpha * (gamma - y);
      if (disc < 0) {
        if (disc > -1e-14) disc = 0;  // graze from rounding
        else throw std::domain_error("quadratic inverse: no real root");
      }
      return (-beta + std::sqrt(disc)) / (2 * alpha);
    }
    case MapFamily::LogExp:
      return std::exp((y - t) * std::log(base) / s) - 1.0;
    case MapFamily::Generic: {
      if (inv_) return inv_(y);
      // monotonicity brackets the root in [0,1]
      double lo = 0.0, hi = 1.0;
      double flo = fwd_(lo) - y, fhi = fwd_(hi) - y;
      if (flo > 0 || fhi < 0) throw std::domain_error("generic inverse: value out of range");
      while (hi - lo > bisect_tol_) {
        double mid = 0.5 * (lo + hi);
        double fm = fwd_(mid) - y;
        if (fm <= 0)
          lo = mid;
        else
          hi = mid;
      }
      return 0.5 * (lo + hi);
    }
  }
  return 0;
}

bool Contraction::increasing_on_unit() const {
  switch (family_) {
    case MapFamily::Affine:
      return a > 0;
    case MapFamily::Quadratic:
      return beta > 0 && 2 * alpha + beta > 0;
    case MapFamily::LogExp:
      return s > 0;
    case MapFamily::Generic: {
      double prev = fwd_(0.0);
      for (int i = 1; i <= 64; ++i) {
        double cur = fwd_(i / 64.0);
        if (cur <= prev) return false;
        prev = cur;
      }
      return true;
    }
  }
  return false;
}

bool Contraction::maps_unit_into_unit() const {
  double lo = eval(0.0), hi = eval(1.0);
  const double eps = 1e-12;
  return lo >= -eps && hi <= 1.0 + eps && lo <= hi;
}

}  // namespace fmra
