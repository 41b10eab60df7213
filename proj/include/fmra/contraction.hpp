#pragma once

#include <functional>
#include <optional>
#include <string>

namespace fmra {

enum class MapFamily { Affine, Quadratic, LogExp, Generic };

/// One increasing contraction branch on [0,1]. Families with closed-form
/// inverses and Lipschitz constants cover every map used in practice;
/// Generic falls back to a certified constant and bisection.
class Contraction {
 public:
  /// x -> a*x + b
  static Contraction affine(double a, double b);
  /// x -> alpha*x^2 + beta*x + gamma
  static Contraction quadratic(double alpha, double beta, double gamma);
  /// x -> s * log_base(x+1) + t
  static Contraction logexp(double s, double base, double t);
  static Contraction generic(std::function<double(double)> fwd, double lipschitz,
                             std::function<double(double)> inv = nullptr,
                             double bisect_tol = 1e-13);

  double operator()(double x) const { return eval(x); }
  double eval(double x) const;
  double inverse(double y) const;
  double lipschitz() const { return lip_; }
  MapFamily family() const { return family_; }

  bool increasing_on_unit() const;
  bool maps_unit_into_unit() const;

  // family parameters (valid for the corresponding family only)
  double a = 0, b = 0;                  // affine
  double alpha = 0, beta = 0, gamma = 0;  // quadratic
  double s = 0, base = 0, t = 0;          // logexp

 private:
  Contraction() = default;
  MapFamily family_ = MapFamily::Affine;
  double lip_ = 0;
  std::function<double(double)> fwd_;
  std::function<double(double)> inv_;
  double bisect_tol_ = 1e-13;
};

}  // namespace fmra
