#pragma once

#include <vector>

#include "fmra/parallel.hpp"
#include "fmra/scaling.hpp"

namespace fmra {

struct BoundedValue {
  double value = 0;
  double bound = 0;
};

/// The order-preserving homeomorphism conjugating two gap-filled systems with
/// the same branch count: phi o tau~_i = tau_i o phi, phi(0)=0, phi(1)=1.
/// Production evaluation is digit-recursive; the grid fixed-point iteration
/// is kept as an independent oracle.
class Conjugacy {
 public:
  Conjugacy(IFSystem source, IFSystem target);

  const IFSystem& source() const { return source_; }
  const IFSystem& target() const { return target_; }
  int branch_count() const { return source_.branch_count(); }

  /// phi(x) for x in [0,1]; error bound c_target^K. With restrict_to_core the
  /// digits are certified against the core alphabet (phi restricted to C~).
  BoundedValue phi(double x, int depth, bool restrict_to_core = false) const;
  /// phi^{-1}(x) for x in [0,1]; digit-codes in the target system.
  BoundedValue phi_inverse(double x, int depth) const;

  /// phi~(x) = phi({x}) + floor(x) on all of R, and its inverse.
  BoundedValue phi_extended(double x, int depth) const;
  BoundedValue phi_inverse_extended(double x, int depth) const;

  /// x # y = phi~(phi~^{-1}(x) + phi~^{-1}(y)).
  BoundedValue sharp_add(double x, double y, int depth) const;

  std::vector<BoundedValue> phi_batch(const std::vector<double>& xs, int depth,
                                      Exec exec = Exec::Parallel) const;

 private:
  IFSystem source_;
  IFSystem target_;
};

struct GridApproximation {
  std::vector<double> nodes;   // M+1 uniform nodes on [0,1]
  std::vector<double> values;  // iterate values at the nodes
  int iterations = 0;
};

/// Banach iteration of (Ff)(x) = tau_i(f(tau~_i^{-1}(x))) on a uniform grid,
/// starting from the identity, with piecewise-linear reads off-grid.
GridApproximation fixed_point_iterate(const Conjugacy& conj, int grid_size,
                                      int iterations);

}  // namespace fmra
