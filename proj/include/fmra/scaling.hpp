#pragma once

#include <vector>

#include "fmra/ifs_system.hpp"

namespace fmra {

/// Branch index of y in the half-open partition {[tau_i(0), tau_i(1))};
/// y = 1 belongs to branch N-1 by convention.
int branch_of(const IFSystem& sys, double y);

/// The expanding map conjugate to x -> N x, defined on all of R.
double scaling_eval(const IFSystem& sys, double x);
double scaling_inverse_eval(const IFSystem& sys, double x);

/// First K branch digits of x in [0,1], coarsest first; x = 1 codes as all
/// N-1. For homogeneous linear systems this is the base-N expansion.
std::vector<int> digit_code(const IFSystem& sys, double x, int depth);

enum class Membership { Yes, No, Unknown };

struct MembershipReport {
  Membership verdict = Membership::Unknown;
  int depth = 0;
  double tolerance = 0;  // c_max^depth
};

/// Certified-at-depth membership of x in the enlarged fractal R. Yes means
/// the computed digits end in a run of core letters (certificate at
/// tolerance c_max^K); membership is a tail property, so a No can never be
/// certified at finite depth (every digit cylinder meets R) and the verdict
/// otherwise stays Unknown.
MembershipReport in_enlarged_fractal(const IFSystem& sys, double x, int depth);

/// Three-valued chi_C(x): Yes iff all K digits are core letters, No iff a gap
/// digit occurs, Unknown when a digit decision sits within `knot_tol` of a
/// branch knot (excluded from pointwise checks).
MembershipReport in_limit_set(const IFSystem& sys, double x, int depth,
                              double knot_tol = 1e-9);

}  // namespace fmra
