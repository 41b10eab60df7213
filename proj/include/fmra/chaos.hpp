#pragma once

#include <cstdint>

#include "fmra/cell.hpp"
#include "fmra/parallel.hpp"

namespace fmra {

struct ChaosEstimate {
  double value = 0;       // estimated H(c1 ∩ c2)
  double std_error = 0;   // binomial standard error of the estimate
  std::int64_t samples = 0;
  std::int64_t hits = 0;
};

/// Monte Carlo estimate of H(c1 ∩ c2): draws points of c1 by running the
/// chaos game on the core maps, then tests membership in c2 numerically by
/// digit coding. Independent of the symbolic intersection logic; used as an
/// oracle against it. Per-chunk RNG streams keep the result identical for
/// both execution policies.
ChaosEstimate chaos_intersection_estimate(const IFSystem& sys, const Cell& c1,
                                          const Cell& c2, std::int64_t samples,
                                          std::uint64_t seed,
                                          Exec exec = Exec::Parallel);

}  // namespace fmra
