#pragma once

#include <complex>
#include <cstdint>
#include <functional>

namespace fmra {

/// Execution policy for the data-parallel kernels. Every kernel has a serial
/// reference path; the parallel path must produce bit-identical results
/// (fixed reduction trees, per-chunk RNG streams, independent matrix entries).
enum class Exec { Serial, Parallel };

/// Enumeration budget for p^k style sweeps; reads FRACTAL_MRA_BUDGET once,
/// default 2^24.
std::int64_t enumeration_budget();

/// Sum leaf(i) for i in [lo, hi) over a fixed binary tree (split at midpoint,
/// blocks of <=64 summed left to right). The tree shape does not depend on
/// the execution policy, so serial and parallel sums are bit-identical.
std::complex<double> tree_sum(std::int64_t lo, std::int64_t hi,
                              const std::function<std::complex<double>(std::int64_t)>& leaf,
                              Exec exec);

double tree_sum_real(std::int64_t lo, std::int64_t hi,
                     const std::function<double(std::int64_t)>& leaf, Exec exec);

}  // namespace fmra
