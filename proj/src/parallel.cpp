#include "fmra/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace fmra {

std::int64_t enumeration_budget() {
  static const std::int64_t budget = [] {
    if (const char* env = std::getenv("FRACTAL_MRA_BUDGET")) {
      try {
        long long v = std::stoll(env);
        if (v > 0) return static_cast<std::int64_t>(v);
      } catch (...) {
      }
    }
    return std::int64_t{1} << 24;
  }();
  return budget;
}

namespace {

constexpr std::int64_t kLeafBlock = 64;
constexpr std::int64_t kTaskThreshold = 1 << 12;

template <typename T, typename F>
T tree_sum_impl(std::int64_t lo, std::int64_t hi, const F& leaf, bool parallel) {
  if (hi - lo <= kLeafBlock) {
    T acc{};
    for (std::int64_t i = lo; i < hi; ++i) acc += leaf(i);
    return acc;
  }
  std::int64_t mid = lo + (hi - lo) / 2;
  T left{}, right{};
  if (parallel && hi - lo >= kTaskThreshold) {
#pragma omp task shared(left)
    left = tree_sum_impl<T>(lo, mid, leaf, parallel);
    right = tree_sum_impl<T>(mid, hi, leaf, parallel);
#pragma omp taskwait
  } else {
    left = tree_sum_impl<T>(lo, mid, leaf, parallel);
    right = tree_sum_impl<T>(mid, hi, leaf, parallel);
  }
  return left + right;
}

template <typename T, typename F>
T tree_sum_entry(std::int64_t lo, std::int64_t hi, const F& leaf, Exec exec) {
  if (exec == Exec::Serial) return tree_sum_impl<T>(lo, hi, leaf, false);
  T result{};
#pragma omp parallel
#pragma omp single
  result = tree_sum_impl<T>(lo, hi, leaf, true);
  return result;
}

}  // namespace

std::complex<double> tree_sum(std::int64_t lo, std::int64_t hi,
                              const std::function<std::complex<double>(std::int64_t)>& leaf,
                              Exec exec) {
  return tree_sum_entry<std::complex<double>>(lo, hi, leaf, exec);
}

double tree_sum_real(std::int64_t lo, std::int64_t hi,
                     const std::function<double(std::int64_t)>& leaf, Exec exec) {
  return tree_sum_entry<double>(lo, hi, leaf, exec);
}

}  // namespace fmra
