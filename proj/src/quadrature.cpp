#include "fmra/quadrature.hpp"

#include <cmath>

#include <omp.h>

namespace fmra {

double core_anchor(const IFSystem& sys) {
  const Contraction& m = sys.map(sys.core().front());
  double x = 0.5;
  for (int i = 0; i < 2000; ++i) {
    double next = m.eval(x);
    if (std::abs(next - x) < 1e-14) return next;
    x = next;
  }
  return x;
}

namespace {

std::complex<double> quad_rec(const IFSystem& sys,
                              const std::function<std::complex<double>(double)>& f,
                              double x, int remaining, int spawn_depth, bool parallel) {
  if (remaining == 0) return f(x);
  const auto& core = sys.core();
  std::size_t n = core.size();
  std::vector<std::complex<double>> parts(n);
  if (parallel && spawn_depth > 0) {
    for (std::size_t j = 0; j < n; ++j) {
#pragma omp task shared(parts)
      parts[j] = quad_rec(sys, f, sys.map(core[j]).eval(x), remaining - 1,
                          spawn_depth - 1, parallel);
    }
#pragma omp taskwait
  } else {
    for (std::size_t j = 0; j < n; ++j)
      parts[j] = quad_rec(sys, f, sys.map(core[j]).eval(x), remaining - 1, 0, parallel);
  }
  std::complex<double> acc{0.0, 0.0};
  for (const auto& v : parts) acc += v;  // fixed combination order
  return acc;
}

}  // namespace

QuadratureResult quadrature_mu(const IFSystem& sys,
                               const std::function<std::complex<double>(double)>& f,
                               int depth, std::optional<double> lipschitz, Exec exec) {
  if (depth < 1) throw std::invalid_argument("quadrature_mu: depth must be >= 1");
  const double p = sys.core_count();
  double nodes = std::pow(p, depth);
  if (nodes > double(enumeration_budget()))
    throw BudgetError("quadrature_mu: p^depth exceeds enumeration budget");

  double x0 = core_anchor(sys);
  std::complex<double> total;
  if (exec == Exec::Parallel) {
#pragma omp parallel
#pragma omp single
    total = quad_rec(sys, f, x0, depth, 6, true);
  } else {
    total = quad_rec(sys, f, x0, depth, 0, false);
  }

  QuadratureResult res;
  res.value = total * std::pow(p, -depth);
  res.depth = depth;
  res.error_bound = lipschitz ? *lipschitz * std::pow(sys.c_max(), depth)
                              : std::pow(sys.c_max(), depth);
  return res;
}

}  // namespace fmra
