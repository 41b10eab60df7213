#include "fmra/conjugacy.hpp"

#include <cmath>
#include <stdexcept>

#include <omp.h>

namespace fmra {

Conjugacy::Conjugacy(IFSystem source, IFSystem target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.branch_count() != target_.branch_count())
    throw std::invalid_argument("Conjugacy: branch counts differ");
  if (!source_.validate().ok || !target_.validate().ok)
    throw std::invalid_argument("Conjugacy: system fails validation");
}

BoundedValue Conjugacy::phi(double x, int depth, bool restrict_to_core) const {
  if (depth < 1) throw std::invalid_argument("phi: depth must be >= 1");
  BoundedValue out;
  out.bound = std::pow(target_.c_max(), depth);
  if (x <= 0.0) {
    out.value = 0.0;
    out.bound = 0.0;
    return out;
  }
  if (x >= 1.0) {
    out.value = 1.0;
    out.bound = 0.0;
    return out;
  }
  auto digits = digit_code(source_, x, depth);
  if (restrict_to_core)
    for (int d : digits)
      if (!source_.in_core(d))
        throw std::domain_error("phi: point leaves the core alphabet");
  double y = 0.0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it)
    y = target_.map(*it).eval(y);
  out.value = y;
  return out;
}

BoundedValue Conjugacy::phi_inverse(double x, int depth) const {
  if (depth < 1) throw std::invalid_argument("phi_inverse: depth must be >= 1");
  BoundedValue out;
  out.bound = std::pow(source_.c_max(), depth);
  if (x <= 0.0) {
    out.value = 0.0;
    out.bound = 0.0;
    return out;
  }
  if (x >= 1.0) {
    out.value = 1.0;
    out.bound = 0.0;
    return out;
  }
  auto digits = digit_code(target_, x, depth);
  double y = 0.0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it)
    y = source_.map(*it).eval(y);
  out.value = y;
  return out;
}

BoundedValue Conjugacy::phi_extended(double x, int depth) const {
  double k = std::floor(x);
  BoundedValue v = phi(x - k, depth);
  v.value += k;
  return v;
}

BoundedValue Conjugacy::phi_inverse_extended(double x, int depth) const {
  double k = std::floor(x);
  BoundedValue v = phi_inverse(x - k, depth);
  v.value += k;
  return v;
}

BoundedValue Conjugacy::sharp_add(double x, double y, int depth) const {
  BoundedValue ix = phi_inverse_extended(x, depth);
  BoundedValue iy = phi_inverse_extended(y, depth);
  BoundedValue fwd = phi_extended(ix.value + iy.value, depth);
  fwd.bound += (ix.bound + iy.bound);  // crude forward propagation
  return fwd;
}

std::vector<BoundedValue> Conjugacy::phi_batch(const std::vector<double>& xs, int depth,
                                               Exec exec) const {
  std::vector<BoundedValue> out(xs.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(xs.size()); ++i)
      out[i] = phi(xs[i], depth);
  } else {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = phi(xs[i], depth);
  }
  return out;
}

GridApproximation fixed_point_iterate(const Conjugacy& conj, int grid_size,
                                      int iterations) {
  if (grid_size < 2) throw std::invalid_argument("fixed_point_iterate: grid too small");
  if (iterations < 0) throw std::invalid_argument("fixed_point_iterate: iterations < 0");
  const IFSystem& src = conj.source();
  const IFSystem& dst = conj.target();
  const int M = grid_size;

  GridApproximation approx;
  approx.iterations = iterations;
  approx.nodes.resize(M + 1);
  approx.values.resize(M + 1);
  for (int i = 0; i <= M; ++i) {
    approx.nodes[i] = double(i) / M;
    approx.values[i] = approx.nodes[i];  // start from the identity
  }

  auto interp = [&](const std::vector<double>& v, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double pos = x * M;
    int i = static_cast<int>(std::floor(pos));
    if (i >= M) i = M - 1;
    double w = pos - i;
    return v[i] * (1.0 - w) + v[i + 1] * w;
  };

  std::vector<double> next(M + 1);
  for (int j = 0; j < iterations; ++j) {
    for (int i = 0; i <= M; ++i) {
      double x = approx.nodes[i];
      if (x >= 1.0) {
        next[i] = 1.0;
        continue;
      }
      int b = branch_of(src, x);
      next[i] = dst.map(b).eval(interp(approx.values, src.map(b).inverse(x)));
    }
    approx.values.swap(next);
  }
  return approx;
}

}  // namespace fmra
