#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>

#include "fmra/ifs_system.hpp"
#include "fmra/parallel.hpp"

namespace fmra {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  std::complex<double> value;
  double error_bound = 0;  // Lip(f) * c_max^k when a Lipschitz bound is given
  int depth = 0;
};

/// Fixed point of the first core map, by iteration to 1e-14.
double core_anchor(const IFSystem& sys);

/// Depth-k approximation of ∫ f dμ for the equal-weight self-similar measure
/// on C: p^-k Σ_{ω∈A^k} f(τ_ω(x0)). Throws BudgetError when p^k exceeds the
/// enumeration budget. The p-ary reduction tree is fixed, so Serial and
/// Parallel agree bitwise.
QuadratureResult quadrature_mu(const IFSystem& sys,
                               const std::function<std::complex<double>(double)>& f,
                               int depth,
                               std::optional<double> lipschitz = std::nullopt,
                               Exec exec = Exec::Parallel);

}  // namespace fmra
