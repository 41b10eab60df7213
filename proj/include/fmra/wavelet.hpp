#pragma once

#include <complex>
#include <vector>

#include "fmra/cell_function.hpp"
#include "fmra/filters.hpp"
#include "fmra/scaling.hpp"

namespace fmra {

/// (T^k f)(x) = f(x - k): shifts every cell.
CellFunction apply_T(const CellFunction& f, std::int64_t k);

/// (U f)(x) = p^{-1/2} f(sigma^{-1}(x)); n < 0 applies the inverse. Exact on
/// cells: sigma images/preimages with the half-power bookkeeping.
CellFunction apply_U(const IFSystem& sys, const CellFunction& f, int n);

/// Father wavelet chi_C, the filter bank, and the N-1 mother wavelets.
/// Level convention: V_j = span{U^j T^k phi}; levels decrease toward finer
/// resolution (V_1 ⊂ V_0 ⊂ V_{-1}).
class WaveletSystem {
 public:
  explicit WaveletSystem(IFSystem sys);

  const IFSystem& system() const { return sys_; }
  const CellFunction& father() const { return father_; }
  const std::vector<Filter>& filters() const { return filters_; }
  const std::vector<CellFunction>& mothers() const { return mothers_; }

  /// U^n T^k psi_i; i = 0 gives U^n T^k phi.
  CellFunction basis_function(int n, std::int64_t k, int i) const;

  /// Mothers recomputed through the operator route U^{-1} m_i(T) phi, kept as
  /// a cross-check against the materialized closed forms.
  std::vector<CellFunction> mothers_via_operators() const;

 private:
  IFSystem sys_;
  CellFunction father_;
  std::vector<Filter> filters_;
  std::vector<CellFunction> mothers_;
};

std::vector<CellFunction> mother_wavelets(const WaveletSystem& ws);

/// Pairwise inner-product matrix. Entries are independent, so the parallel
/// path fills the same values the serial one does.
std::vector<std::vector<std::complex<double>>> gram_matrix(
    const IFSystem& sys, const std::vector<CellFunction>& functions,
    Exec exec = Exec::Parallel);

struct GramStats {
  double max_offdiag = 0;
  double max_diag_dev = 0;
  std::size_t dims = 0;
};

GramStats gram_stats(const std::vector<std::vector<std::complex<double>>>& gram);

struct WaveletCoefficient {
  int level = 0;
  std::int64_t shift = 0;
  int index = 0;  // 1..N-1 for details, 0 for the coarse layer
  QSurd value;
};

struct ParsevalResult {
  std::vector<WaveletCoefficient> details;
  std::vector<WaveletCoefficient> coarse;
  QSurd energy_defect;        // ||f||^2 - Σ|coef|^2, exact (zero when the
                              // window spans f)
  double residual_norm2 = 0;  // ||f - reconstruction||^2, floating
};

/// Detail coefficients <f | U^n T^k psi_i> for n_min <= n <= n_max plus the
/// coarse layer <f | U^{n_max} T^k phi>, shifts restricted to supp f.
ParsevalResult parseval_decompose(const WaveletSystem& ws, const CellFunction& f,
                                  int n_min, int n_max);

struct ScalingEquationReport {
  int decided = 0;
  int undecided = 0;
  int violations = 0;
};

/// Pointwise check of phi(x) = Σ_{a∈A} phi(sigma(x)-a) through digit-based
/// membership at depth K; undecided points are excluded and reported.
ScalingEquationReport scaling_equation_check(const WaveletSystem& ws,
                                             const std::vector<double>& sample_points,
                                             int digit_depth);

}  // namespace fmra
