#pragma once

#include <complex>
#include <map>
#include <vector>

#include "fmra/exact.hpp"

namespace fmra {

/// Trigonometric polynomial m(z) = Σ c_d z^d on the unit circle. Coefficients
/// carry the same half-power-of-p scaling as cell coefficients so 1/sqrt(p)
/// factors stay symbolic.
class Filter {
 public:
  using CoefMap = std::map<int, Coef>;

  Filter() = default;
  explicit Filter(CoefMap coeffs, long p) : coeffs_(std::move(coeffs)), p_(p) {}

  const CoefMap& coefficients() const { return coeffs_; }
  long p() const { return p_; }

  std::complex<double> eval(std::complex<double> z) const;

 private:
  CoefMap coeffs_;
  long p_ = 1;
};

/// e^{2 pi i num/den}, exact for the quarter-turn angles.
std::complex<double> unit_root(long num, long den);

/// Low-pass filter, then the N-p monomial gap filters (gap letters
/// ascending), then the p-1 modulated filters for k = 1..p-1.
std::vector<Filter> build_filters(int N, const std::vector<int>& A);

/// max over samples of ||M(z)*M(z) - I||_max for the (1/sqrt N) m_j(rho^l z)
/// matrix; samples must lie on the unit circle.
double filter_matrix_unitary_check(const std::vector<Filter>& filters, int N,
                                   const std::vector<std::complex<double>>& z_samples);

}  // namespace fmra
