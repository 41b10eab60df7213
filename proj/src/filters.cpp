#include "fmra/filters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fmra {

std::complex<double> unit_root(long num, long den) {
  long r = num % den;
  if (r < 0) r += den;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == den) return {-1.0, 0.0};
  if (4 * r == den) return {0.0, 1.0};
  if (4 * r == 3 * den) return {0.0, -1.0};
  double angle = 2.0 * std::numbers::pi * double(r) / double(den);
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> Filter::eval(std::complex<double> z) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [d, coef] : coeffs_) {
    std::complex<double> zd{1.0, 0.0};
    if (d >= 0)
      for (int i = 0; i < d; ++i) zd *= z;
    else
      for (int i = 0; i < -d; ++i) zd /= z;
    acc += coef.to_complex(p_) * zd;
  }
  return acc;
}

std::vector<Filter> build_filters(int N, const std::vector<int>& A) {
  if (A.empty()) throw std::invalid_argument("build_filters: empty digit set");
  for (int a : A)
    if (a < 0 || a >= N) throw std::invalid_argument("build_filters: letter out of range");
  const long p = static_cast<long>(A.size());

  std::vector<Filter> filters;
  filters.reserve(N);

  // low pass
  Filter::CoefMap low;
  for (int a : A) low[a] = Coef(1.0, -1);
  filters.emplace_back(std::move(low), p);

  // monomial gap filters, gap letters ascending
  std::vector<int> gaps;
  for (int i = 0; i < N; ++i)
    if (std::find(A.begin(), A.end(), i) == A.end()) gaps.push_back(i);
  for (int d : gaps) {
    Filter::CoefMap m;
    m[d] = Coef(1.0, 0);
    filters.emplace_back(std::move(m), p);
  }

  // modulated filters for k = 1..p-1 with eta = e^{2 pi i / p}
  for (long k = 1; k < p; ++k) {
    Filter::CoefMap m;
    for (std::size_t j = 0; j < A.size(); ++j)
      m[A[j]] = Coef(unit_root(k * static_cast<long>(j), p), -1);
    filters.emplace_back(std::move(m), p);
  }
  return filters;
}

double filter_matrix_unitary_check(const std::vector<Filter>& filters, int N,
                                   const std::vector<std::complex<double>>& z_samples) {
  if (z_samples.empty()) throw std::invalid_argument("unitary check: no samples");
  const std::size_t n = filters.size();
  double worst = 0;
  for (const auto& z : z_samples) {
    // M[j][l] = m_j(rho^l z) / sqrt(N)
    std::vector<std::vector<std::complex<double>>> M(n, std::vector<std::complex<double>>(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        M[j][l] = filters[j].eval(unit_root(static_cast<long>(l), N) * z) /
                  std::sqrt(double(N));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        std::complex<double> dot{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) dot += std::conj(M[j][r]) * M[j][c];
        if (r == c) dot -= 1.0;
        worst = std::max(worst, std::abs(dot));
      }
    }
  }
  return worst;
}

}  // namespace fmra
