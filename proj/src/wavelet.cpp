#include "fmra/wavelet.hpp"

#include <cmath>
#include <stdexcept>

#include <omp.h>

#include "fmra/quadrature.hpp"

namespace fmra {

CellFunction apply_T(const CellFunction& f, std::int64_t k) {
  CellFunction out;
  for (const auto& [cell, coef] : f.terms()) {
    Cell shifted = cell;
    shifted.shift += k;
    out.add_term(shifted, coef, 2);  // distinct cells, p irrelevant for merging
  }
  return out;
}

CellFunction apply_U(const IFSystem& sys, const CellFunction& f, int n) {
  const long p = sys.core_count();
  CellFunction cur = f;
  for (; n > 0; --n) {
    CellFunction next;
    for (const auto& [cell, coef] : cur.terms()) {
      Coef scaled = coef;
      scaled.hp -= 1;
      for (const Cell& img : sigma_image(sys, cell)) next.add_term(img, scaled, p);
    }
    cur = std::move(next);
  }
  for (; n < 0; ++n) {
    CellFunction next;
    for (const auto& [cell, coef] : cur.terms()) {
      Coef scaled = coef;
      scaled.hp += 1;
      next.add_term(sigma_preimage(sys, cell), scaled, p);
    }
    cur = std::move(next);
  }
  return cur;
}

WaveletSystem::WaveletSystem(IFSystem sys) : sys_(std::move(sys)) {
  auto rep = sys_.validate();
  if (!rep.ok) throw std::invalid_argument("WaveletSystem: system fails validation");
  father_ = CellFunction(Cell(Word{}, 0), Coef(1.0));
  filters_ = build_filters(sys_.branch_count(), sys_.core());
  mothers_ = mother_wavelets(*this);
}

std::vector<CellFunction> mother_wavelets(const WaveletSystem& ws) {
  const IFSystem& sys = ws.system();
  const long p = sys.core_count();
  std::vector<CellFunction> mothers;

  // gap filter z^d gives sqrt(p) * chi_{tau_d(C)}
  for (int d : sys.gap_letters()) {
    CellFunction psi;
    psi.add_term(Cell(Word{d}, 0), Coef(1.0, 1), p);
    mothers.push_back(std::move(psi));
  }
  // modulated filter k gives sum_j eta^{kj} chi_{tau_{a_j}(C)}
  for (long k = 1; k < p; ++k) {
    CellFunction psi;
    const auto& A = sys.core();
    for (std::size_t j = 0; j < A.size(); ++j)
      psi.add_term(Cell(Word{A[j]}, 0), Coef(unit_root(k * static_cast<long>(j), p), 0), p);
    mothers.push_back(std::move(psi));
  }
  return mothers;
}

std::vector<CellFunction> WaveletSystem::mothers_via_operators() const {
  const long p = sys_.core_count();
  std::vector<CellFunction> out;
  for (std::size_t i = 1; i < filters_.size(); ++i) {
    // m_i(T) phi = sum_d c_d T^d phi, then U^{-1}
    CellFunction g;
    for (const auto& [d, coef] : filters_[i].coefficients())
      g.add_term(Cell(Word{}, d), coef, p);
    out.push_back(apply_U(sys_, g, -1));
  }
  return out;
}

CellFunction WaveletSystem::basis_function(int n, std::int64_t k, int i) const {
  if (i < 0 || i >= sys_.branch_count())
    throw std::out_of_range("basis_function: index out of range");
  CellFunction f = i == 0 ? father_ : mothers_[i - 1];
  f = apply_T(f, k);
  return apply_U(sys_, f, n);
}

std::vector<std::vector<std::complex<double>>> gram_matrix(
    const IFSystem& sys, const std::vector<CellFunction>& functions, Exec exec) {
  const std::int64_t n = static_cast<std::int64_t>(functions.size());
  if (n * n > enumeration_budget())
    throw BudgetError("gram_matrix: dimension exceeds enumeration budget");
  std::vector<std::vector<std::complex<double>>> gram(
      n, std::vector<std::complex<double>>(n));

  // upper triangle, row-major; every entry independent
  const std::int64_t entries = n * (n + 1) / 2;
  auto fill = [&](std::int64_t idx) {
    std::int64_t r = 0;
    while ((r + 1) * (2 * n - r) / 2 <= idx) ++r;
    std::int64_t c = r + idx - r * (2 * n - r + 1) / 2;
    gram[r][c] = inner_product(sys, functions[r], functions[c]);
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t idx = 0; idx < entries; ++idx) fill(idx);
  } else {
    for (std::int64_t idx = 0; idx < entries; ++idx) fill(idx);
  }
  for (std::int64_t r = 0; r < n; ++r)
    for (std::int64_t c = 0; c < r; ++c) gram[r][c] = std::conj(gram[c][r]);
  return gram;
}

GramStats gram_stats(const std::vector<std::vector<std::complex<double>>>& gram) {
  GramStats st;
  st.dims = gram.size();
  for (std::size_t r = 0; r < gram.size(); ++r) {
    for (std::size_t c = 0; c < gram.size(); ++c) {
      double v = std::abs(gram[r][c] - (r == c ? 1.0 : 0.0));
      if (r == c)
        st.max_diag_dev = std::max(st.max_diag_dev, v);
      else
        st.max_offdiag = std::max(st.max_offdiag, v);
    }
  }
  return st;
}

namespace {

/// Shift range at level n whose basis support sigma^n([k,k+1)) can meet
/// shifts [m_lo, m_hi] of f.
std::pair<std::int64_t, std::int64_t> shift_window(int n, std::int64_t m_lo,
                                                   std::int64_t m_hi, int N) {
  if (n >= 0) {
    double scale = std::pow(double(N), n);
    auto lo = static_cast<std::int64_t>(std::floor(double(m_lo) / scale));
    auto hi = static_cast<std::int64_t>(std::floor(double(m_hi) / scale));
    return {lo, hi};
  }
  double scale = std::pow(double(N), -n);
  auto lo = static_cast<std::int64_t>(std::floor(double(m_lo) * scale));
  auto hi = static_cast<std::int64_t>(std::floor((double(m_hi) + 1) * scale));
  return {lo, hi};
}

}  // namespace

ParsevalResult parseval_decompose(const WaveletSystem& ws, const CellFunction& f,
                                  int n_min, int n_max) {
  if (n_min > n_max) throw std::invalid_argument("parseval: n_min > n_max");
  const IFSystem& sys = ws.system();
  const long p = sys.core_count();
  const int N = sys.branch_count();

  ParsevalResult res;
  res.energy_defect = QSurd(p);
  if (f.empty()) return res;

  std::int64_t m_lo = f.min_shift(), m_hi = f.max_shift();
  QSurd energy = inner_product_exact(sys, f, f);
  QSurd captured(p);

  CellFunction reconstruction;

  auto take = [&](int n, std::int64_t k, int i) {
    CellFunction basis = ws.basis_function(n, k, i);
    QSurd coef = inner_product_exact(sys, f, basis);
    if (coef.is_zero()) return;
    WaveletCoefficient wc;
    wc.level = n;
    wc.shift = k;
    wc.index = i;
    wc.value = coef;
    (i == 0 ? res.coarse : res.details).push_back(wc);
    captured = captured + coef * coef.conj();
    CellFunction scaled = basis;
    scaled.scale(coef.to_complex());
    reconstruction = add(reconstruction, scaled, p);
  };

  for (int n = n_min; n <= n_max; ++n) {
    auto [k_lo, k_hi] = shift_window(n, m_lo, m_hi, N);
    for (std::int64_t k = k_lo; k <= k_hi; ++k)
      for (int i = 1; i < N; ++i) take(n, k, i);
  }
  auto [k_lo, k_hi] = shift_window(n_max, m_lo, m_hi, N);
  for (std::int64_t k = k_lo; k <= k_hi; ++k) take(n_max, k, 0);

  res.energy_defect = energy - captured;

  CellFunction diff = add(f, [&] {
    CellFunction neg = reconstruction;
    neg.scale(-1.0);
    return neg;
  }(), p);
  res.residual_norm2 = std::abs(inner_product(sys, diff, diff));
  return res;
}

ScalingEquationReport scaling_equation_check(const WaveletSystem& ws,
                                             const std::vector<double>& sample_points,
                                             int digit_depth) {
  const IFSystem& sys = ws.system();
  ScalingEquationReport rep;
  for (double x : sample_points) {
    auto lhs = in_limit_set(sys, x, digit_depth);
    if (lhs.verdict == Membership::Unknown) {
      ++rep.undecided;
      continue;
    }
    double sx = scaling_eval(sys, x);
    int rhs_val = 0;
    bool undecided = false;
    for (int a : sys.core()) {
      auto m = in_limit_set(sys, sx - a, digit_depth);
      if (m.verdict == Membership::Unknown) {
        undecided = true;
        break;
      }
      if (m.verdict == Membership::Yes) ++rhs_val;
    }
    if (undecided) {
      ++rep.undecided;
      continue;
    }
    ++rep.decided;
    int lhs_val = lhs.verdict == Membership::Yes ? 1 : 0;
    if (lhs_val != rhs_val) ++rep.violations;
  }
  return rep;
}

}  // namespace fmra
