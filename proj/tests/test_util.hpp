#pragma once

#include <complex>
#include <random>

#include "fmra/cell_function.hpp"
#include "fmra/ifs_system.hpp"

namespace fmra::testutil {

/// 1/3-Cantor gap-filled system: (rho_{0,3}, rho_{1,3}, rho_{2,3}), A = {0,2}.
inline IFSystem cantor3() {
  std::vector<Contraction> maps;
  for (int j = 0; j < 3; ++j) maps.push_back(Contraction::affine(1.0 / 3, j / 3.0));
  return IFSystem(std::move(maps), {0, 2}, "cantor-1-3");
}

/// 1/4-Cantor with one gap filler: (rho_{0,4}, x/2+1/4, rho_{3,4}), A = {0,2}.
inline IFSystem cantor4_gap() {
  std::vector<Contraction> maps;
  maps.push_back(Contraction::affine(0.25, 0.0));
  maps.push_back(Contraction::affine(0.5, 0.25));
  maps.push_back(Contraction::affine(0.25, 0.75));
  return IFSystem(std::move(maps), {0, 2}, "cantor-1-4-gap");
}

/// The quadratic/affine/log three-branch system:
/// tau_0 = x^2/5 + 2x/5, tau_1 = x/5 + 3/5, tau_2 = log2(x+1)/5 + 4/5.
inline IFSystem nonlinear_example() {
  std::vector<Contraction> maps;
  maps.push_back(Contraction::quadratic(0.2, 0.4, 0.0));
  maps.push_back(Contraction::affine(0.2, 0.6));
  maps.push_back(Contraction::logexp(0.2, 2.0, 0.8));
  return IFSystem(std::move(maps), {0, 2}, "nonlinear-example");
}

/// Fully linear base-N system with all branches core.
inline IFSystem linear_full(int N) {
  std::vector<Contraction> maps;
  std::vector<int> core;
  for (int j = 0; j < N; ++j) {
    maps.push_back(Contraction::affine(1.0 / N, double(j) / N));
    core.push_back(j);
  }
  return IFSystem(std::move(maps), std::move(core), "linear-" + std::to_string(N));
}

inline Cell random_cell(const IFSystem& sys, std::mt19937_64& rng, int max_len = 4,
                        int shift_span = 3) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, sys.branch_count() - 1);
  std::uniform_int_distribution<int> shift(-shift_span, shift_span);
  Word w(len(rng));
  for (auto& l : w) l = letter(rng);
  return Cell(std::move(w), shift(rng));
}

inline CellFunction random_cell_function(const IFSystem& sys, std::mt19937_64& rng,
                                         int terms = 4, int max_len = 3) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  CellFunction f;
  for (int i = 0; i < terms; ++i) {
    std::complex<double> c(unif(rng), unif(rng));
    f.add_term(random_cell(sys, rng, max_len), Coef(c), sys.core_count());
  }
  return f;
}

/// Rational-valued coefficients (small dyadics), for the exact-energy checks.
inline CellFunction random_rational_cell_function(const IFSystem& sys,
                                                  std::mt19937_64& rng, int terms = 4,
                                                  int max_len = 3) {
  std::uniform_int_distribution<int> num(-8, 8);
  CellFunction f;
  for (int i = 0; i < terms; ++i) {
    std::complex<double> c(num(rng) / 4.0, num(rng) / 4.0);
    f.add_term(random_cell(sys, rng, max_len), Coef(c), sys.core_count());
  }
  return f;
}

}  // namespace fmra::testutil
