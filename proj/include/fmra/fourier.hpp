#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fmra/conjugacy.hpp"
#include "fmra/exact.hpp"
#include "fmra/parallel.hpp"

namespace fmra {

/// Digit set A of the homogeneous linear system x -> (x+a)/N together with a
/// candidate dual set L. L may be rational (the integrality flag records
/// whether the classical assumption holds).
struct SpectralPair {
  int N = 2;
  std::vector<int> A;       // sorted, 0 in A, |A| = p
  std::vector<Rational> L;  // sorted, 0 in L, |L| = p

  SpectralPair(int N_, std::vector<int> A_, std::vector<Rational> L_);

  int p() const { return static_cast<int>(A.size()); }
  bool integral_L() const;

  /// The linear gap-filled IFS (rho_{0,N},...,rho_{N-1,N}) with core at A.
  IFSystem linear_system() const;
};

/// Extract (N, A) from a system whose core maps are x -> (x+a)/N.
std::pair<int, std::vector<int>> linear_digits(const IFSystem& sys);

struct Spectrum {
  std::vector<Rational> elements;  // sorted, deduplicated
  int k_max = 0;
};

std::complex<double> kappa_A(const SpectralPair& pair, double t);
std::complex<double> kappa_A(const SpectralPair& pair, const Rational& t);

struct MuHatResult {
  std::complex<double> value;
  int truncation_order = 0;
  double tail_bound = 0;
};

/// Fourier transform of the self-similar measure, by the truncated infinite
/// product of kappa_A factors with a certified tail bound.
MuHatResult mu_hat(const SpectralPair& pair, const Rational& t, double tol = 1e-12);
MuHatResult mu_hat(const SpectralPair& pair, double t, double tol = 1e-12);

struct UnitarityResult {
  bool unitary = false;
  double max_deviation = 0;
};

/// Unitarity of H_AL = p^{-1/2} (e^{2 pi i a l / N}) at threshold 1e-10.
UnitarityResult check_dual_set(const SpectralPair& pair);

/// All integer dual sets L ⊂ {0..N-1}, 0 ∈ L, |L| = p with H_AL unitary
/// (representatives mod N).
std::vector<std::vector<int>> find_dual_sets(const std::vector<int>& A, int N);

/// {l_0 + N l_1 + ... + N^k l_k : l_j ∈ L, k <= k_max}, sorted, deduplicated.
Spectrum lambda_set(const SpectralPair& pair, int k_max);

struct FourierGram {
  std::vector<std::vector<std::complex<double>>> matrix;
  double max_offdiag = 0;
  double mu_hat_tail_bound = 0;
};

/// Gram of {e_lambda} in L^2(mu~): entry (i,j) = mu_hat(lambda_i - lambda_j).
FourierGram fourier_gram(const SpectralPair& pair, const std::vector<Rational>& lambdas,
                         double tol = 1e-12, Exec exec = Exec::Parallel);

struct QValue {
  double value = 0;
  double last_increment = 0;
  int k_max = 0;
};

/// Partial sum of Q(t) = Σ_{λ∈Λ} |mu_hat(t-λ)|² over lambda_set(k_max).
QValue q_function(const SpectralPair& pair, const Rational& t, int k_max,
                  double tol = 1e-12, Exec exec = Exec::Parallel);

/// (R_L f)(x) = p^{-1} Σ_l |m_0((x-l)/N)|² f((x-l)/N).
double ruelle_apply(const SpectralPair& pair, const std::function<double(double)>& f,
                    double x);

enum class CycleMode { Mod1, RealFixedPoint };

struct LCycle {
  std::vector<Rational> points;   // xi_j, walk order
  std::vector<Rational> pairing;  // b_j with xi_{j+1} = (xi_j - b_j)/N (mod 1)
  CycleMode mode = CycleMode::Mod1;
};

/// Exact search for L-cycles whose points are extremal for |m_0|^2 (decided
/// by the divisibility criterion xi*(a-a') ∈ Z). Mod1 enumerates simple
/// cycles of the reduced maps; RealFixedPoint solves the unreduced affine
/// fixed points. The trivial cycle at 0 is always reported.
std::vector<LCycle> l_cycle_search(const SpectralPair& pair, CycleMode mode, int k_max);

struct GeneralizedGram {
  std::vector<std::vector<std::complex<double>>> change_of_variables;  // = fourier_gram
  std::vector<std::vector<std::complex<double>>> direct_quadrature;
  double max_discrepancy = 0;
  double max_offdiag = 0;  // of the direct-quadrature route
};

/// Gram of {e_λ o phi^{-1}} in L^2(mu), computed both through the change of
/// variables (exactly fourier_gram) and by direct quadrature against the
/// target measure; the discrepancy between routes is reported.
GeneralizedGram generalized_fourier_gram(const SpectralPair& pair, const Conjugacy& conj,
                                         const std::vector<Rational>& lambdas,
                                         int quadrature_depth, double tol = 1e-12,
                                         Exec exec = Exec::Parallel);

struct QSample {
  Rational t;
  QValue q;
};

struct FourierReport {
  bool unitary = false;
  double unitarity_dev = 0;
  bool integral_L = true;
  std::vector<std::vector<int>> dual_sets_mod_N;
  std::vector<LCycle> cycles;
  double gram_max_offdiag = 0;
  std::vector<QSample> q_samples;
  std::string verdict;  // "ONB-consistent" | "orthonormality-fails" | "inconclusive"
};

/// Full diagnostic report. The verdict is driven by the Gram/Q numerics;
/// cycles and Ruelle output are corroborating diagnostics only.
FourierReport fourier_report(const SpectralPair& pair, int k_max, double tol,
                             int gram_size = 16, int q_grid = 21,
                             Exec exec = Exec::Parallel);

}  // namespace fmra
