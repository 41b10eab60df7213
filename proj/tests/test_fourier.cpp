#include <doctest.h>

#include <cmath>
#include <random>

#include "fmra/fourier.hpp"
#include "fmra/quadrature.hpp"
#include "test_util.hpp"

using namespace fmra;
using namespace fmra::testutil;

namespace {

SpectralPair c4_pair() { return SpectralPair(4, {0, 3}, {Rational(0), Rational(2)}); }
SpectralPair c3_pair_relaxed() {
  return SpectralPair(3, {0, 2}, {Rational(0), Rational(3, 4)});
}

}  // namespace

TEST_CASE("kappa_A: worked values") {
  CHECK(std::abs(kappa_A(c4_pair(), 2.0)) < 1e-15);  // (1+e^{3 pi i})/2
  CHECK(kappa_A(c4_pair(), 0.0) == std::complex<double>(1.0, 0.0));
  SpectralPair c3(3, {0, 2}, {Rational(0), Rational(1)});
  CHECK(std::abs(kappa_A(c3, Rational(3, 2)) - std::complex<double>(1.0, 0.0)) < 1e-15);
}

TEST_CASE("mu_hat: zeros, normalization, certified truncation") {
  auto pair = c4_pair();
  CHECK(mu_hat(pair, Rational(0)).value == std::complex<double>(1.0, 0.0));
  CHECK(std::abs(mu_hat(pair, Rational(2)).value) < 1e-14);

  auto mh = mu_hat(pair, Rational(5, 7), 1e-10);
  CHECK(mh.tail_bound < 1e-10);
  CHECK(mh.truncation_order > 0);
}

TEST_CASE("mu_hat: the 1/3-Cantor witness value near 0.466") {
  SpectralPair c3(3, {0, 2}, {Rational(0), Rational(1)});
  auto a = mu_hat(c3, Rational(3, 2), 1e-12);
  auto b = mu_hat(c3, Rational(1, 2), 1e-12);
  // mu_hat(3/2) = kappa(3/2) * mu_hat(1/2) with kappa(3/2) = 1
  CHECK(std::abs(a.value - b.value) < 1e-11);
  CHECK(std::abs(a.value) > 0.3);
  CHECK(std::abs(a.value) < 0.6);
  CHECK(std::abs(a.value) == doctest::Approx(0.466).epsilon(0.01));

  // independent oracle: depth-20 quadrature of e^{2 pi i (3/2) x} against mu
  std::vector<Contraction> maps;
  for (int j = 0; j < 3; ++j) maps.push_back(Contraction::affine(1.0 / 3, j / 3.0));
  IFSystem sys(std::move(maps), {0, 2});
  auto q = quadrature_mu(sys, [](double x) {
    double ang = 2.0 * std::numbers::pi * 1.5 * x;
    return std::complex<double>(std::cos(ang), std::sin(ang));
  }, 20, 2.0 * std::numbers::pi * 1.5);
  CHECK(std::abs(q.value - a.value) <= q.error_bound + 1e-10);
}

TEST_CASE("mu_hat satisfies its functional equation") {
  auto pair = c4_pair();
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> unif(-20.0, 20.0);
  for (int i = 0; i < 100; ++i) {
    double t = unif(rng);
    auto lhs = mu_hat(pair, t, 1e-12).value;
    auto rhs = mu_hat(pair, t / 4.0, 1e-12).value * kappa_A(pair, t);
    CHECK(std::abs(lhs - rhs) < 2e-12);
  }
}

TEST_CASE("check_dual_set: worked pairs") {
  CHECK(check_dual_set(c4_pair()).unitary);
  CHECK(check_dual_set(c4_pair()).max_deviation < 1e-12);
  SpectralPair bad(3, {0, 2}, {Rational(0), Rational(1)});
  CHECK_FALSE(check_dual_set(bad).unitary);
  CHECK(check_dual_set(c3_pair_relaxed()).unitary);
  CHECK_FALSE(c3_pair_relaxed().integral_L());
}

TEST_CASE("check_dual_set is invariant under l -> l + N") {
  SpectralPair shifted(4, {0, 3}, {Rational(0), Rational(6)});
  CHECK(check_dual_set(shifted).unitary);
  CHECK(check_dual_set(shifted).max_deviation ==
        doctest::Approx(check_dual_set(c4_pair()).max_deviation).epsilon(1e-12));
}

TEST_CASE("find_dual_sets: worked searches") {
  auto found4 = find_dual_sets({0, 3}, 4);
  bool has02 = false;
  for (const auto& L : found4) has02 |= (L == std::vector<int>{0, 2});
  CHECK(has02);

  CHECK(find_dual_sets({0, 2}, 3).empty());

  auto found2 = find_dual_sets({0, 1}, 2);
  REQUIRE(found2.size() == 1);
  CHECK(found2[0] == std::vector<int>{0, 1});
}

TEST_CASE("lambda_set: enumeration, dedup, zero") {
  auto spec = lambda_set(c4_pair(), 2);
  std::vector<Rational> expect{Rational(0),  Rational(2),  Rational(8),  Rational(10),
                               Rational(32), Rational(34), Rational(40), Rational(42)};
  CHECK(spec.elements == expect);

  auto zero_only = lambda_set(SpectralPair(2, {0}, {Rational(0)}), 3);
  CHECK(zero_only.elements == std::vector<Rational>{Rational(0)});
}

TEST_CASE("fourier_gram: identity for the C4 pair, witness for C3") {
  auto spec = lambda_set(c4_pair(), 5);
  std::vector<Rational> lams(spec.elements.begin(), spec.elements.begin() + 16);
  auto gram = fourier_gram(c4_pair(), lams, 1e-10);
  CHECK(gram.max_offdiag < 5e-6);
  for (std::size_t i = 0; i < lams.size(); ++i)
    CHECK(gram.matrix[i][i] == std::complex<double>(1.0, 0.0));

  auto relaxed = c3_pair_relaxed();
  auto g2 = fourier_gram(relaxed, {Rational(3, 4), Rational(9, 4)}, 1e-12);
  CHECK(std::abs(g2.matrix[0][1]) == doctest::Approx(0.466).epsilon(0.01));

  auto g3 = fourier_gram(relaxed, {Rational(0)}, 1e-12);
  CHECK(g3.matrix[0][0] == std::complex<double>(1.0, 0.0));
  CHECK(g3.max_offdiag == 0.0);
}

TEST_CASE("q_function: monotone partial sums within the Bessel bound") {
  auto pair = c4_pair();
  double prev = 0;
  for (int k = 0; k <= 10; ++k) {
    auto q = q_function(pair, Rational(1, 2), k, 1e-10);
    CHECK(q.value >= prev - 1e-12);
    CHECK(q.value <= 1.0 + 1e-6);
    prev = q.value;
  }
  auto q12 = q_function(pair, Rational(1, 2), 12, 1e-10);
  CHECK(q12.value >= 0.95);
  CHECK(q12.value <= 1.0 + 1e-9);

  auto q0 = q_function(pair, Rational(0), 6, 1e-12);
  CHECK(q0.value >= 1.0 - 1e-9);
  CHECK(q0.value <= 1.0 + 1e-9);
}

TEST_CASE("ruelle operator: QMF identity under unitarity") {
  auto pair = c4_pair();
  auto one = [](double) { return 1.0; };
  CHECK(ruelle_apply(pair, one, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> unif(-5.0, 5.0);
  for (int i = 0; i < 100; ++i)
    CHECK(ruelle_apply(pair, one, unif(rng)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ruelle_apply(pair, [](double) { return 0.0; }, 0.3) == 0.0);
}

TEST_CASE("l_cycle_search: trivial cycle always reported") {
  for (auto mode : {CycleMode::Mod1, CycleMode::RealFixedPoint}) {
    auto cycles = l_cycle_search(c4_pair(), mode, 4);
    bool trivial = false;
    for (const auto& c : cycles)
      if (c.points == std::vector<Rational>{Rational(0)} &&
          c.pairing == std::vector<Rational>{Rational(0)})
        trivial = true;
    CHECK(trivial);
  }
}

TEST_CASE("l_cycle_search: the C4 literal-definition self-loop") {
  auto mod1 = l_cycle_search(c4_pair(), CycleMode::Mod1, 6);
  bool found_23 = false;
  for (const auto& c : mod1)
    if (c.points == std::vector<Rational>{Rational(2, 3)} &&
        c.pairing == std::vector<Rational>{Rational(2)})
      found_23 = true;
  CHECK(found_23);
  CHECK(mod1.size() == 2);  // exactly the trivial cycle and the 2/3 self-loop

  auto real = l_cycle_search(c4_pair(), CycleMode::RealFixedPoint, 6);
  bool found_m23 = false;
  for (const auto& c : real)
    if (c.points == std::vector<Rational>{Rational(-2, 3)} &&
        c.pairing == std::vector<Rational>{Rational(2)})
      found_m23 = true;
  CHECK(found_m23);
}

TEST_CASE("l_cycle_search: relaxed C3 diagnostics stay exact") {
  auto cycles = l_cycle_search(c3_pair_relaxed(), CycleMode::RealFixedPoint, 4);
  REQUIRE(!cycles.empty());
  // only the trivial cycle survives the extremality test
  for (const auto& c : cycles) {
    for (const auto& xi : c.points) {
      Rational v = xi * 2;  // digit gcd of {0,2}
      CHECK(v.get_den() == 1);
    }
  }
}

TEST_CASE("generalized_fourier_gram: C4 -> C3 transport") {
  Conjugacy conj(cantor4_gap(), cantor3());
  auto spec = lambda_set(c4_pair(), 4);
  std::vector<Rational> lams(spec.elements.begin(), spec.elements.begin() + 8);
  auto g = generalized_fourier_gram(c4_pair(), conj, lams, 12, 1e-10);

  // route (a) reproduces fourier_gram bitwise
  auto direct = fourier_gram(c4_pair(), lams, 1e-10, Exec::Serial);
  for (std::size_t i = 0; i < lams.size(); ++i)
    for (std::size_t j = 0; j < lams.size(); ++j)
      CHECK(g.change_of_variables[i][j] == direct.matrix[i][j]);

  CHECK(g.max_discrepancy < 2e-3);
  CHECK(g.max_offdiag < 2e-3);
  for (std::size_t i = 0; i < lams.size(); ++i)
    CHECK(g.direct_quadrature[i][i] == std::complex<double>(1.0, 0.0));

  auto single = generalized_fourier_gram(c4_pair(), conj, {Rational(0)}, 6, 1e-10);
  CHECK(single.direct_quadrature[0][0] == std::complex<double>(1.0, 0.0));
}

TEST_CASE("generalized_fourier_gram rejects a mismatched source") {
  Conjugacy conj(cantor3(), cantor4_gap());
  CHECK_THROWS_AS(
      generalized_fourier_gram(c4_pair(), conj, {Rational(0)}, 4, 1e-10),
      std::invalid_argument);
}

TEST_CASE("fourier_report: verdicts for the worked pairs") {
  auto rep = fourier_report(c4_pair(), 12, 5e-6, 16, 7);
  CHECK(rep.unitary);
  CHECK(rep.verdict == "ONB-consistent");
  bool has02 = false;
  for (const auto& L : rep.dual_sets_mod_N) has02 |= (L == std::vector<int>{0, 2});
  CHECK(has02);

  auto rep3 = fourier_report(c3_pair_relaxed(), 8, 5e-6, 8, 5);
  CHECK(rep3.unitary);
  CHECK_FALSE(rep3.integral_L);
  CHECK(rep3.verdict == "orthonormality-fails");
  CHECK(rep3.dual_sets_mod_N.empty());
}
