#include <doctest.h>

#include <cmath>
#include <random>

#include "fmra/conjugacy.hpp"
#include "fmra/quadrature.hpp"
#include "test_util.hpp"

using namespace fmra;
using namespace fmra::testutil;

namespace {

/// C4 -> C3: source (rho_{0,4}, (2x+1)/4, rho_{3,4}), target (rho_{k,3}).
Conjugacy c4_to_c3() { return Conjugacy(cantor4_gap(), cantor3()); }

/// The worked digit map: sum a_i/4^i -> sum (2/3)a_i/3^i, a_i in {0,3}.
double digit_map_image(const std::vector<int>& base4_digits) {
  double y = 0;
  for (auto it = base4_digits.rbegin(); it != base4_digits.rend(); ++it)
    y = (y + (2.0 / 3.0) * *it) / 3.0;
  return y;
}

double digit_map_preimage(const std::vector<int>& base4_digits) {
  double x = 0;
  for (auto it = base4_digits.rbegin(); it != base4_digits.rend(); ++it)
    x = (x + *it) / 4.0;
  return x;
}

}  // namespace

TEST_CASE("phi fixes the endpoints exactly") {
  auto conj = c4_to_c3();
  CHECK(conj.phi(0.0, 10).value == 0.0);
  CHECK(conj.phi(1.0, 10).value == 1.0);
  CHECK(conj.phi_inverse(0.0, 10).value == 0.0);
  CHECK(conj.phi_inverse(1.0, 10).value == 1.0);
}

TEST_CASE("phi follows the worked digit map on C4") {
  auto conj = c4_to_c3();
  const int K = 30;
  CHECK(std::abs(conj.phi(0.75, K).value - 2.0 / 3) < 1e-12);
  CHECK(std::abs(conj.phi(3.0 / 16, K).value - 2.0 / 9) < 1e-12);

  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> len(1, 18), digit(0, 1);
  for (int i = 0; i < 100; ++i) {
    std::vector<int> digits(len(rng));
    for (auto& d : digits) d = 3 * digit(rng);
    double x = digit_map_preimage(digits);
    double expected = digit_map_image(digits);
    auto got = conj.phi(x, K);
    CHECK(std::abs(got.value - expected) <= got.bound + 1e-12);
    CHECK(got.bound == doctest::Approx(std::pow(1.0 / 3, K)));
  }
}

TEST_CASE("phi_inverse inverts the digit map") {
  auto conj = c4_to_c3();
  const int K = 30;
  CHECK(std::abs(conj.phi_inverse(2.0 / 3, K).value - 0.75) < 1e-12);
  CHECK(std::abs(conj.phi_inverse(2.0 / 9, K).value - 3.0 / 16) < 1e-12);
  CHECK(conj.phi_inverse(0.0, K).value == 0.0);
}

TEST_CASE("phi round trips within the combined bounds") {
  auto conj = c4_to_c3();
  const int K = 25;
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    double x = unif(rng);
    double back = conj.phi_inverse(conj.phi(x, K).value, K).value;
    CHECK(std::abs(back - x) <=
          std::pow(0.25, K) + std::pow(1.0 / 3, K) + 1e-10);
  }
}

TEST_CASE("phi is strictly increasing on a sorted sample") {
  auto conj = c4_to_c3();
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> xs;
  for (int i = 0; i < 200; ++i) xs.push_back(unif(rng));
  std::sort(xs.begin(), xs.end());
  double prev = -1;
  for (double x : xs) {
    double v = conj.phi(x, 30).value;
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("conjugation identity phi o tau~_i = tau_i o phi") {
  auto conj = c4_to_c3();
  const int K = 20;
  const double bound = 2.0 * std::pow(1.0 / 3, K);
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    double x = unif(rng);
    for (int b = 0; b < conj.branch_count(); ++b) {
      double lhs = conj.phi(conj.source().map(b).eval(x), K + 1).value;
      double rhs = conj.target().map(b).eval(conj.phi(x, K).value);
      CHECK(std::abs(lhs - rhs) <= bound + 1e-12);
    }
  }
}

TEST_CASE("phi extension: periodicity and integer shifts") {
  auto conj = c4_to_c3();
  const int K = 30;
  CHECK(std::abs(conj.phi_extended(1.75, K).value - (conj.phi(0.75, K).value + 1)) == 0.0);
  CHECK(std::abs(conj.phi_extended(1.75, K).value - 5.0 / 3) < 1e-12);
  CHECK(conj.phi_extended(-1.0, K).value == -1.0);
  CHECK(conj.phi_extended(7.0 / 4, K).value - conj.phi_extended(3.0 / 4, K).value ==
        doctest::Approx(1.0));
}

TEST_CASE("grid fixed-point oracle agrees with digit evaluation") {
  auto conj = c4_to_c3();

  // J = 0 keeps the identity
  auto id = fixed_point_iterate(conj, 64, 0);
  for (int i = 0; i <= 64; ++i) CHECK(id.values[i] == id.nodes[i]);

  // a linear system conjugated with itself stays at the identity
  Conjugacy self(cantor3(), cantor3());
  auto fixed = fixed_point_iterate(self, 128, 25);
  for (int i = 0; i <= 128; ++i) CHECK(std::abs(fixed.values[i] - fixed.nodes[i]) < 1e-12);

  // the power-of-two grid keeps every linear source read on-grid, so only the
  // contraction error c^J remains
  auto approx = fixed_point_iterate(conj, 4096, 40);
  double worst = 0;
  for (int i = 0; i <= 4096; i += 8) {
    double ref = conj.phi(approx.nodes[i], 40).value;
    worst = std::max(worst, std::abs(approx.values[i] - ref));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("sharp addition: unit, commutativity, digit example") {
  auto conj = c4_to_c3();
  const int K = 30;
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> unif(0.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    double x = unif(rng), y = unif(rng);
    CHECK(std::abs(conj.sharp_add(x, 0.0, K).value - x) < 1e-10);
    CHECK(std::abs(conj.sharp_add(x, y, K).value - conj.sharp_add(y, x, K).value) < 1e-10);
  }
  // preimages 3/4 and 3/16 sum to 15/16 with digits (3,3): image 8/9
  CHECK(std::abs(conj.sharp_add(2.0 / 3, 2.0 / 9, K).value - 8.0 / 9) < 1e-10);
}

TEST_CASE("measure transport: target integrals equal composed source integrals") {
  auto conj = c4_to_c3();
  const int k = 14, K = 30;
  std::vector<std::function<double(double)>> fns = {
      [](double x) { return x; },
      [](double x) { return x * x; },
      [](double x) { return std::sin(3 * x); },
      [](double x) { return std::exp(-x); },
      [](double x) { return std::cos(7 * x); },
  };
  for (const auto& fn : fns) {
    auto lhs = quadrature_mu(conj.target(), [&](double x) {
      return std::complex<double>(fn(x), 0.0);
    }, k);
    auto rhs = quadrature_mu(conj.source(), [&](double x) {
      return std::complex<double>(fn(conj.phi(x, K).value), 0.0);
    }, k);
    CHECK(std::abs(lhs.value - rhs.value) < 1e-4);
  }
}

TEST_CASE("restricted evaluation certifies the core alphabet") {
  auto conj = c4_to_c3();
  CHECK(conj.phi(0.75, 20, true).value == doctest::Approx(2.0 / 3));
  CHECK_THROWS_AS(conj.phi(0.5, 20, true), std::domain_error);  // 0.5 enters the gap
}

TEST_CASE("branch count mismatch is rejected") {
  CHECK_THROWS_AS(Conjugacy(linear_full(2), cantor3()), std::invalid_argument);
}
