#include "fmra/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include <omp.h>

#include "fmra/filters.hpp"
#include "fmra/quadrature.hpp"

namespace fmra {

namespace {

/// e^{2 pi i turns}; exact on quarter turns, angle otherwise reduced mod 1
/// before the trig call so huge arguments stay accurate.
std::complex<double> unit_angle(const Rational& turns) {
  Rational r = turns - Rational(mpz_class(turns.get_num() / turns.get_den()));
  if (r < 0) r += 1;
  if (r == 0) return {1.0, 0.0};
  if (r == Rational(1, 2)) return {-1.0, 0.0};
  if (r == Rational(1, 4)) return {0.0, 1.0};
  if (r == Rational(3, 4)) return {0.0, -1.0};
  double angle = 2.0 * std::numbers::pi * r.get_d();
  return {std::cos(angle), std::sin(angle)};
}

Rational frac_part(const Rational& q) {
  Rational r = q - Rational(mpz_class(q.get_num() / q.get_den()));
  if (r < 0) r += 1;
  return r;
}

}  // namespace

SpectralPair::SpectralPair(int N_, std::vector<int> A_, std::vector<Rational> L_)
    : N(N_), A(std::move(A_)), L(std::move(L_)) {
  if (N < 2) throw std::invalid_argument("SpectralPair: N must be >= 2");
  std::sort(A.begin(), A.end());
  std::sort(L.begin(), L.end());
  if (A.empty() || A.front() != 0)
    throw std::invalid_argument("SpectralPair: need 0 in A");
  if (A.back() >= N) throw std::invalid_argument("SpectralPair: digit out of range");
  if (std::find(L.begin(), L.end(), Rational(0)) == L.end())
    throw std::invalid_argument("SpectralPair: need 0 in L");
  if (L.size() != A.size())
    throw std::invalid_argument("SpectralPair: |L| must equal |A|");
}

bool SpectralPair::integral_L() const {
  for (const auto& l : L)
    if (l.get_den() != 1) return false;
  return true;
}

IFSystem SpectralPair::linear_system() const {
  std::vector<Contraction> maps;
  for (int i = 0; i < N; ++i)
    maps.push_back(Contraction::affine(1.0 / N, double(i) / N));
  return IFSystem(std::move(maps), A, "linear-" + std::to_string(N));
}

std::pair<int, std::vector<int>> linear_digits(const IFSystem& sys) {
  std::vector<int> digits;
  int N = 0;
  for (int idx : sys.core()) {
    const Contraction& m = sys.map(idx);
    if (m.family() != MapFamily::Affine)
      throw std::invalid_argument("linear_digits: core map is not affine");
    int n = static_cast<int>(std::lround(1.0 / m.a));
    if (N == 0) N = n;
    if (n != N || std::abs(m.a - 1.0 / N) > 1e-12)
      throw std::invalid_argument("linear_digits: core maps are not homogeneous");
    int a = static_cast<int>(std::lround(m.b * N));
    if (std::abs(m.b - double(a) / N) > 1e-12)
      throw std::invalid_argument("linear_digits: offset is not a digit");
    digits.push_back(a);
  }
  return {N, digits};
}

std::complex<double> kappa_A(const SpectralPair& pair, double t) {
  std::complex<double> acc{0.0, 0.0};
  for (int a : pair.A) {
    double angle = 2.0 * std::numbers::pi * t * a / pair.N;
    acc += std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc / double(pair.p());
}

std::complex<double> kappa_A(const SpectralPair& pair, const Rational& t) {
  std::complex<double> acc{0.0, 0.0};
  for (int a : pair.A) acc += unit_angle(t * a / pair.N);
  return acc / double(pair.p());
}

MuHatResult mu_hat(const SpectralPair& pair, const Rational& t, double tol) {
  MuHatResult res;
  if (t == 0) {
    res.value = 1.0;
    return res;
  }
  if (tol <= 0) throw std::invalid_argument("mu_hat: tol must be positive");
  const double abs_t = std::abs(t.get_d());
  const double a_max = pair.A.back();
  // |kappa(s) - 1| <= 2 pi |s| a_max / N; summed over the discarded factors
  int K = 0;
  double tail = 2.0 * std::numbers::pi * abs_t * a_max / ((pair.N - 1.0) * pair.N);
  while (tail >= tol && K < 4096) {
    tail /= pair.N;
    ++K;
  }
  std::complex<double> prod{1.0, 0.0};
  Rational s = t;
  for (int k = 0; k <= K; ++k) {
    prod *= kappa_A(pair, s);
    s /= pair.N;
  }
  res.value = prod;
  res.truncation_order = K;
  res.tail_bound = tail;
  return res;
}

MuHatResult mu_hat(const SpectralPair& pair, double t, double tol) {
  return mu_hat(pair, Rational(t), tol);
}

UnitarityResult check_dual_set(const SpectralPair& pair) {
  const int p = pair.p();
  std::vector<std::vector<std::complex<double>>> H(
      p, std::vector<std::complex<double>>(p));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      H[i][j] = unit_angle(pair.L[j] * pair.A[i] / pair.N) / std::sqrt(double(p));
  UnitarityResult res;
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < p; ++c) {
      std::complex<double> dot{0.0, 0.0};
      for (int k = 0; k < p; ++k) dot += std::conj(H[k][r]) * H[k][c];
      if (r == c) dot -= 1.0;
      res.max_deviation = std::max(res.max_deviation, std::abs(dot));
    }
  }
  res.unitary = res.max_deviation < 1e-10;
  return res;
}

std::vector<std::vector<int>> find_dual_sets(const std::vector<int>& A, int N) {
  std::vector<int> sortedA = A;
  std::sort(sortedA.begin(), sortedA.end());
  const int p = static_cast<int>(sortedA.size());
  std::vector<std::vector<int>> found;
  if (p == 0 || p > N) return found;

  std::vector<int> pick;
  // choose p-1 further residues from {1..N-1}; 0 is always in L
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(pick.size()) == p - 1) {
      std::vector<Rational> L{Rational(0)};
      for (int v : pick) L.emplace_back(v);
      SpectralPair cand(N, sortedA, L);
      if (check_dual_set(cand).unitary) {
        std::vector<int> ints{0};
        for (int v : pick) ints.push_back(v);
        found.push_back(std::move(ints));
      }
      return;
    }
    for (int v = next; v < N; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(1);
  return found;
}

Spectrum lambda_set(const SpectralPair& pair, int k_max) {
  if (k_max < 0) throw std::invalid_argument("lambda_set: k_max must be >= 0");
  double count = std::pow(double(pair.p()), k_max + 1);
  if (count > double(enumeration_budget()))
    throw BudgetError("lambda_set: p^(k_max+1) exceeds enumeration budget");

  std::set<Rational> elems{Rational(0)};
  std::vector<Rational> cur{Rational(0)};
  Rational scale(1);
  for (int k = 0; k <= k_max; ++k) {
    std::vector<Rational> next;
    next.reserve(cur.size() * pair.L.size());
    for (const auto& base : cur)
      for (const auto& l : pair.L) next.push_back(base + l * scale);
    scale *= pair.N;
    cur = std::move(next);
  }
  for (auto& v : cur) elems.insert(v);

  Spectrum spec;
  spec.k_max = k_max;
  spec.elements.assign(elems.begin(), elems.end());
  return spec;
}

FourierGram fourier_gram(const SpectralPair& pair, const std::vector<Rational>& lambdas,
                         double tol, Exec exec) {
  const std::int64_t n = static_cast<std::int64_t>(lambdas.size());
  if (n * n > enumeration_budget())
    throw BudgetError("fourier_gram: dimension exceeds enumeration budget");
  FourierGram g;
  g.matrix.assign(n, std::vector<std::complex<double>>(n));
  std::vector<double> tails(n, 0.0);

  auto fill_row = [&](std::int64_t i) {
    double tail = 0;
    for (std::int64_t j = i; j < n; ++j) {
      if (i == j) {
        g.matrix[i][j] = 1.0;
        continue;
      }
      MuHatResult mh = mu_hat(pair, lambdas[i] - lambdas[j], tol);
      g.matrix[i][j] = mh.value;
      tail = std::max(tail, mh.tail_bound);
    }
    tails[i] = tail;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) fill_row(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) fill_row(i);
  }
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      g.matrix[j][i] = std::conj(g.matrix[i][j]);
      g.max_offdiag = std::max(g.max_offdiag, std::abs(g.matrix[i][j]));
    }
    g.mu_hat_tail_bound = std::max(g.mu_hat_tail_bound, tails[i]);
  }
  return g;
}

QValue q_function(const SpectralPair& pair, const Rational& t, int k_max, double tol,
                  Exec exec) {
  Spectrum full = lambda_set(pair, k_max);
  QValue qv;
  qv.k_max = k_max;
  auto term = [&](const Rational& lambda) {
    double m = std::abs(mu_hat(pair, t - lambda, tol).value);
    return m * m;
  };
  qv.value = tree_sum_real(
      0, static_cast<std::int64_t>(full.elements.size()),
      [&](std::int64_t i) { return term(full.elements[i]); }, exec);
  if (k_max >= 1) {
    Spectrum prev = lambda_set(pair, k_max - 1);
    double prev_sum = tree_sum_real(
        0, static_cast<std::int64_t>(prev.elements.size()),
        [&](std::int64_t i) { return term(prev.elements[i]); }, exec);
    qv.last_increment = qv.value - prev_sum;
  } else {
    qv.last_increment = qv.value;
  }
  return qv;
}

double ruelle_apply(const SpectralPair& pair, const std::function<double(double)>& f,
                    double x) {
  const int p = pair.p();
  auto m0_sq = [&](double s) {
    std::complex<double> acc{0.0, 0.0};
    for (int a : pair.A) {
      double angle = 2.0 * std::numbers::pi * s * a;
      acc += std::complex<double>(std::cos(angle), std::sin(angle));
    }
    double mag = std::abs(acc) / std::sqrt(double(p));
    return mag * mag;
  };
  double acc = 0;
  for (const auto& l : pair.L) {
    double s = (x - l.get_d()) / pair.N;
    acc += m0_sq(s) * f(s);
  }
  return acc / p;
}

namespace {

/// gcd of the pairwise digit differences; extremal points of |m_0|^2 are
/// exactly the multiples of 1/d.
long digit_gcd(const std::vector<int>& A) {
  long d = 0;
  for (std::size_t i = 1; i < A.size(); ++i) d = std::gcd(d, long(A[i] - A[0]));
  return d;
}

bool is_extremal(const Rational& xi, long d) {
  Rational v = xi * Rational(d);
  return v.get_den() == 1;
}

std::vector<Rational> canonical_rotation(const std::vector<Rational>& pts,
                                         const std::vector<Rational>& labels,
                                         std::vector<Rational>* labels_out) {
  const std::size_t k = pts.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < k; ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      const Rational& a = pts[(r + i) % k];
      const Rational& b = pts[(best + i) % k];
      if (a < b) {
        best = r;
        break;
      }
      if (b < a) break;
    }
  }
  std::vector<Rational> rp(k), rl(k);
  for (std::size_t i = 0; i < k; ++i) {
    rp[i] = pts[(best + i) % k];
    rl[i] = labels[(best + i) % k];
  }
  *labels_out = std::move(rl);
  return rp;
}

}  // namespace

std::vector<LCycle> l_cycle_search(const SpectralPair& pair, CycleMode mode, int k_max) {
  if (k_max < 1) throw std::invalid_argument("l_cycle_search: k_max must be >= 1");
  const long d = digit_gcd(pair.A);
  std::vector<LCycle> cycles;
  std::set<std::pair<std::vector<Rational>, std::vector<Rational>>> seen;

  auto emit = [&](std::vector<Rational> pts, std::vector<Rational> labels) {
    std::vector<Rational> canon_labels;
    auto canon_pts = canonical_rotation(pts, labels, &canon_labels);
    if (!seen.insert({canon_pts, canon_labels}).second) return;
    LCycle c;
    c.points = std::move(canon_pts);
    c.pairing = std::move(canon_labels);
    c.mode = mode;
    cycles.push_back(std::move(c));
  };

  if (d == 0) {  // single-digit A: every point is extremal, report only 0
    emit({Rational(0)}, {Rational(0)});
    return cycles;
  }

  if (mode == CycleMode::Mod1) {
    std::vector<Rational> nodes;
    for (long j = 0; j < d; ++j) nodes.emplace_back(j, d);
    // walk xi -> frac((xi - b)/N) inside the extremal set
    std::function<void(std::size_t, std::vector<Rational>&, std::vector<Rational>&)> dfs =
        [&](std::size_t start, std::vector<Rational>& path, std::vector<Rational>& labels) {
          if (static_cast<int>(path.size()) > k_max) return;
          const Rational& cur = path.back();
          for (const auto& b : pair.L) {
            Rational next = frac_part((cur - b) / pair.N);
            if (!is_extremal(next, d)) continue;
            if (next == nodes[start] && !path.empty()) {
              emit(path, [&] {
                auto l = labels;
                l.push_back(b);
                return l;
              }());
            }
            if (next <= nodes[start]) continue;  // dedupe: only extend above start
            if (std::find(path.begin(), path.end(), next) != path.end()) continue;
            if (static_cast<int>(path.size()) == k_max) continue;
            path.push_back(next);
            labels.push_back(b);
            dfs(start, path, labels);
            labels.pop_back();
            path.pop_back();
          }
        };
    for (std::size_t s = 0; s < nodes.size(); ++s) {
      std::vector<Rational> path{nodes[s]};
      std::vector<Rational> labels;
      dfs(s, path, labels);
    }
  } else {
    // unreduced affine fixed points of every primitive label sequence
    std::vector<Rational> labels(k_max);
    std::function<void(int, int)> rec = [&](int pos, int k) {
      if (pos == k) {
        // primitive label word only
        for (int per = 1; per < k; ++per) {
          if (k % per != 0) continue;
          bool repeats = true;
          for (int i = per; i < k && repeats; ++i)
            if (!(labels[i] == labels[i % per])) repeats = false;
          if (repeats) return;
        }
        // xi_{j+1} = (xi_j - b_j)/N closes after k steps:
        // xi = (xi - B)/N^k with B = sum b_j N^{k-1-j}
        Rational Nk = rational_pow(pair.N, k);
        Rational B(0);
        for (int j = 0; j < k; ++j) B += labels[j] * rational_pow(pair.N, k - 1 - j);
        Rational xi = -B / (Nk - 1);
        std::vector<Rational> pts{xi};
        bool ok = is_extremal(xi, d);
        for (int j = 0; ok && j + 1 < k; ++j) {
          xi = (xi - labels[j]) / pair.N;
          if (!is_extremal(xi, d)) ok = false;
          pts.push_back(xi);
        }
        if (ok) emit(pts, std::vector<Rational>(labels.begin(), labels.begin() + k));
        return;
      }
      for (const auto& b : pair.L) {
        labels[pos] = b;
        rec(pos + 1, k);
      }
    };
    for (int k = 1; k <= k_max; ++k) rec(0, k);
  }

  // the trivial cycle is always part of the report
  bool has_trivial = false;
  for (const auto& c : cycles)
    if (c.points.size() == 1 && c.points[0] == 0 && c.pairing[0] == 0) has_trivial = true;
  if (!has_trivial) emit({Rational(0)}, {Rational(0)});

  std::sort(cycles.begin(), cycles.end(), [](const LCycle& a, const LCycle& b) {
    if (a.points.size() != b.points.size()) return a.points.size() < b.points.size();
    return a.points < b.points;
  });
  return cycles;
}

GeneralizedGram generalized_fourier_gram(const SpectralPair& pair, const Conjugacy& conj,
                                         const std::vector<Rational>& lambdas,
                                         int quadrature_depth, double tol, Exec exec) {
  auto [N, digits] = linear_digits(conj.source());
  if (N != pair.N || digits != pair.A)
    throw std::invalid_argument("generalized_fourier_gram: source is not the pair's linear system");

  GeneralizedGram g;
  g.change_of_variables = fourier_gram(pair, lambdas, tol, Exec::Serial).matrix;

  const std::int64_t n = static_cast<std::int64_t>(lambdas.size());
  g.direct_quadrature.assign(n, std::vector<std::complex<double>>(n));
  const int inv_depth = quadrature_depth + 20;

  std::vector<std::pair<std::int64_t, std::int64_t>> entries;
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = i; j < n; ++j) entries.emplace_back(i, j);

  auto fill = [&](std::size_t e) {
    auto [i, j] = entries[e];
    if (i == j) {
      g.direct_quadrature[i][j] = 1.0;
      return;
    }
    double delta = Rational(lambdas[i] - lambdas[j]).get_d();
    auto f = [&](double x) {
      double u = conj.phi_inverse(x, inv_depth).value;
      double angle = 2.0 * std::numbers::pi * delta * u;
      return std::complex<double>(std::cos(angle), std::sin(angle));
    };
    g.direct_quadrature[i][j] =
        quadrature_mu(conj.target(), f, quadrature_depth, std::nullopt, Exec::Serial).value;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t e = 0; e < entries.size(); ++e) fill(e);
  } else {
    for (std::size_t e = 0; e < entries.size(); ++e) fill(e);
  }

  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = i; j < n; ++j) {
      g.direct_quadrature[j][i] = std::conj(g.direct_quadrature[i][j]);
      double disc = std::abs(g.direct_quadrature[i][j] - g.change_of_variables[i][j]);
      g.max_discrepancy = std::max(g.max_discrepancy, disc);
      if (i != j)
        g.max_offdiag = std::max(g.max_offdiag, std::abs(g.direct_quadrature[i][j]));
    }
  return g;
}

FourierReport fourier_report(const SpectralPair& pair, int k_max, double tol,
                             int gram_size, int q_grid, Exec exec) {
  FourierReport rep;
  auto uni = check_dual_set(pair);
  rep.unitary = uni.unitary;
  rep.unitarity_dev = uni.max_deviation;
  rep.integral_L = pair.integral_L();
  rep.dual_sets_mod_N = find_dual_sets(pair.A, pair.N);

  rep.cycles = l_cycle_search(pair, CycleMode::Mod1, std::max(2, std::min(k_max, 8)));
  auto real_cycles =
      l_cycle_search(pair, CycleMode::RealFixedPoint, std::max(2, std::min(k_max, 6)));
  rep.cycles.insert(rep.cycles.end(), real_cycles.begin(), real_cycles.end());

  int enough = std::max(0, k_max);
  Spectrum spec = lambda_set(pair, std::min(enough, 20));
  std::vector<Rational> lambdas(
      spec.elements.begin(),
      spec.elements.begin() + std::min<std::size_t>(gram_size, spec.elements.size()));
  FourierGram gram = fourier_gram(pair, lambdas, tol, exec);
  rep.gram_max_offdiag = gram.max_offdiag;

  bool bessel_ok = true, monotone_ok = true;
  double q_min_final = 1.0;
  for (int i = 0; i < q_grid; ++i) {
    Rational t(i, q_grid);
    QValue q = q_function(pair, t, k_max, tol, exec);
    if (q.value > 1.0 + 1e-9 + 10 * tol) bessel_ok = false;
    if (q.last_increment < -1e-12) monotone_ok = false;
    q_min_final = std::min(q_min_final, q.value);
    rep.q_samples.push_back({t, q});
  }

  if (rep.gram_max_offdiag > 0.05) {
    rep.verdict = "orthonormality-fails";
  } else if (rep.unitary && rep.gram_max_offdiag < tol && bessel_ok && monotone_ok &&
             q_min_final >= 0.95) {
    rep.verdict = "ONB-consistent";
  } else {
    rep.verdict = "inconclusive";
  }
  return rep;
}

}  // namespace fmra
