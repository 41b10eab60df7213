#include "fmra/chaos.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <omp.h>

#include "fmra/scaling.hpp"

namespace fmra {

namespace {

constexpr int kResolveLetters = 34;   // chaos-game depth: c^34 is below double eps
constexpr int kTailDigits = 14;       // extra digits read for the membership tail
constexpr std::int64_t kChunk = 1 << 14;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// One mu-distributed point on C, by composing random core maps outermost
/// first over a random start.
double sample_mu_point(const IFSystem& sys, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, sys.core_count() - 1);
  int letters[kResolveLetters];
  for (int i = 0; i < kResolveLetters; ++i) letters[i] = sys.core()[pick(rng)];
  double y = unif(rng);
  // letters[0] is the coarsest digit, so apply it last
  for (int i = kResolveLetters - 1; i >= 0; --i) y = sys.map(letters[i]).eval(y);
  return y;
}

/// Numeric membership test of x in tau_word(C) + shift via digit coding.
bool member_of_cell(const IFSystem& sys, double x, const Cell& cell) {
  double k = std::floor(x);
  if (static_cast<std::int64_t>(k) != cell.shift) return false;
  double y = x - k;
  // consume the cell word, outermost letters first
  for (auto it = cell.word.rbegin(); it != cell.word.rend(); ++it) {
    if (branch_of(sys, y) != *it) return false;
    y = std::clamp(sys.map(*it).inverse(y), 0.0, 1.0);
  }
  for (int d = 0; d < kTailDigits; ++d) {
    int i = branch_of(sys, y);
    if (!sys.in_core(i)) return false;
    y = std::clamp(sys.map(i).inverse(y), 0.0, 1.0);
  }
  return true;
}

}  // namespace

ChaosEstimate chaos_intersection_estimate(const IFSystem& sys, const Cell& c1,
                                          const Cell& c2, std::int64_t samples,
                                          std::uint64_t seed, Exec exec) {
  const std::int64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::int64_t> hits(chunks, 0);

  auto run_chunk = [&](std::int64_t c) {
    std::mt19937_64 rng(splitmix64(seed ^ (0x51ed2701ULL + 2654435761ULL * c)));
    std::int64_t lo = c * kChunk, hi = std::min(samples, lo + kChunk);
    std::int64_t h = 0;
    for (std::int64_t i = lo; i < hi; ++i) {
      double y = sample_mu_point(sys, rng);
      double x = word_apply(sys, c1.word, y) + double(c1.shift);
      if (member_of_cell(sys, x, c2)) ++h;
    }
    hits[c] = h;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    for (std::int64_t c = 0; c < chunks; ++c) run_chunk(c);
  }

  std::int64_t total_hits = 0;
  for (auto h : hits) total_hits += h;

  // H(c1 ∩ c2) = H(c1) * P(X in c2) with X drawn from H|c1 normalized
  double h_c1 = std::pow(double(sys.core_count()), -double(c1.word.size()));
  double phat = double(total_hits) / double(samples);
  ChaosEstimate est;
  est.samples = samples;
  est.hits = total_hits;
  est.value = h_c1 * phat;
  est.std_error = h_c1 * std::sqrt(phat * (1.0 - phat) / double(samples));
  return est;
}

}  // namespace fmra
