#include "fmra/cell.hpp"

#include <algorithm>

namespace fmra {

Rational cell_measure(const IFSystem& sys, const Cell& cell) {
  return rational_pow(sys.core_count(), -static_cast<long>(cell.word.size()));
}

Rational cell_intersection_measure(const IFSystem& sys, const Cell& c1, const Cell& c2) {
  if (c1.shift != c2.shift) return Rational(0);
  const Cell& fine = c1.word.size() >= c2.word.size() ? c1 : c2;
  const Cell& coarse = c1.word.size() >= c2.word.size() ? c2 : c1;
  const std::size_t excess = fine.word.size() - coarse.word.size();
  // coarse word must match the outermost (trailing) letters of the fine word
  if (!std::equal(coarse.word.begin(), coarse.word.end(), fine.word.begin() + excess))
    return Rational(0);
  // the excess inner letters must stay inside C
  for (std::size_t i = 0; i < excess; ++i)
    if (!sys.in_core(fine.word[i])) return Rational(0);
  return cell_measure(sys, fine);
}

std::vector<Cell> sigma_image(const IFSystem& sys, const Cell& cell) {
  const int N = sys.branch_count();
  if (!cell.word.empty()) {
    Word w(cell.word.begin(), cell.word.end() - 1);
    int outer = cell.word.back();
    return {Cell(std::move(w), outer + N * cell.shift)};
  }
  std::vector<Cell> out;
  out.reserve(sys.core_count());
  for (int a : sys.core()) out.emplace_back(Word{}, a + N * cell.shift);
  return out;
}

Cell sigma_preimage(const IFSystem& sys, const Cell& cell) {
  const int N = sys.branch_count();
  std::int64_t q = cell.shift >= 0 ? cell.shift / N : -((-cell.shift + N - 1) / N);
  int r = static_cast<int>(cell.shift - N * q);
  Word w = cell.word;
  w.push_back(r);
  return Cell(std::move(w), q);
}

}  // namespace fmra
