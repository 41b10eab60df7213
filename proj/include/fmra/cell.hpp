#pragma once

#include <cstdint>
#include <vector>

#include "fmra/exact.hpp"
#include "fmra/ifs_system.hpp"

namespace fmra {

/// The set tau_word(C) + shift; the atom of all exact H-measure computations.
/// H(cell) = p^-|word|, independent of the shift.
struct Cell {
  Word word;
  std::int64_t shift = 0;

  Cell() = default;
  Cell(Word w, std::int64_t m) : word(std::move(w)), shift(m) {}

  friend bool operator==(const Cell& a, const Cell& b) {
    return a.shift == b.shift && a.word == b.word;
  }
  friend bool operator<(const Cell& a, const Cell& b) {
    if (a.shift != b.shift) return a.shift < b.shift;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  }
};

Rational cell_measure(const IFSystem& sys, const Cell& cell);

/// H(c1 ∩ c2), exact. Nonzero iff the shifts agree and one word extends the
/// other inward (shared outermost letters) using only core letters; then the
/// finer cell's measure.
Rational cell_intersection_measure(const IFSystem& sys, const Cell& c1, const Cell& c2);

/// sigma(cell) as a disjoint list of cells. One cell for |word| >= 1; the p
/// core translates of C for the bare cell. Total measure is multiplied by p.
std::vector<Cell> sigma_image(const IFSystem& sys, const Cell& cell);

/// sigma^-1(cell): shift = N q + r appends r as the new outermost letter.
Cell sigma_preimage(const IFSystem& sys, const Cell& cell);

}  // namespace fmra
