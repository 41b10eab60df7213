#pragma once

#include <complex>
#include <map>
#include <vector>

#include "fmra/cell.hpp"
#include "fmra/exact.hpp"
#include "fmra/parallel.hpp"

namespace fmra {

/// Finite complex combination of cell indicators; the representation of every
/// wavelet-side function. Terms are kept in a sorted map so iteration (and
/// therefore floating accumulation) is deterministic.
class CellFunction {
 public:
  using TermMap = std::map<Cell, Coef>;

  CellFunction() = default;
  explicit CellFunction(const Cell& cell, Coef coef = Coef(1.0)) {
    if (!coef.is_zero()) terms_[cell] = coef;
  }

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Cell& cell, const Coef& coef, long p);
  void scale(std::complex<double> factor);
  void scale_half_power(int delta);  // multiply by p^(delta/2)

  friend CellFunction add(const CellFunction& f, const CellFunction& g, long p);

  std::int64_t min_shift() const;
  std::int64_t max_shift() const;
  int max_word_length() const;

 private:
  TermMap terms_;
};

/// Split nested cells along C = ⊔_{a∈A} tau_a(C) until all stored cells are
/// pairwise non-nested, merge equal cells, drop zeros. Inner products are
/// invariant under this.
CellFunction normalize(const IFSystem& sys, const CellFunction& f);

/// <f|g> = ∫ f conj(g) dH with exact rational cell measures; coefficients in
/// floating point.
std::complex<double> inner_product(const IFSystem& sys, const CellFunction& f,
                                   const CellFunction& g);

/// Fully exact inner product in Q(i)[sqrt(p)], treating each coefficient
/// double as the rational it is. Ground truth for the zero-tolerance checks.
QSurd inner_product_exact(const IFSystem& sys, const CellFunction& f,
                          const CellFunction& g);

/// Exact equality as functions: f - g normalizes to the empty combination.
bool exact_equal(const IFSystem& sys, const CellFunction& f, const CellFunction& g);

}  // namespace fmra
