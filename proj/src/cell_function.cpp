#include "fmra/cell_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace fmra {

void CellFunction::add_term(const Cell& cell, const Coef& coef, long p) {
  if (coef.is_zero()) return;
  auto it = terms_.find(cell);
  if (it == terms_.end()) {
    terms_[cell] = coef;
    return;
  }
  Coef merged = Coef::add(it->second, coef, p);
  if (merged.is_zero())
    terms_.erase(it);
  else
    it->second = merged;
}

void CellFunction::scale(std::complex<double> factor) {
  if (factor == std::complex<double>(0.0, 0.0)) {
    terms_.clear();
    return;
  }
  for (auto& [cell, coef] : terms_) coef.c *= factor;
}

void CellFunction::scale_half_power(int delta) {
  for (auto& [cell, coef] : terms_) coef.hp += delta;
}

CellFunction add(const CellFunction& f, const CellFunction& g, long p) {
  CellFunction out = f;
  for (const auto& [cell, coef] : g.terms()) out.add_term(cell, coef, p);
  return out;
}

std::int64_t CellFunction::min_shift() const {
  std::int64_t m = 0;
  bool first = true;
  for (const auto& [cell, coef] : terms_) {
    if (first || cell.shift < m) m = cell.shift;
    first = false;
  }
  return m;
}

std::int64_t CellFunction::max_shift() const {
  std::int64_t m = 0;
  bool first = true;
  for (const auto& [cell, coef] : terms_) {
    if (first || cell.shift > m) m = cell.shift;
    first = false;
  }
  return m;
}

int CellFunction::max_word_length() const {
  int m = 0;
  for (const auto& [cell, coef] : terms_)
    m = std::max(m, static_cast<int>(cell.word.size()));
  return m;
}

namespace {

/// True when `coarse` strictly contains `fine` up to H-null sets.
bool nests(const IFSystem& sys, const Cell& coarse, const Cell& fine) {
  if (coarse.shift != fine.shift || coarse.word.size() >= fine.word.size()) return false;
  std::size_t excess = fine.word.size() - coarse.word.size();
  if (!std::equal(coarse.word.begin(), coarse.word.end(), fine.word.begin() + excess))
    return false;
  for (std::size_t i = 0; i < excess; ++i)
    if (!sys.in_core(fine.word[i])) return false;
  return true;
}

}  // namespace

CellFunction normalize(const IFSystem& sys, const CellFunction& f) {
  const long p = sys.core_count();
  CellFunction cur = f;
  bool changed = true;
  while (changed) {
    changed = false;
    // find a cell that nests another stored cell and split it once
    for (auto it = cur.terms().begin(); it != cur.terms().end() && !changed; ++it) {
      for (auto jt = cur.terms().begin(); jt != cur.terms().end(); ++jt) {
        if (it == jt) continue;
        if (!nests(sys, it->first, jt->first)) continue;
        Cell coarse = it->first;
        Coef coef = it->second;
        CellFunction next;
        for (const auto& [cell, c] : cur.terms())
          if (!(cell == coarse)) next.add_term(cell, c, p);
        for (int a : sys.core()) {
          Word w;
          w.reserve(coarse.word.size() + 1);
          w.push_back(a);
          w.insert(w.end(), coarse.word.begin(), coarse.word.end());
          next.add_term(Cell(std::move(w), coarse.shift), coef, p);
        }
        cur = std::move(next);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

std::complex<double> inner_product(const IFSystem& sys, const CellFunction& f,
                                   const CellFunction& g) {
  const long p = sys.core_count();
  std::complex<double> acc[2] = {{0.0, 0.0}, {0.0, 0.0}};
  for (const auto& [cf, af] : f.terms()) {
    for (const auto& [cg, ag] : g.terms()) {
      Rational q = cell_intersection_measure(sys, cf, cg);
      if (q == 0) continue;
      int hp = af.hp + ag.hp;
      int par = ((hp % 2) + 2) % 2;
      q *= rational_pow(p, (hp - par) / 2);
      acc[par] += af.c * std::conj(ag.c) * q.get_d();
    }
  }
  return acc[0] + acc[1] * std::sqrt(double(p));
}

QSurd inner_product_exact(const IFSystem& sys, const CellFunction& f,
                          const CellFunction& g) {
  const long p = sys.core_count();
  QSurd acc(p);
  for (const auto& [cf, af] : f.terms()) {
    for (const auto& [cg, ag] : g.terms()) {
      Rational q = cell_intersection_measure(sys, cf, cg);
      if (q == 0) continue;
      int hp = af.hp + ag.hp;
      int par = ((hp % 2) + 2) % 2;
      q *= rational_pow(p, (hp - par) / 2);
      QComplex term = QComplex(af.c) * QComplex(ag.c).conj() * q;
      if (par == 0)
        acc.base = acc.base + term;
      else
        acc.surd = acc.surd + term;
    }
  }
  return acc;
}

bool exact_equal(const IFSystem& sys, const CellFunction& f, const CellFunction& g) {
  const long p = sys.core_count();
  CellFunction neg = g;
  neg.scale(-1.0);
  return normalize(sys, add(f, neg, p)).empty();
}

}  // namespace fmra
