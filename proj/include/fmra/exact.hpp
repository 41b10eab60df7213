#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fmra {

using Rational = mpq_class;

/// p^e as an exact rational, e may be negative.
Rational rational_pow(long base, long e);

/// Exact complex number with rational real/imaginary parts.
struct QComplex {
  Rational re{0};
  Rational im{0};

  QComplex() = default;
  QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit QComplex(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}

  QComplex conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }

  friend QComplex operator+(const QComplex& a, const QComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend QComplex operator-(const QComplex& a, const QComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend QComplex operator*(const QComplex& a, const QComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend QComplex operator*(const QComplex& a, const Rational& q) {
    return {a.re * q, a.im * q};
  }
  friend bool operator==(const QComplex& a, const QComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

/// Element of Q(i)[sqrt(p)]: base + surd*sqrt(p). Closed under +,-,* and
/// conjugation, which is all the inner-product algebra needs.
struct QSurd {
  QComplex base;
  QComplex surd;
  long p = 1;

  QSurd() = default;
  explicit QSurd(long p_) : p(p_) {}

  bool is_zero() const { return base.is_zero() && surd.is_zero(); }
  QSurd conj() const {
    QSurd r(p);
    r.base = base.conj();
    r.surd = surd.conj();
    return r;
  }
  std::complex<double> to_complex() const {
    return base.to_complex() + surd.to_complex() * std::sqrt(double(p));
  }

  friend QSurd operator+(const QSurd& a, const QSurd& b) {
    check_same_p(a, b);
    QSurd r(a.p);
    r.base = a.base + b.base;
    r.surd = a.surd + b.surd;
    return r;
  }
  friend QSurd operator-(const QSurd& a, const QSurd& b) {
    check_same_p(a, b);
    QSurd r(a.p);
    r.base = a.base - b.base;
    r.surd = a.surd - b.surd;
    return r;
  }
  friend QSurd operator*(const QSurd& a, const QSurd& b) {
    check_same_p(a, b);
    QSurd r(a.p);
    r.base = a.base * b.base + a.surd * b.surd * Rational(a.p);
    r.surd = a.base * b.surd + a.surd * b.base;
    return r;
  }
  friend bool operator==(const QSurd& a, const QSurd& b) {
    return a.p == b.p && a.base == b.base && a.surd == b.surd;
  }

 private:
  static void check_same_p(const QSurd& a, const QSurd& b) {
    if (a.p != b.p) throw std::logic_error("QSurd: mixed radicands");
  }
};

/// Coefficient c * p^(hp/2). Tracking the half-power of p symbolically keeps
/// the scaling-operator round trips (U then U^-1) exact: they only shift hp.
struct Coef {
  std::complex<double> c{0.0, 0.0};
  int hp = 0;

  Coef() = default;
  Coef(std::complex<double> v, int halfpow = 0) : c(v), hp(halfpow) {}

  bool is_zero() const { return c.real() == 0.0 && c.imag() == 0.0; }

  /// Fold even powers of p into the mantissa; afterwards hp is 0 or 1.
  Coef canonical(long p) const {
    int par = ((hp % 2) + 2) % 2;
    int shift = (hp - par) / 2;
    Coef r(c, par);
    if (shift >= 0) {
      for (int i = 0; i < shift; ++i) r.c *= double(p);
    } else {
      for (int i = 0; i < -shift; ++i) r.c /= double(p);
    }
    return r;
  }

  std::complex<double> to_complex(long p) const {
    Coef k = canonical(p);
    return k.hp ? k.c * std::sqrt(double(p)) : k.c;
  }

  /// Sum as coefficients of the same cell. Parity-matching sums stay in the
  /// scaled representation; mixed parities collapse to a plain double.
  static Coef add(const Coef& a, const Coef& b, long p) {
    Coef ca = a.canonical(p), cb = b.canonical(p);
    if (ca.hp == cb.hp) return Coef(ca.c + cb.c, ca.hp);
    return Coef(a.to_complex(p) + b.to_complex(p), 0);
  }
};

}  // namespace fmra
