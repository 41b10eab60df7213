#include "fmra/exact.hpp"

namespace fmra {

Rational rational_pow(long base, long e) {
  mpz_class b(base);
  mpz_class num;
  mpz_pow_ui(num.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  Rational r = e < 0 ? Rational(1, num) : Rational(num);
  r.canonicalize();
  return r;
}

}  // namespace fmra
