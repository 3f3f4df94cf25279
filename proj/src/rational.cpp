#include "primrt/rational.hpp"

#include <limits>

#include "primrt/error.hpp"

namespace primrt {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::out_of_range, "zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rational Rational::from_mpz(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::out_of_range, "zero denominator");
  return Rational(mpq_class(num, den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw Error(ErrorKind::out_of_range, "division by zero");
  q_ /= o.q_;
  return *this;
}

mpz_class Rational::ceil() const {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

std::int64_t Rational::ceil_int64() const {
  const mpz_class c = ceil();
  if (!c.fits_slong_p()) throw Error(ErrorKind::out_of_range, "ceiling does not fit in 64 bits");
  return c.get_si();
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

}  // namespace primrt
