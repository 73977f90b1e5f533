#include "humbert/apfloat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace humbert {

ApFloat ApFloat::from_long(long x, mpfr_prec_t prec) {
  ApFloat r(prec);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

ApFloat ApFloat::from_rational(const mpq_class& q, mpfr_prec_t prec) {
  ApFloat r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

ApFloat ApFloat::two_to(long exp, mpfr_prec_t prec) {
  ApFloat r(prec);
  mpfr_set_si_2exp(r.v_, 1, exp, MPFR_RNDN);
  return r;
}

ApFloat binop(const ApFloat& a, const ApFloat& b,
              int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
  ApFloat r(std::max(a.precision(), b.precision()));
  op(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

ApFloat ApFloat::operator-() const {
  ApFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

ApFloat ApFloat::operator+(const ApFloat& o) const { return binop(*this, o, mpfr_add); }
ApFloat ApFloat::operator-(const ApFloat& o) const { return binop(*this, o, mpfr_sub); }
ApFloat ApFloat::operator*(const ApFloat& o) const { return binop(*this, o, mpfr_mul); }

ApFloat ApFloat::operator/(const ApFloat& o) const {
  if (o.is_zero()) throw std::domain_error("ApFloat: division by zero");
  return binop(*this, o, mpfr_div);
}

ApFloat ApFloat::abs() const {
  ApFloat r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

ApFloat ApFloat::sqrt() const {
  if (sign() < 0) throw std::domain_error("ApFloat: sqrt of negative value");
  ApFloat r(precision());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string ApFloat::str(int digits) const {
  std::ostringstream os;
  char* s = nullptr;
  // mpfr_asprintf handles rounding and exponent form.
  if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) {
    throw std::runtime_error("ApFloat: formatting failed");
  }
  os << s;
  mpfr_free_str(s);
  return os.str();
}

ApComplex ApComplex::from_rational(const mpq_class& q, mpfr_prec_t prec) {
  return ApComplex(ApFloat::from_rational(q, prec), ApFloat(prec));
}

ApComplex ApComplex::operator/(const ApComplex& o) const {
  ApFloat den = o.re * o.re + o.im * o.im;
  if (den.is_zero()) throw std::domain_error("ApComplex: division by zero");
  return ApComplex((re * o.re + im * o.im) / den, (im * o.re - re * o.im) / den);
}

std::string ApComplex::str(int digits) const {
  if (im.is_zero()) return re.str(digits);
  std::ostringstream os;
  if (re.is_zero()) {
    os << (im.sign() < 0 ? "-" : "") << im.abs().str(digits) << 'i';
  } else {
    os << re.str(digits) << (im.sign() < 0 ? "-" : "+") << im.abs().str(digits)
       << 'i';
  }
  return os.str();
}

ApComplex complex_sqrt(const ApComplex& z) {
  const mpfr_prec_t prec = std::max(z.re.precision(), z.im.precision());
  if (z.im.is_zero()) {
    if (z.re.sign() >= 0) return ApComplex(z.re.sqrt(), ApFloat(prec));
    return ApComplex(ApFloat(prec), (-z.re).sqrt());
  }
  // sqrt(a+bi) = u + vi with u = sqrt((|z|+a)/2), v = sign(b) sqrt((|z|-a)/2).
  ApFloat two = ApFloat::from_long(2, prec);
  ApFloat r = z.modulus();
  ApFloat u = ((r + z.re) / two).sqrt();
  ApFloat v = ((r - z.re) / two).sqrt();
  if (z.im.sign() < 0) v = -v;
  return ApComplex(std::move(u), std::move(v));
}

}  // namespace humbert
