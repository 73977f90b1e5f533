#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace humbert {

// Minimal RAII value type over mpfr_t. Every value carries its precision;
// binary operations produce results at the wider operand precision.
class ApFloat {
 public:
  explicit ApFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  ApFloat(const ApFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  ApFloat(ApFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  ApFloat& operator=(ApFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~ApFloat() { mpfr_clear(v_); }

  static ApFloat from_long(long x, mpfr_prec_t prec);
  static ApFloat from_rational(const mpq_class& q, mpfr_prec_t prec);
  // 2^exp, exact.
  static ApFloat two_to(long exp, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  ApFloat operator-() const;
  ApFloat operator+(const ApFloat& o) const;
  ApFloat operator-(const ApFloat& o) const;
  ApFloat operator*(const ApFloat& o) const;
  ApFloat operator/(const ApFloat& o) const;

  bool operator<(const ApFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
  bool operator<=(const ApFloat& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
  bool operator==(const ApFloat& o) const { return mpfr_cmp(v_, o.v_) == 0; }

  ApFloat abs() const;
  ApFloat sqrt() const;  // nonnegative input

  std::string str(int digits) const;

 private:
  mpfr_t v_;
  friend ApFloat binop(const ApFloat&, const ApFloat&,
                       int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t));
};

// Complex value on two ApFloats; principal-branch square root.
struct ApComplex {
  ApFloat re, im;

  explicit ApComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  ApComplex(ApFloat r, ApFloat i) : re(std::move(r)), im(std::move(i)) {}

  static ApComplex from_rational(const mpq_class& q, mpfr_prec_t prec);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  ApComplex operator-() const { return ApComplex(-re, -im); }
  ApComplex operator+(const ApComplex& o) const {
    return ApComplex(re + o.re, im + o.im);
  }
  ApComplex operator-(const ApComplex& o) const {
    return ApComplex(re - o.re, im - o.im);
  }
  ApComplex operator*(const ApComplex& o) const {
    return ApComplex(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  ApComplex operator/(const ApComplex& o) const;

  ApFloat modulus() const { return (re * re + im * im).sqrt(); }

  std::string str(int digits) const;
};

// Principal square root: real part >= 0; negative reals map to +i sqrt(|x|).
ApComplex complex_sqrt(const ApComplex& z);

}  // namespace humbert
