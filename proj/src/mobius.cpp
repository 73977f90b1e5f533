#include "humbert/mobius.hpp"

#include <algorithm>
#include <stdexcept>

namespace humbert {

MobiusMap::MobiusMap(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ == 0) {
    throw std::domain_error("MobiusMap: singular matrix");
  }
}

MobiusMap MobiusMap::identity() { return MobiusMap(1, 0, 0, 1); }

ExtRat MobiusMap::operator()(const ExtRat& z) const {
  if (z.is_infinity()) {
    if (c_ == 0) return ExtRat::infinity();
    return ExtRat(mpq_class(a_ / c_));
  }
  const mpq_class& v = z.value();
  mpq_class den = c_ * v + d_;
  if (den == 0) return ExtRat::infinity();
  return ExtRat(mpq_class((a_ * v + b_) / den));
}

MobiusMap MobiusMap::inverse() const {
  return MobiusMap(d_, -b_, -c_, a_);
}

MobiusMap MobiusMap::compose(const MobiusMap& inner) const {
  return MobiusMap(a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
                   c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_);
}

mpq_class MobiusMap::determinant() const { return a_ * d_ - b_ * c_; }

bool MobiusMap::is_identity() const {
  return b_ == 0 && c_ == 0 && a_ == d_;
}

MobiusMap triple_normalizer(const ExtRat& b1, const ExtRat& b2, const ExtRat& b3) {
  if (b1 == b2 || b1 == b3 || b2 == b3) {
    throw std::domain_error("triple_normalizer: coincident points");
  }
  // T(z) = (z - b2)(b3 - b1) / ((z - b1)(b3 - b2)), with exact degenerations.
  if (b1.is_infinity()) {
    // T(z) = (z - b2) / (b3 - b2)
    mpq_class s = b3.value() - b2.value();
    return MobiusMap(1, -b2.value(), 0, s);
  }
  if (b2.is_infinity()) {
    // T(z) = (b3 - b1) / (z - b1)
    mpq_class s = b3.value() - b1.value();
    return MobiusMap(0, s, 1, -b1.value());
  }
  if (b3.is_infinity()) {
    // T(z) = (z - b2) / (z - b1)
    return MobiusMap(1, -b2.value(), 1, -b1.value());
  }
  mpq_class p = b3.value() - b1.value();
  mpq_class q = b3.value() - b2.value();
  return MobiusMap(p, -b2.value() * p, q, -b1.value() * q);
}

std::vector<mpq_class> cross_ratio_orbit(const ExtRat& mu) {
  if (mu.is_infinity() || mu.value() == 0 || mu.value() == 1) {
    throw std::domain_error("cross_ratio_orbit: mu must avoid {inf, 0, 1}");
  }
  const mpq_class& m = mu.value();
  std::vector<mpq_class> orbit = {m,
                                  mpq_class(1 - m),
                                  mpq_class(1 / m),
                                  mpq_class(1 / (1 - m)),
                                  mpq_class((m - 1) / m),
                                  mpq_class(m / (m - 1))};
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

mpq_class cross_ratio_canonical(const mpq_class& mu) {
  return cross_ratio_orbit(ExtRat(mu)).front();
}

}  // namespace humbert
