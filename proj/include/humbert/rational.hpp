#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace humbert {

// A point of the rational projective line: an exact rational in lowest terms
// or the single distinguished value infinity. Branch values live here.
class ExtRat {
 public:
  ExtRat() : finite_(true), q_(0) {}
  ExtRat(long v) : finite_(true), q_(v) {}  // NOLINT: implicit on purpose
  ExtRat(long num, long den);
  explicit ExtRat(mpq_class q) : finite_(true), q_(std::move(q)) {
    q_.canonicalize();
  }

  static ExtRat infinity();

  bool is_infinity() const { return !finite_; }
  bool is_finite() const { return finite_; }

  // Finite value accessor; throws std::domain_error on infinity.
  const mpq_class& value() const;

  bool operator==(const ExtRat& o) const {
    return finite_ == o.finite_ && (!finite_ || q_ == o.q_);
  }
  bool operator!=(const ExtRat& o) const { return !(*this == o); }

  // Total order used only for deterministic output: finite by value,
  // infinity after every finite value.
  bool operator<(const ExtRat& o) const;

  // "p/q", "p", or "inf".
  std::string str() const;

 private:
  bool finite_;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const ExtRat& v);

// Accepts "p/q", "p" (optionally signed), or "inf". Throws std::invalid_argument.
ExtRat parse_ext_rat(const std::string& text);

// Finite-only variant for lambda lists; rejects "inf".
mpq_class parse_rational(const std::string& text);

// Comma-separated finite rationals ("2,3" or "5/2,7/3").
std::vector<mpq_class> parse_rational_csv(const std::string& text);

std::string rat_str(const mpq_class& q);

}  // namespace humbert
