#pragma once

#include <vector>

#include "humbert/rational.hpp"

namespace humbert {

// z -> (a z + b) / (c z + d) with exact rational entries, det != 0.
// Infinity is handled exactly: pole -> inf, inf -> a/c (or inf when c = 0).
class MobiusMap {
 public:
  MobiusMap(mpq_class a, mpq_class b, mpq_class c, mpq_class d);

  static MobiusMap identity();

  ExtRat operator()(const ExtRat& z) const;

  MobiusMap inverse() const;
  MobiusMap compose(const MobiusMap& inner) const;  // this after inner

  mpq_class determinant() const;
  bool is_identity() const;

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  const mpq_class& c() const { return c_; }
  const mpq_class& d() const { return d_; }

 private:
  mpq_class a_, b_, c_, d_;
};

// The unique Mobius map sending (b1, b2, b3) -> (inf, 0, 1).
// Degenerate forms when one of the inputs is infinity are exact.
MobiusMap triple_normalizer(const ExtRat& b1, const ExtRat& b2, const ExtRat& b3);

// {mu, 1-mu, 1/mu, 1/(1-mu), (mu-1)/mu, mu/(mu-1)}, deduplicated and sorted.
// Values equivalent under relabeling of a normalized triple (inf, 0, 1).
std::vector<mpq_class> cross_ratio_orbit(const ExtRat& mu);

// Smallest member of cross_ratio_orbit(mu); canonical key for orbit matching.
mpq_class cross_ratio_canonical(const mpq_class& mu);

}  // namespace humbert
