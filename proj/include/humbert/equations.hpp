#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "humbert/mobius.hpp"
#include "humbert/rational.hpp"

namespace humbert {

// The ordered branch list (inf, 0, 1, lambda_1, ..., lambda_{n-2}),
// pairwise distinct, lambdas finite and outside {0, 1}.
class BranchSet {
 public:
  BranchSet(int n, std::vector<mpq_class> lambdas);

  int n() const { return n_; }
  int size() const { return n_ + 1; }
  // 1-based branch index.
  const ExtRat& value(int index) const;
  const std::vector<ExtRat>& values() const { return values_; }
  const std::vector<mpq_class>& lambdas() const { return lambdas_; }

 private:
  int n_;
  std::vector<mpq_class> lambdas_;
  std::vector<ExtRat> values_;
};

// Degree-2 branched self-cover of the sphere, z -> post(z^2). Even, with
// critical points 0 and inf and critical values {post(0), post(inf)}.
class EvenCover {
 public:
  explicit EvenCover(MobiusMap post) : post_(std::move(post)) {}

  const MobiusMap& post() const { return post_; }
  ExtRat operator()(const ExtRat& square) const { return post_(square); }
  ExtRat critical_value_at_infinity() const { return post_(ExtRat::infinity()); }
  ExtRat critical_value_at_zero() const { return post_(ExtRat(0)); }

 private:
  MobiusMap post_;
};

// Normal form with {Q(inf), Q(0)} = {b1, b2}: both finite gives
// z -> (b1 z^2 + b2)/(z^2 + 1); b1 = inf gives z -> z^2 + b2 (z^2 when b2 = 0).
// Inputs must come in branch-index order, so infinity can only be b1.
EvenCover pair_cover(const ExtRat& b1, const ExtRat& b2);

// The exact w with cover(z) = c iff z^2 = w. Critical value input (c in
// {b1, b2}) -> domain error.
mpq_class preimage_square(const EvenCover& cover, const ExtRat& c);

enum class EquationShape {
  kRootList,        // y^2 = prod (x - r_i), distinct finite simple roots
  kEvenQuadratics,  // y^2 = prod (x^2 - s_i), s_i distinct nonzero
  kEvenQuarticsMu,  // y^2 = prod (x^4 + 2(1-2mu_j) x^2 + 1), mu_j not in {0,1}
  kEvenQuarticsW,   // y^2 = prod (x^4 - w_j), w_j distinct nonzero
};

const char* shape_name(EquationShape shape);

// Exact hyperelliptic model y^2 = f(x) in one of the four factor shapes.
class HyperellipticEquation {
 public:
  HyperellipticEquation(EquationShape shape, std::vector<mpq_class> constants);

  EquationShape shape() const { return shape_; }
  // Roots, s_i, mu_j or w_j depending on shape; emission order.
  const std::vector<mpq_class>& constants() const { return constants_; }
  int branch_count() const;
  int genus() const;

  std::string render() const;  // "y^2 = (x^2+1)(x^2+3/2)(x^2+2)"

  bool operator==(const HyperellipticEquation& o) const {
    return shape_ == o.shape_ && constants_ == o.constants_;
  }

 private:
  EquationShape shape_;
  std::vector<mpq_class> constants_;
};

// The branched-cover data an emitted equation is checked against.
struct CoverDescriptor {
  enum class Kind {
    kSquareThenMobius,       // z -> post(z^2); pairs with kEvenQuadratics
    kFourthPowerThenMobius,  // z -> post(z^4); pairs with kEvenQuarticsW
    kMobiusNormalizer,       // branch value -> factor parameter; Mu and RootList
  };
  Kind kind;
  MobiusMap map;
};

// An emitted curve with everything needed for exact self-verification.
struct QuotientCurve {
  HyperellipticEquation equation;
  CoverDescriptor cover;
  std::vector<ExtRat> expected;  // branch values the factors must account for
};

// m = n-2 family: omit the pair {p, q}, one factor x^2 - w per remaining
// branch value with w its preimage square under pair_cover. Genus n-2.
QuotientCurve pair_quotient_curve(const BranchSet& branch, int p, int q);

// m = n-3 family: normalize the chosen triple to (inf, 0, 1); one factor
// x^4 + 2(1-2mu)x^2 + 1 per remaining value with mu its normalized image.
// Genus 2n-5. Triple taken in ascending branch-index order.
QuotientCurve triple_quotient_curve(const BranchSet& branch, int i1, int i2, int i3);

// Degree-4 tower over the pair cover: one factor x^4 - w per branch value
// outside {p, q, r}, w the pair-cover preimage square. Genus 2n-5.
QuotientCurve tower_quartic_curve(const BranchSet& branch, int p, int q, int r);

// m = n-1 family (n odd): y^2 = x(x-1)(x-lambda_1)...(x-lambda_{n-2}),
// genus (n-1)/2. n even -> domain error (no free rank n-1 subgroup).
QuotientCurve full_rank_quotient_curve(const BranchSet& branch);

// Genus-(n-2)/2 family (n even): drop one branch value, renormalize the three
// lowest-index survivors to (inf, 0, 1), keep the images of the rest.
QuotientCurve single_omission_curve(const BranchSet& branch, int omitted);

// Exact zero-tolerance check: each factor parameter maps forward under the
// cover onto exactly one expected branch value, exhausting the multiset.
bool verify_cover_consistency(const HyperellipticEquation& eq,
                              const CoverDescriptor& cover,
                              const std::vector<ExtRat>& expected);

inline bool verify_cover_consistency(const QuotientCurve& curve) {
  return verify_cover_consistency(curve.equation, curve.cover, curve.expected);
}

// Scalar sigma with constants(eq2) = sigma * constants(eq1) as multisets;
// sigma = 1 preferred. Quadratic and quartic-w shapes scale, the mu shape
// compares exactly. Shape mismatch or root lists -> domain error.
std::optional<mpq_class> equal_up_to_scaling(const HyperellipticEquation& eq1,
                                             const HyperellipticEquation& eq2);

// {"shape": ..., "genus": g, "factors": ["p/q", ...], "cover": {...}};
// exact rational strings throughout.
nlohmann::json equation_json(const QuotientCurve& curve);

}  // namespace humbert
