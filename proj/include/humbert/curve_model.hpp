#pragma once

#include <optional>
#include <string>
#include <vector>

#include "humbert/apfloat.hpp"
#include "humbert/moduli.hpp"
#include "humbert/rational.hpp"

namespace humbert {

// Working precision for the ambient projective model checks. Default 128
// bits, tolerance 2^{-bits/2}; HUMBERT_PRECISION_BITS overrides the default.
struct PrecisionContext {
  int bits;
  ApFloat tolerance;

  explicit PrecisionContext(int bits_in = 128);
  PrecisionContext(int bits_in, ApFloat tol);

  static PrecisionContext from_environment();
};

// Point of P^n, scaled so that the first coordinate of largest modulus is 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<ApComplex> coords);

  const std::vector<ApComplex>& coords() const { return coords_; }
  int dimension() const { return static_cast<int>(coords_.size()) - 1; }

  bool approx_equal(const ProjectivePoint& o, const ApFloat& tol) const;
  std::string str(int digits) const;  // "[1 : 2i : ...]"

 private:
  std::vector<ApComplex> coords_;
};

// The n-1 quadrics of the ambient projective model:
// x1^2 + x2^2 + x3^2 = 0 and lambda_j x1^2 + x2^2 + x_{j+3}^2 = 0.
class CurveSystem {
 public:
  explicit CurveSystem(ParameterTuple params) : params_(std::move(params)) {}

  int n() const { return params_.n(); }
  const ParameterTuple& params() const { return params_; }

 private:
  ParameterTuple params_;
};

// Max absolute value of the quadric evaluations at the point.
ApFloat residual(const CurveSystem& sys, const ProjectivePoint& pt,
                 const PrecisionContext& prec);

// a_j: flip the sign of coordinate j (1-based); j = n+1 is the composite
// a_1...a_n. Residual-preserving; returns the renormalized point.
ProjectivePoint apply_automorphism(const ProjectivePoint& pt, int j);

struct ProjectedValue {
  bool infinite;
  ApComplex value;  // meaningful when finite

  std::string str(int digits) const {
    return infinite ? "inf" : value.str(digits);
  }
};

// pi([x1 : ... ]) = -(x2/x1)^2, infinity when x1 = 0. Invariant under every
// apply_automorphism (signs square away exactly).
ProjectedValue project(const ProjectivePoint& pt, const PrecisionContext& prec);

// The fiber of pi over z, by explicit sign enumeration: 2^n points off the
// branch set, 2^{n-1} over a branch value. Branch detection is exact
// (rational z). Throws PrecisionError when residuals exceed the tolerance.
std::vector<ProjectivePoint> sample_fiber(const CurveSystem& sys, const ExtRat& z,
                                          const PrecisionContext& prec);
std::vector<ProjectivePoint> sample_fiber_serial(const CurveSystem& sys,
                                                 const ExtRat& z,
                                                 const PrecisionContext& prec);

// General complex base point. A coordinate collapses (branch behaviour)
// only when its square vanishes exactly at working precision, so branch
// fibers are detected exactly for representable z and approximately never
// otherwise.
std::vector<ProjectivePoint> sample_fiber(const CurveSystem& sys,
                                          const ApComplex& z,
                                          const PrecisionContext& prec);

}  // namespace humbert
