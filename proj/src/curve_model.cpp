#include "humbert/curve_model.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "humbert/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace humbert {

PrecisionContext::PrecisionContext(int bits_in)
    : bits(bits_in), tolerance(ApFloat::two_to(-(bits_in / 2), bits_in)) {
  if (bits < 64) throw std::domain_error("PrecisionContext: bits must be >= 64");
}

PrecisionContext::PrecisionContext(int bits_in, ApFloat tol)
    : bits(bits_in), tolerance(std::move(tol)) {
  if (bits < 64) throw std::domain_error("PrecisionContext: bits must be >= 64");
  if (tolerance.sign() <= 0) {
    throw std::domain_error("PrecisionContext: tolerance must be positive");
  }
}

PrecisionContext PrecisionContext::from_environment() {
  const char* env = std::getenv("HUMBERT_PRECISION_BITS");
  if (env == nullptr) return PrecisionContext(128);
  int bits = std::atoi(env);
  if (bits < 64) {
    throw std::domain_error(
        "HUMBERT_PRECISION_BITS must be an integer >= 64, got: " +
        std::string(env));
  }
  return PrecisionContext(bits);
}

ProjectivePoint::ProjectivePoint(std::vector<ApComplex> coords)
    : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::domain_error("ProjectivePoint: no coordinates");
  size_t best = coords_.size();
  ApFloat best_mod(64);
  for (size_t i = 0; i < coords_.size(); ++i) {
    ApFloat m = coords_[i].modulus();
    if (best == coords_.size() || best_mod < m) {
      best = i;
      best_mod = m;
    }
  }
  if (coords_[best].is_zero()) {
    throw std::domain_error("ProjectivePoint: all coordinates zero");
  }
  ApComplex scale = coords_[best];
  for (auto& c : coords_) c = c / scale;
}

bool ProjectivePoint::approx_equal(const ProjectivePoint& o,
                                   const ApFloat& tol) const {
  if (coords_.size() != o.coords_.size()) return false;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (tol < (coords_[i] - o.coords_[i]).modulus()) return false;
  }
  return true;
}

std::string ProjectivePoint::str(int digits) const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << " : ";
    os << coords_[i].str(digits);
  }
  os << ']';
  return os.str();
}

ApFloat residual(const CurveSystem& sys, const ProjectivePoint& pt,
                 const PrecisionContext& prec) {
  const int n = sys.n();
  if (pt.dimension() != n) {
    throw std::domain_error("residual: dimension mismatch");
  }
  const auto& c = pt.coords();
  std::vector<ApComplex> sq;
  sq.reserve(n + 1);
  for (const auto& x : c) sq.push_back(x * x);

  ApFloat worst(prec.bits);
  auto consider = [&](const ApComplex& v) {
    ApFloat m = v.modulus();
    if (worst < m) worst = m;
  };
  consider(sq[0] + sq[1] + sq[2]);
  const auto& lambdas = sys.params().lambdas();
  for (int j = 0; j < n - 2; ++j) {
    ApComplex lx = ApComplex::from_rational(lambdas[j], prec.bits) * sq[0];
    consider(lx + sq[1] + sq[j + 3]);
  }
  return worst;
}

ProjectivePoint apply_automorphism(const ProjectivePoint& pt, int j) {
  const int n = pt.dimension();
  if (j < 1 || j > n + 1) {
    throw std::domain_error("apply_automorphism: index out of range");
  }
  std::vector<ApComplex> c = pt.coords();
  if (j == n + 1) {
    for (int i = 0; i < n; ++i) c[i] = -c[i];  // the composite a_1...a_n
  } else {
    c[j - 1] = -c[j - 1];
  }
  return ProjectivePoint(std::move(c));
}

ProjectedValue project(const ProjectivePoint& pt, const PrecisionContext& prec) {
  const auto& c = pt.coords();
  if (c[0].is_zero()) return ProjectedValue{true, ApComplex(prec.bits)};
  ApComplex ratio = c[1] / c[0];
  return ProjectedValue{false, -(ratio * ratio)};
}

namespace {

struct FiberBase {
  std::vector<ApComplex> coords;
  std::vector<int> signed_coords;
};

FiberBase base_over_infinity(int n, mpfr_prec_t bits) {
  FiberBase base{std::vector<ApComplex>(n + 1, ApComplex(bits)), {}};
  base.coords[1] = ApComplex(ApFloat::from_long(1, bits), ApFloat(bits));
  for (int k = 2; k <= n; ++k) {
    base.coords[k] = complex_sqrt(ApComplex::from_rational(mpq_class(-1), bits));
    base.signed_coords.push_back(k);
  }
  return base;
}

std::vector<ProjectivePoint> expand_signs(const CurveSystem& sys,
                                          const FiberBase& base,
                                          const PrecisionContext& prec,
                                          bool parallel) {
  const size_t count = 1ull << base.signed_coords.size();
  std::vector<std::optional<ProjectivePoint>> out(count);
  auto build = [&](size_t s) {
    std::vector<ApComplex> c = base.coords;
    for (size_t b = 0; b < base.signed_coords.size(); ++b) {
      if ((s >> b) & 1u) c[base.signed_coords[b]] = -c[base.signed_coords[b]];
    }
    out[s].emplace(std::move(c));
  };
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (size_t s = 0; s < count; ++s) build(s);
  } else {
    for (size_t s = 0; s < count; ++s) build(s);
  }

  std::vector<ProjectivePoint> points;
  points.reserve(count);
  for (auto& p : out) points.push_back(std::move(*p));

  for (const auto& p : points) {
    ApFloat r = residual(sys, p, prec);
    if (prec.tolerance < r) {
      throw PrecisionError(
          "sample_fiber: residual " + r.str(6) + " exceeds tolerance " +
          prec.tolerance.str(6) +
          "; raise the precision (HUMBERT_PRECISION_BITS or PrecisionContext "
          "bits)");
    }
  }
  return points;
}

std::vector<ProjectivePoint> fiber_points(const CurveSystem& sys, const ExtRat& z,
                                          const PrecisionContext& prec,
                                          bool parallel) {
  const int n = sys.n();
  const auto& lambdas = sys.params().lambdas();
  const mpfr_prec_t bits = prec.bits;

  // Exact coordinate squares; a zero square pins the coordinate to 0 and
  // halves the fiber (branch value).
  FiberBase base{std::vector<ApComplex>(n + 1, ApComplex(bits)), {}};
  if (z.is_infinity()) {
    base = base_over_infinity(n, bits);
  } else {
    const mpq_class& zv = z.value();
    std::vector<mpq_class> squares(n + 1);
    squares[1] = -zv;
    squares[2] = zv - 1;
    for (int j = 0; j < n - 2; ++j) squares[j + 3] = zv - lambdas[j];
    base.coords[0] = ApComplex(ApFloat::from_long(1, bits), ApFloat(bits));
    for (int k = 1; k <= n; ++k) {
      if (squares[k] == 0) continue;  // exact branch coordinate
      base.coords[k] = complex_sqrt(ApComplex::from_rational(squares[k], bits));
      base.signed_coords.push_back(k);
    }
  }
  return expand_signs(sys, base, prec, parallel);
}

}  // namespace

std::vector<ProjectivePoint> sample_fiber(const CurveSystem& sys,
                                          const ApComplex& z,
                                          const PrecisionContext& prec) {
  const int n = sys.n();
  const auto& lambdas = sys.params().lambdas();
  const mpfr_prec_t bits = prec.bits;
  FiberBase base{std::vector<ApComplex>(n + 1, ApComplex(bits)), {}};
  base.coords[0] = ApComplex(ApFloat::from_long(1, bits), ApFloat(bits));
  std::vector<ApComplex> squares(n + 1, ApComplex(bits));
  squares[1] = -z;
  squares[2] = z - ApComplex::from_rational(mpq_class(1), bits);
  for (int j = 0; j < n - 2; ++j) {
    squares[j + 3] = z - ApComplex::from_rational(lambdas[j], bits);
  }
  for (int k = 1; k <= n; ++k) {
    if (squares[k].is_zero()) continue;
    base.coords[k] = complex_sqrt(squares[k]);
    base.signed_coords.push_back(k);
  }
  return expand_signs(sys, base, prec, /*parallel=*/true);
}

std::vector<ProjectivePoint> sample_fiber(const CurveSystem& sys, const ExtRat& z,
                                          const PrecisionContext& prec) {
  return fiber_points(sys, z, prec, /*parallel=*/true);
}

std::vector<ProjectivePoint> sample_fiber_serial(const CurveSystem& sys,
                                                 const ExtRat& z,
                                                 const PrecisionContext& prec) {
  return fiber_points(sys, z, prec, /*parallel=*/false);
}

}  // namespace humbert
