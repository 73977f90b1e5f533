#include "humbert/equations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace humbert {

BranchSet::BranchSet(int n, std::vector<mpq_class> lambdas)
    : n_(n), lambdas_(std::move(lambdas)) {
  if (n_ < 4) throw std::domain_error("BranchSet: n must be >= 4");
  if (static_cast<int>(lambdas_.size()) != n_ - 2) {
    throw std::domain_error("BranchSet: expected " + std::to_string(n_ - 2) +
                            " lambdas, got " + std::to_string(lambdas_.size()));
  }
  values_.push_back(ExtRat::infinity());
  values_.push_back(ExtRat(0));
  values_.push_back(ExtRat(1));
  for (auto& l : lambdas_) {
    l.canonicalize();
    if (l == 0 || l == 1) {
      throw std::domain_error("BranchSet: lambda in {0,1}");
    }
    values_.push_back(ExtRat(l));
  }
  for (size_t i = 0; i < values_.size(); ++i) {
    for (size_t j = i + 1; j < values_.size(); ++j) {
      if (values_[i] == values_[j]) {
        throw std::domain_error("BranchSet: branch values must be distinct");
      }
    }
  }
}

const ExtRat& BranchSet::value(int index) const {
  if (index < 1 || index > n_ + 1) {
    throw std::domain_error("BranchSet: index out of range");
  }
  return values_[index - 1];
}

EvenCover pair_cover(const ExtRat& b1, const ExtRat& b2) {
  if (b1 == b2) throw std::domain_error("pair_cover: coincident values");
  if (b2.is_infinity()) {
    throw std::domain_error("pair_cover: infinity must come first (index order)");
  }
  if (b1.is_infinity()) {
    if (b2.value() == 0) return EvenCover(MobiusMap::identity());  // z^2
    return EvenCover(MobiusMap(1, b2.value(), 0, 1));              // z^2 + b2
  }
  // (b1 z^2 + b2) / (z^2 + 1)
  return EvenCover(MobiusMap(b1.value(), b2.value(), 1, 1));
}

mpq_class preimage_square(const EvenCover& cover, const ExtRat& c) {
  if (c == cover.critical_value_at_infinity() ||
      c == cover.critical_value_at_zero()) {
    throw std::domain_error("preimage_square: critical value");
  }
  ExtRat w = cover.post().inverse()(c);
  return w.value();  // finite: w = inf only at the critical value b1
}

const char* shape_name(EquationShape shape) {
  switch (shape) {
    case EquationShape::kRootList: return "root_list";
    case EquationShape::kEvenQuadratics: return "even_quadratics";
    case EquationShape::kEvenQuarticsMu: return "even_quartics_mu";
    case EquationShape::kEvenQuarticsW: return "even_quartics_w";
  }
  return "?";
}

HyperellipticEquation::HyperellipticEquation(EquationShape shape,
                                             std::vector<mpq_class> constants)
    : shape_(shape), constants_(std::move(constants)) {
  if (constants_.empty()) {
    throw std::domain_error("HyperellipticEquation: no factors");
  }
  for (auto& c : constants_) c.canonicalize();
  std::set<mpq_class> seen;
  for (const auto& c : constants_) {
    if (!seen.insert(c).second) {
      throw std::domain_error("HyperellipticEquation: repeated factor constant");
    }
  }
  switch (shape_) {
    case EquationShape::kRootList:
      break;
    case EquationShape::kEvenQuadratics:
    case EquationShape::kEvenQuarticsW:
      for (const auto& c : constants_) {
        if (c == 0) throw std::domain_error("HyperellipticEquation: zero constant");
      }
      break;
    case EquationShape::kEvenQuarticsMu:
      for (const auto& c : constants_) {
        if (c == 0 || c == 1) {
          throw std::domain_error("HyperellipticEquation: mu in {0,1}");
        }
      }
      break;
  }
}

int HyperellipticEquation::branch_count() const {
  const int m = static_cast<int>(constants_.size());
  switch (shape_) {
    case EquationShape::kRootList:
      return (m % 2 == 1) ? m + 1 : m;  // odd degree adds the point at infinity
    case EquationShape::kEvenQuadratics:
      return 2 * m;
    case EquationShape::kEvenQuarticsMu:
    case EquationShape::kEvenQuarticsW:
      return 4 * m;
  }
  return 0;
}

int HyperellipticEquation::genus() const { return branch_count() / 2 - 1; }

namespace {

// "+p/q" / "-p/q" with the sign split out, for building factor strings.
void append_signed(std::ostream& os, const mpq_class& c) {
  if (c >= 0) {
    os << '+' << c.get_str();
  } else {
    os << '-' << mpq_class(-c).get_str();
  }
}

std::string quadratic_factor(const mpq_class& s, const char* power) {
  // x^k - s rendered with the sign folded in.
  std::ostringstream os;
  os << '(' << power;
  append_signed(os, mpq_class(-s));
  os << ')';
  return os.str();
}

std::string mu_quartic_factor(const mpq_class& mu) {
  mpq_class c = 2 * (1 - 2 * mu);  // x^4 + c x^2 + 1
  std::ostringstream os;
  os << "(x^4";
  if (c != 0) {
    if (c == 1) {
      os << "+x^2";
    } else if (c == -1) {
      os << "-x^2";
    } else if (c.get_den() == 1) {
      append_signed(os, c);
      os << "x^2";
    } else {
      os << (c > 0 ? '+' : '-') << '(' << mpq_class(abs(c)).get_str() << ')'
         << "x^2";
    }
  }
  os << "+1)";
  return os.str();
}

}  // namespace

std::string HyperellipticEquation::render() const {
  std::ostringstream os;
  os << "y^2 = ";
  switch (shape_) {
    case EquationShape::kRootList:
      for (const auto& r : constants_) {
        if (r == 0) {
          os << 'x';
        } else {
          std::ostringstream f;
          f << "(x";
          append_signed(f, mpq_class(-r));
          f << ')';
          os << f.str();
        }
      }
      break;
    case EquationShape::kEvenQuadratics:
      for (const auto& s : constants_) os << quadratic_factor(s, "x^2");
      break;
    case EquationShape::kEvenQuarticsW:
      for (const auto& w : constants_) os << quadratic_factor(w, "x^4");
      break;
    case EquationShape::kEvenQuarticsMu:
      for (const auto& mu : constants_) os << mu_quartic_factor(mu);
      break;
  }
  return os.str();
}

namespace {

std::vector<ExtRat> remaining_values(const BranchSet& branch,
                                     const std::vector<int>& skip) {
  std::vector<ExtRat> out;
  for (int i = 1; i <= branch.size(); ++i) {
    if (std::find(skip.begin(), skip.end(), i) == skip.end()) {
      out.push_back(branch.value(i));
    }
  }
  return out;
}

void require_distinct_indices(const BranchSet& branch, std::vector<int> idx,
                              const char* what) {
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
    throw std::domain_error(std::string(what) + ": indices must be distinct");
  }
  for (int i : idx) {
    if (i < 1 || i > branch.size()) {
      throw std::domain_error(std::string(what) + ": index out of range");
    }
  }
}

}  // namespace

QuotientCurve pair_quotient_curve(const BranchSet& branch, int p, int q) {
  require_distinct_indices(branch, {p, q}, "pair_quotient_curve");
  if (p > q) std::swap(p, q);
  EvenCover cover = pair_cover(branch.value(p), branch.value(q));
  std::vector<ExtRat> expected = remaining_values(branch, {p, q});
  std::vector<mpq_class> constants;
  for (const ExtRat& b : expected) {
    constants.push_back(preimage_square(cover, b));
  }
  HyperellipticEquation eq(EquationShape::kEvenQuadratics, std::move(constants));
  return QuotientCurve{std::move(eq),
                       CoverDescriptor{CoverDescriptor::Kind::kSquareThenMobius,
                                       cover.post()},
                       std::move(expected)};
}

QuotientCurve triple_quotient_curve(const BranchSet& branch, int i1, int i2,
                                    int i3) {
  require_distinct_indices(branch, {i1, i2, i3}, "triple_quotient_curve");
  std::vector<int> t = {i1, i2, i3};
  std::sort(t.begin(), t.end());  // ascending branch-index ordering
  MobiusMap norm =
      triple_normalizer(branch.value(t[0]), branch.value(t[1]), branch.value(t[2]));
  std::vector<ExtRat> expected = remaining_values(branch, t);
  std::vector<mpq_class> mus;
  for (const ExtRat& b : expected) {
    mus.push_back(norm(b).value());  // finite, outside {0,1}: b avoids the triple
  }
  HyperellipticEquation eq(EquationShape::kEvenQuarticsMu, std::move(mus));
  return QuotientCurve{std::move(eq),
                       CoverDescriptor{CoverDescriptor::Kind::kMobiusNormalizer,
                                       norm},
                       std::move(expected)};
}

QuotientCurve tower_quartic_curve(const BranchSet& branch, int p, int q, int r) {
  require_distinct_indices(branch, {p, q, r}, "tower_quartic_curve");
  if (p > q) std::swap(p, q);
  EvenCover cover = pair_cover(branch.value(p), branch.value(q));
  std::vector<ExtRat> expected = remaining_values(branch, {p, q, r});
  std::vector<mpq_class> ws;
  for (const ExtRat& b : expected) {
    ws.push_back(preimage_square(cover, b));
  }
  HyperellipticEquation eq(EquationShape::kEvenQuarticsW, std::move(ws));
  return QuotientCurve{std::move(eq),
                       CoverDescriptor{CoverDescriptor::Kind::kFourthPowerThenMobius,
                                       cover.post()},
                       std::move(expected)};
}

QuotientCurve full_rank_quotient_curve(const BranchSet& branch) {
  if (branch.n() % 2 == 0) {
    throw std::domain_error(
        "full_rank_quotient_curve: every rank n-1 subgroup acts non-freely for "
        "even n");
  }
  std::vector<mpq_class> roots = {mpq_class(0), mpq_class(1)};
  for (const auto& l : branch.lambdas()) roots.push_back(l);
  HyperellipticEquation eq(EquationShape::kRootList, std::move(roots));
  std::vector<ExtRat> expected = branch.values();
  return QuotientCurve{std::move(eq),
                       CoverDescriptor{CoverDescriptor::Kind::kMobiusNormalizer,
                                       MobiusMap::identity()},
                       std::move(expected)};
}

QuotientCurve single_omission_curve(const BranchSet& branch, int omitted) {
  require_distinct_indices(branch, {omitted}, "single_omission_curve");
  if (branch.n() % 2 != 0) {
    throw std::domain_error("single_omission_curve: n must be even");
  }
  std::vector<ExtRat> remaining = remaining_values(branch, {omitted});
  MobiusMap norm = triple_normalizer(remaining[0], remaining[1], remaining[2]);
  std::vector<mpq_class> roots = {mpq_class(0), mpq_class(1)};
  for (size_t i = 3; i < remaining.size(); ++i) {
    roots.push_back(norm(remaining[i]).value());
  }
  HyperellipticEquation eq(EquationShape::kRootList, std::move(roots));
  return QuotientCurve{std::move(eq),
                       CoverDescriptor{CoverDescriptor::Kind::kMobiusNormalizer,
                                       norm},
                       std::move(remaining)};
}

bool verify_cover_consistency(const HyperellipticEquation& eq,
                              const CoverDescriptor& cover,
                              const std::vector<ExtRat>& expected) {
  using Kind = CoverDescriptor::Kind;
  const bool compatible =
      (eq.shape() == EquationShape::kEvenQuadratics &&
       cover.kind == Kind::kSquareThenMobius) ||
      (eq.shape() == EquationShape::kEvenQuarticsW &&
       cover.kind == Kind::kFourthPowerThenMobius) ||
      (eq.shape() == EquationShape::kEvenQuarticsMu &&
       cover.kind == Kind::kMobiusNormalizer) ||
      (eq.shape() == EquationShape::kRootList &&
       cover.kind == Kind::kMobiusNormalizer);
  if (!compatible) {
    throw std::domain_error("verify_cover_consistency: shape/cover mismatch");
  }

  // Forward image of each factor parameter; root lists contribute the point
  // at infinity of the x-line when the polynomial degree is odd.
  std::vector<ExtRat> forward;
  switch (eq.shape()) {
    case EquationShape::kEvenQuadratics:
    case EquationShape::kEvenQuarticsW:
      for (const auto& c : eq.constants()) forward.push_back(cover.map(ExtRat(c)));
      break;
    case EquationShape::kEvenQuarticsMu: {
      MobiusMap inv = cover.map.inverse();
      for (const auto& mu : eq.constants()) forward.push_back(inv(ExtRat(mu)));
      break;
    }
    case EquationShape::kRootList: {
      MobiusMap inv = cover.map.inverse();
      for (const auto& r : eq.constants()) forward.push_back(inv(ExtRat(r)));
      if (eq.constants().size() % 2 == 1) {
        forward.push_back(inv(ExtRat::infinity()));
      }
      break;
    }
  }

  std::vector<ExtRat> want = expected;
  for (const ExtRat& v : forward) {
    auto it = std::find(want.begin(), want.end(), v);
    if (it == want.end()) return false;
    want.erase(it);  // each expected value hit by exactly one factor
  }
  return want.empty();
}

std::optional<mpq_class> equal_up_to_scaling(const HyperellipticEquation& eq1,
                                             const HyperellipticEquation& eq2) {
  if (eq1.shape() != eq2.shape()) {
    throw std::domain_error("equal_up_to_scaling: shape mismatch");
  }
  if (eq1.shape() == EquationShape::kRootList) {
    throw std::domain_error("equal_up_to_scaling: root lists not supported");
  }
  auto sorted = [](std::vector<mpq_class> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<mpq_class> a = sorted(eq1.constants());
  std::vector<mpq_class> b = sorted(eq2.constants());
  if (a.size() != b.size()) return std::nullopt;

  if (eq1.shape() == EquationShape::kEvenQuarticsMu) {
    if (a == b) return mpq_class(1);  // mu parameters do not scale
    return std::nullopt;
  }

  std::vector<mpq_class> candidates;
  for (const auto& s : b) candidates.push_back(mpq_class(s / a.front()));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  // Prefer sigma = 1, then the deterministic smallest workable scalar.
  auto works = [&](const mpq_class& sigma) {
    std::vector<mpq_class> scaled;
    scaled.reserve(a.size());
    for (const auto& s : a) scaled.push_back(mpq_class(sigma * s));
    std::sort(scaled.begin(), scaled.end());
    return scaled == b;
  };
  if (works(1)) return mpq_class(1);
  for (const auto& sigma : candidates) {
    if (works(sigma)) return sigma;
  }
  return std::nullopt;
}

nlohmann::json equation_json(const QuotientCurve& curve) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& c : curve.equation.constants()) factors.push_back(rat_str(c));

  const char* kind = nullptr;
  switch (curve.cover.kind) {
    case CoverDescriptor::Kind::kSquareThenMobius:
      kind = "square_then_mobius";
      break;
    case CoverDescriptor::Kind::kFourthPowerThenMobius:
      kind = "fourth_power_then_mobius";
      break;
    case CoverDescriptor::Kind::kMobiusNormalizer:
      kind = "mobius_normalizer";
      break;
  }
  const MobiusMap& m = curve.cover.map;
  nlohmann::json matrix = nlohmann::json::array(
      {nlohmann::json::array({rat_str(m.a()), rat_str(m.b())}),
       nlohmann::json::array({rat_str(m.c()), rat_str(m.d())})});
  nlohmann::json cover = {{"kind", kind}, {"matrix", matrix}};
  return nlohmann::json{{"shape", shape_name(curve.equation.shape())},
                        {"genus", curve.equation.genus()},
                        {"factors", factors},
                        {"cover", cover},
                        {"text", curve.equation.render()}};
}

}  // namespace humbert
