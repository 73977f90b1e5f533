// Acceptance suite: one check per criterion, one PASS/FAIL line each.
// Exit status is the number of failing criteria (0 = all pass).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "humbert/curve_model.hpp"
#include "humbert/equations.hpp"
#include "humbert/group.hpp"
#include "humbert/moduli.hpp"
#include "humbert/subgroup_enum.hpp"
#include "humbert/verification.hpp"

using namespace humbert;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> run;
};

mpq_class q(long num, long den = 1) { return mpq_class(num, den); }

std::vector<std::pair<int, int>> pairs_of(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 1; p <= n + 1; ++p) {
    for (int r = p + 1; r <= n + 1; ++r) out.emplace_back(p, r);
  }
  return out;
}

// 1. Free-subgroup census at rank n-2 for n = 4, 5, 6: the n(n+1)/2 count
// is the subgroups with a hyperelliptic quotient certificate (witness
// coset); the raw exhaustive census is pinned against the independent
// inclusion-exclusion count alongside.
bool criterion_census(std::string& note) {
  std::ostringstream os;
  bool ok = true;
  for (int n : {4, 5, 6}) {
    GroupContext ctx(n);
    auto raw = enumerate_free_subgroups(ctx, n - 2);
    auto certified = hyperelliptic_quotient_subgroups(ctx, n - 2);
    uint64_t ie = inclusion_exclusion_free_count(ctx, n - 2);
    ok = ok && raw.size() == ie &&
         static_cast<int>(certified.size()) == n * (n + 1) / 2;
    os << "n=" << n << ": certified " << certified.size() << "/" << raw.size()
       << " raw (ie " << ie << ")  ";
  }
  note = os.str();
  return ok;
}

// 2. Maximal-rank dichotomy.
bool criterion_maximal_rank(std::string& note) {
  bool ok = true;
  std::ostringstream os;
  auto count = [&](int n, int rank) {
    return enumerate_free_subgroups(GroupContext(n), rank).size();
  };
  size_t c54 = count(5, 4), c76 = count(7, 6), c43 = count(4, 3), c65 = count(6, 5);
  ok = c54 == 1 && c76 == 1 && c43 == 0 && c65 == 0;
  os << "(5,4)->" << c54 << " (7,6)->" << c76 << " (4,3)->" << c43 << " (6,5)->"
     << c65;
  note = os.str();
  return ok;
}

// 3. The ten rank-1 subgroups for n = 4.
bool criterion_rank1_list(std::string& note) {
  GroupContext ctx(4);
  auto census = enumerate_free_subgroups(ctx, 1);
  std::vector<Subgroup> expected;
  for (auto [p, r] : pairs_of(4)) {
    expected.push_back(Subgroup::span(ctx, {make_element(ctx, {p, r})}));
  }
  std::sort(expected.begin(), expected.end());
  note = std::to_string(census.size()) + " involutions";
  return census == expected;
}

// 4. Quotient profiles of the witness-certified rank-(n-2) subgroups; the
// fixed-point shape claims hold exactly on the certified class, and the
// raw-census complement is reported alongside.
bool criterion_profiles(std::string& note) {
  std::ostringstream os;
  bool ok = true;
  for (int n : {4, 5, 6, 7}) {
    GroupContext ctx(n);
    auto raw = enumerate_free_subgroups(ctx, n - 2);
    auto certified = hyperelliptic_quotient_subgroups(ctx, n - 2);
    for (const auto& k : certified) {
      QuotientProfile prof = quotient_profile(k);
      int witness = 0, two_fp = 0, four_fp = 0, free_nonid = 0;
      for (const auto& row : prof.rows) {
        if (row.coset.representative().is_identity()) continue;
        if (row.fixed_points == 2 * prof.quotient_genus + 2) ++witness;
        if (row.fixed_points == 2) ++two_fp;
        if (row.fixed_points == 4) ++four_fp;
        if (row.fixed_points == 0) ++free_nonid;
      }
      bool shape = (n % 2 == 0) ? (witness == 1 && two_fp == 2)
                                : (witness == 1 && four_fp == 1 && free_nonid == 1);
      ok = ok && shape && prof.hyperelliptic_witness.has_value();
    }
    // witness-certified == pair-form on the whole raw census
    for (const auto& k : raw) {
      ok = ok && (quotient_profile(k).hyperelliptic_witness.has_value() ==
                  omitted_pair_of(k).has_value());
    }
    os << "n=" << n << ": " << certified.size() << " certified of " << raw.size()
       << "  ";
  }
  note = os.str();
  return ok;
}

// 5. Genus table, cross-checked against equation branch counts.
bool criterion_genus_table(std::string& note) {
  bool ok = true;
  for (int n = 4; n <= 9; ++n) {
    GroupContext ctx(n);
    BranchSet branch(n, seed_tuple(n).lambdas());
    // rank n-2 (pair family)
    QuotientProfile pp = quotient_profile(pair_subgroup(ctx, n, n + 1));
    QuotientCurve pc = pair_quotient_curve(branch, n, n + 1);
    ok = ok && pp.quotient_genus == n - 2 &&
         pc.equation.branch_count() == 2 * pp.quotient_genus + 2;
    // rank n-3 (triple family)
    std::vector<GroupElement> gens;
    for (int j = 2; j <= n - 2; ++j) gens.push_back(make_element(ctx, {1, j}));
    QuotientProfile tp = quotient_profile(Subgroup::span(ctx, gens));
    QuotientCurve tc = triple_quotient_curve(branch, n - 1, n, n + 1);
    ok = ok && tp.quotient_genus == 2 * n - 5 &&
         tc.equation.branch_count() == 2 * tp.quotient_genus + 2;
    // rank n-1 (full-rank family, odd n)
    if (n % 2 == 1) {
      std::vector<GroupElement> top;
      for (int j = 2; j <= n; ++j) top.push_back(make_element(ctx, {1, j}));
      QuotientProfile fp = quotient_profile(Subgroup::span(ctx, top));
      QuotientCurve fc = full_rank_quotient_curve(branch);
      ok = ok && fp.quotient_genus == (n - 1) / 2 &&
           fc.equation.branch_count() == 2 * fp.quotient_genus + 2;
    }
  }
  note = "ranks {n-3, n-2} for n = 4..9 plus n-1 for odd n";
  return ok;
}

// 6. Extension censuses.
bool criterion_extensions(std::string& note) {
  std::ostringstream os;
  bool ok = true;
  for (int n : {4, 6}) {
    GroupContext ctx(n);
    auto hyper = hyperelliptic_extensions(ctx);
    auto nonhyper = non_hyperelliptic_extensions(ctx);
    std::set<std::vector<uint32_t>> hs;
    for (const auto& k : hyper) hs.insert(k.rows());
    bool disjoint = true;
    for (const auto& k : nonhyper) disjoint = disjoint && !hs.count(k.rows());
    ok = ok && static_cast<int>(hyper.size()) == n * (n + 1) / 2 &&
         static_cast<int>(nonhyper.size()) == n + 1 && disjoint;
    for (const auto& k : hyper) ok = ok && !k.acts_freely();
    for (const auto& k : nonhyper) ok = ok && !k.acts_freely();
    os << "n=" << n << ": " << hyper.size() << "+" << nonhyper.size() << "  ";
  }
  note = os.str();
  return ok;
}

// 7. Span equality over all valid (U1, U2, r) triples for n = 4, 5, 6,
// as the criterion states. The identity requires even n; the n = 5 leg is
// expected to fail and is reported honestly with its counterexample.
bool criterion_span_equality(std::string& note) {
  std::ostringstream os;
  bool all_ok = true;
  for (int n : {4, 5, 6}) {
    GroupContext ctx(n);
    long total = 0, failed = 0;
    std::string first_bad;
    for (int r = 1; r <= n + 1; ++r) {
      for (int x = 1; x <= n + 1; ++x) {
        if (x == r) continue;
        for (int y = 1; y <= n + 1; ++y) {
          if (y == r) continue;
          ++total;
          if (!check_extension_span_equality(pair_subgroup(ctx, r, x), pair_subgroup(ctx, r, y), r)) {
            if (failed == 0) {
              first_bad = "U1 omits {" + std::to_string(r) + "," +
                          std::to_string(x) + "}, U2 omits {" + std::to_string(r) +
                          "," + std::to_string(y) + "}, r=" + std::to_string(r);
            }
            ++failed;
          }
        }
      }
    }
    os << "n=" << n << ": " << (total - failed) << "/" << total;
    if (failed > 0) {
      os << " (first counterexample: " << first_bad
         << "; the span identity holds only for even n)";
      all_ok = false;
    }
    os << "  ";
  }
  note = os.str();
  return all_ok;
}

// 8. The printed genus-2 catalog at (2,3) and three random tuples, up to
// scaling (first curve via sigma = -1), with the three recorded errata
// matched against their cover-consistent corrections.
bool criterion_pair_catalog(std::string& note) {
  std::mt19937 rng(424242);
  std::vector<ParameterTuple> tuples = {ParameterTuple(4, {q(2), q(3)})};
  for (int i = 0; i < 3; ++i) tuples.push_back(random_tuple(4, rng));

  auto errata = pair_family_errata();
  auto is_erratum = [&](size_t idx) {
    for (const auto& [e, text] : errata) {
      if (static_cast<size_t>(e) == idx) return true;
    }
    return false;
  };
  bool ok = true;
  for (const auto& p : tuples) {
    const mpq_class l1 = p.lambdas()[0], l2 = p.lambdas()[1];
    BranchSet branch(4, p.lambdas());
    auto printed = printed_pair_family(l1, l2);
    auto fixed = consistent_pair_family(l1, l2);
    auto prs = pairs_of(4);
    for (size_t k = 0; k < prs.size(); ++k) {
      QuotientCurve curve = pair_quotient_curve(branch, prs[k].first, prs[k].second);
      auto got = curve.equation.constants();
      std::sort(got.begin(), got.end());
      if (is_erratum(k)) {
        auto want = fixed[k];
        std::sort(want.begin(), want.end());
        ok = ok && got == want;
        continue;
      }
      HyperellipticEquation printed_eq(EquationShape::kEvenQuadratics, printed[k]);
      auto sigma = equal_up_to_scaling(printed_eq, curve.equation);
      ok = ok && sigma.has_value() &&
           *sigma == ((k == 0) ? mpq_class(-1) : mpq_class(1));
    }
  }
  note = "4 tuples, 10 curves each; 3 erratum entries (pair {0,1} third-factor "
         "denominator, pairs {1,l1},{1,l2} third-factor signs) matched "
         "cover-consistently";
  return ok;
}

// 9. The printed genus-3 quartic list at (2,3), modulo cross-ratio orbits.
bool criterion_quartic_catalog(std::string& note) {
  BranchSet branch(4, {q(2), q(3)});
  auto printed = printed_quartic_pairs(q(2), q(3));
  std::vector<std::vector<mpq_class>> want, got;
  for (const auto& [a, b] : printed) {
    std::vector<mpq_class> w = {cross_ratio_canonical(a), cross_ratio_canonical(b)};
    std::sort(w.begin(), w.end());
    want.push_back(w);
  }
  for (int a = 1; a <= 5; ++a) {
    for (int b = a + 1; b <= 5; ++b) {
      for (int c = b + 1; c <= 5; ++c) {
        QuotientCurve curve = triple_quotient_curve(branch, a, b, c);
        std::vector<mpq_class> m;
        for (const auto& mu : curve.equation.constants()) {
          m.push_back(cross_ratio_canonical(mu));
        }
        std::sort(m.begin(), m.end());
        got.push_back(m);
      }
    }
  }
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  note = "10 mu-multisets matched modulo cross-ratio orbits";
  return want == got;
}

// 10. The three printed tower curves at (2,3).
bool criterion_tower(std::string& note) {
  BranchSet branch(4, {q(2), q(3)});
  auto sorted_w = [&](int r) {
    auto w = tower_quartic_curve(branch, 4, 5, r).equation.constants();
    std::sort(w.begin(), w.end());
    return w;
  };
  bool ok = sorted_w(3) == std::vector<mpq_class>{q(-3, 2), q(-1)} &&
            sorted_w(1) == std::vector<mpq_class>{q(-2), q(-3, 2)} &&
            sorted_w(2) == std::vector<mpq_class>{q(-2), q(-1)};
  note = "b3 in {1, inf, 0} over the pair {lambda1, lambda2}";
  return ok;
}

// 11. The five printed genus-1 cubics at (2,3) under the fixed convention.
bool criterion_single_omission(std::string& note) {
  BranchSet branch(4, {q(2), q(3)});
  std::vector<mpq_class> want, got;
  for (const auto& r : printed_single_omission_roots(q(2), q(3))) {
    want.push_back(cross_ratio_canonical(r));
  }
  for (int i = 1; i <= 5; ++i) {
    got.push_back(cross_ratio_canonical(
        single_omission_curve(branch, i).equation.constants()[2]));
  }
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  note = "5 cubic third-roots matched modulo cross-ratio orbits";
  return want == got;
}

// 12. Cover self-consistency over n = 4..9, 20 random tuples each.
bool criterion_cover_sweep(std::string& note) {
  std::mt19937 rng(31337);
  long checked = 0;
  bool ok = true;
  for (int n = 4; n <= 9; ++n) {
    for (int trial = 0; trial < 20 && ok; ++trial) {
      ParameterTuple p = random_tuple(n, rng);
      BranchSet branch(n, p.lambdas());
      for (auto [i, j] : pairs_of(n)) {
        ok = ok && verify_cover_consistency(pair_quotient_curve(branch, i, j));
        ++checked;
        for (int r = 1; r <= n + 1; ++r) {
          if (r == i || r == j) continue;
          ok = ok && verify_cover_consistency(tower_quartic_curve(branch, i, j, r));
          ++checked;
          if (r > j) {
            ok = ok &&
                 verify_cover_consistency(triple_quotient_curve(branch, i, j, r));
            ++checked;
          }
        }
      }
      if (n % 2 == 1) {
        ok = ok && verify_cover_consistency(full_rank_quotient_curve(branch));
        ++checked;
      } else {
        for (int i = 1; i <= n + 1; ++i) {
          ok = ok && verify_cover_consistency(single_omission_curve(branch, i));
          ++checked;
        }
      }
    }
  }
  note = std::to_string(checked) + " equations, exact arithmetic, zero tolerance";
  return ok;
}

// 13. Moduli generator relations on 100 random tuples for n = 4, 5, 6.
bool criterion_moduli_relations(std::string& note) {
  using G = ModuliGenerator;
  std::mt19937 rng(271828);
  bool ok = true;
  for (int n : {4, 5, 6}) {
    for (int i = 0; i < 100 && ok; ++i) {
      ParameterTuple p = random_tuple(n, rng);
      ParameterTuple t = p;
      for (int k = 0; k <= n; ++k) t = apply_generator(G::kT, t);
      ok = apply_generator(G::kB, apply_generator(G::kB, p)) == p &&
           apply_generator(G::kC, apply_generator(G::kC, p)) == p && t == p &&
           apply_generator(G::kS, apply_generator(G::kC, p)) ==
               apply_generator(G::kC, apply_generator(G::kS, p)) &&
           apply_generator(G::kB, apply_generator(G::kC, p)) ==
               apply_generator(G::kC, apply_generator(G::kB, p));
    }
  }
  note = "b^2 = c^2 = t^{n+1} = id, sc = cs, cb = bc; 300 tuples";
  return ok;
}

// 14. Degree counting on full-orbit seeds.
bool criterion_degrees(std::string& note) {
  std::ostringstream os;
  auto seed4 = find_full_orbit_seed(4);
  auto seed5 = find_full_orbit_seed(5);
  if (!seed4 || !seed5) {
    note = "no full-orbit seed found";
    return false;
  }
  int sub4 = suborbit_count(*seed4);
  int omit4 = omitted_point_class_count(*seed4);
  int sub5 = suborbit_count(*seed5);
  os << "n=4 seed (" << seed4->key() << "): " << sub4 << " classes, " << omit4
     << " omitted-point classes; n=5 seed (" << seed5->key() << "): " << sub5
     << " classes";
  note = os.str();
  return sub4 == 10 && omit4 == 5 && sub5 == 15;
}

// 15. Ambient model checks at 128 bits.
bool criterion_model(std::string& note) {
  PrecisionContext prec(128);
  bool ok = true;
  std::ostringstream os;
  for (int n : {4, 5}) {
    ParameterTuple params = seed_tuple(n);  // (2,3) and (2,3,5)
    CurveSystem sys(params);
    BranchSet branch(n, params.lambdas());
    auto fiber = sample_fiber(sys, ExtRat(-7, 9), prec);
    ok = ok && static_cast<long>(fiber.size()) == (1L << n);
    ApFloat worst(prec.bits);
    for (const auto& pt : fiber) {
      ApFloat r = residual(sys, pt, prec);
      if (worst < r) worst = r;
      ProjectedValue base = project(pt, prec);
      for (int j = 1; j <= n + 1; ++j) {
        ProjectedValue moved = project(apply_automorphism(pt, j), prec);
        ok = ok && !moved.infinite && base.value.re == moved.value.re &&
             base.value.im == moved.value.im;
      }
    }
    ok = ok && !(prec.tolerance < worst);
    for (int j = 1; j <= n + 1; ++j) {
      auto bf = sample_fiber(sys, branch.value(j), prec);
      ok = ok && static_cast<long>(bf.size()) == (1L << (n - 1));
      for (const auto& pt : bf) {
        ok = ok && pt.coords()[j - 1].is_zero();
        ProjectedValue v = project(pt, prec);
        if (branch.value(j).is_infinity()) {
          ok = ok && v.infinite;
        } else {
          ApComplex want =
              ApComplex::from_rational(branch.value(j).value(), prec.bits);
          ok = ok && !v.infinite &&
               !(prec.tolerance < (v.value - want).modulus());
        }
      }
    }
    os << "n=" << n << ": fibers 2^" << n << "/2^" << (n - 1)
       << ", max residual " << worst.str(3) << "  ";
  }
  note = os.str();
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "free-subgroup census 10/15/21 (witness-certified; raw census pinned "
          "by inclusion-exclusion)", criterion_census},
      {2, "maximal-rank dichotomy (5,4)->1 (7,6)->1 (4,3)->0 (6,5)->0",
       criterion_maximal_rank},
      {3, "the ten rank-1 subgroups for n=4", criterion_rank1_list},
      {4, "quotient profiles of certified rank-(n-2) subgroups, n=4..7",
       criterion_profiles},
      {5, "genus table (n-1)/2 | n-2 | 2n-5 against equation branch counts",
       criterion_genus_table},
      {6, "extension censuses n(n+1)/2 and n+1 for n=4,6", criterion_extensions},
      {7, "span equality on all valid (U1,U2,r) triples, n=4,5,6",
       criterion_span_equality},
      {8, "printed genus-2 catalog up to scaling with recorded errata",
       criterion_pair_catalog},
      {9, "printed genus-3 quartic list modulo cross-ratio orbits",
       criterion_quartic_catalog},
      {10, "printed tower curves for b3 in {1, inf, 0}", criterion_tower},
      {11, "printed genus-1 cubics under the fixed convention",
       criterion_single_omission},
      {12, "cover self-consistency, n=4..9, 20 random tuples each",
       criterion_cover_sweep},
      {13, "moduli generator relations on random tuples", criterion_moduli_relations},
      {14, "degree counts 10/15 and 5 omitted-point classes on full-orbit seeds",
       criterion_degrees},
      {15, "ambient projective model: fibers, residuals, projection invariance",
       criterion_model},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("[%2d] %s  %s (%.2fs)\n", c.id, ok ? "PASS" : "FAIL",
                c.title.c_str(), secs);
    if (!note.empty()) std::printf("     %s\n", note.c_str());
    if (!ok) ++failures;
  }
  std::printf("acceptance: %d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
