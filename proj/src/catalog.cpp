#include "humbert/catalog.hpp"

#include <array>
#include <vector>

#include "humbert/equations.hpp"
#include "humbert/group.hpp"
#include "humbert/verification.hpp"

namespace humbert {

namespace {

nlohmann::json basis_json(const Subgroup& k) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : k.basis()) out.push_back(e.str());
  return out;
}

// The uniformizing subgroup of the quartic family for a branch triple is the
// free involution spanned by the complementary index pair.
Subgroup triple_subgroup(const GroupContext& ctx, const std::array<int, 3>& t) {
  std::vector<int> complement;
  for (int j = 1; j <= ctx.n() + 1; ++j) {
    if (j != t[0] && j != t[1] && j != t[2]) complement.push_back(j);
  }
  return Subgroup::span(ctx, {make_element(ctx, complement)});
}

// The single-omission family is uniformized by the rank-(n-1) extension
// determined by the omitted index alone.
Subgroup omission_subgroup(const GroupContext& ctx, int omitted) {
  int other = omitted == 1 ? 2 : 1;
  Subgroup k = pair_subgroup(ctx, omitted, other);
  std::vector<GroupElement> gens = k.basis();
  gens.push_back(make_element(ctx, {omitted}));
  return Subgroup::span(ctx, gens);
}

}  // namespace

nlohmann::json build_catalog(const mpq_class& l1, const mpq_class& l2) {
  GroupContext ctx(4);
  BranchSet branch(4, {l1, l2});
  nlohmann::json records = nlohmann::json::array();

  for (int a = 1; a <= 5; ++a) {
    for (int b = a + 1; b <= 5; ++b) {
      for (int c = b + 1; c <= 5; ++c) {
        QuotientCurve curve = triple_quotient_curve(branch, a, b, c);
        if (!verify_cover_consistency(curve)) {
          throw std::logic_error("catalog: quartic self-check failed");
        }
        records.push_back(
            {{"family", "quartic"},
             {"selector", {{"triple", {a, b, c}}}},
             {"subgroup", basis_json(triple_subgroup(ctx, {a, b, c}))},
             {"equation", equation_json(curve)}});
      }
    }
  }

  auto errata = pair_family_errata();
  int pair_index = 0;
  for (int a = 1; a <= 5; ++a) {
    for (int b = a + 1; b <= 5; ++b) {
      QuotientCurve curve = pair_quotient_curve(branch, a, b);
      if (!verify_cover_consistency(curve)) {
        throw std::logic_error("catalog: pair self-check failed");
      }
      nlohmann::json record = {{"family", "pair"},
                               {"selector", {{"pair", {a, b}}}},
                               {"subgroup", basis_json(pair_subgroup(ctx, a, b))},
                               {"equation", equation_json(curve)}};
      for (const auto& [idx, text] : errata) {
        if (idx == pair_index) record["erratum"] = text;
      }
      records.push_back(std::move(record));
      ++pair_index;
    }
  }

  for (int a = 1; a <= 5; ++a) {
    QuotientCurve curve = single_omission_curve(branch, a);
    if (!verify_cover_consistency(curve)) {
      throw std::logic_error("catalog: single-omission self-check failed");
    }
    records.push_back({{"family", "single"},
                       {"selector", {{"omit", a}}},
                       {"subgroup", basis_json(omission_subgroup(ctx, a))},
                       {"equation", equation_json(curve)}});
  }

  return nlohmann::json{{"n", 4},
                        {"lambdas", {rat_str(l1), rat_str(l2)}},
                        {"records", records}};
}

}  // namespace humbert
