#include "humbert/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace humbert {

namespace {

uint32_t full_mask(int n) { return (1u << (n + 1)) - 1u; }

uint32_t canonicalize(int n, uint32_t raw) {
  raw &= full_mask(n);
  int w = std::popcount(raw);
  if (2 * w > n + 1) return raw ^ full_mask(n);
  if (2 * w == n + 1 && (raw >> n) & 1u) return raw ^ full_mask(n);
  return raw;
}

void require_same_context(const GroupElement& a, const GroupElement& b) {
  if (a.n() != b.n()) {
    throw std::domain_error("group elements from different contexts");
  }
}

}  // namespace

GroupContext::GroupContext(int n) : n_(n) {
  if (n < 4) throw std::domain_error("GroupContext: n must be >= 4");
  if (n > kMaxN) {
    throw std::domain_error("GroupContext: n exceeds supported maximum " +
                            std::to_string(kMaxN));
  }
}

long GroupContext::ambient_genus() const {
  return 1L - (1L << n_) + static_cast<long>(n_ + 1) * (1L << (n_ - 2));
}

GroupElement::GroupElement(const GroupContext& ctx, uint32_t raw_mask)
    : n_(ctx.n()), mask_(canonicalize(ctx.n(), raw_mask)) {}

GroupElement GroupElement::identity(const GroupContext& ctx) {
  return GroupElement(ctx, 0);
}

int GroupElement::weight() const { return std::popcount(mask_); }

uint32_t GroupElement::vec() const {
  if ((mask_ >> n_) & 1u) return (mask_ ^ full_mask(n_)) & ~(1u << n_);
  return mask_;
}

std::vector<int> GroupElement::indices() const {
  std::vector<int> out;
  for (int j = 0; j <= n_; ++j) {
    if ((mask_ >> j) & 1u) out.push_back(j + 1);
  }
  return out;
}

std::string GroupElement::str() const {
  if (is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int j : indices()) {
    if (!first) os << '*';
    os << 'a' << j;
    first = false;
  }
  return os.str();
}

GroupElement make_element(const GroupContext& ctx, const std::vector<int>& indices) {
  uint32_t raw = 0;
  for (int j : indices) {
    if (j < 1 || j > ctx.n() + 1) {
      throw std::domain_error("make_element: index " + std::to_string(j) +
                              " out of range 1.." + std::to_string(ctx.n() + 1));
    }
    uint32_t bit = 1u << (j - 1);
    if (raw & bit) {
      throw std::domain_error("make_element: duplicate index " + std::to_string(j));
    }
    raw |= bit;
  }
  return GroupElement(ctx, raw);
}

GroupElement element_from_vec(const GroupContext& ctx, uint32_t vec) {
  if (vec >> ctx.n()) throw std::domain_error("element_from_vec: vector out of range");
  return GroupElement(ctx, vec);
}

GroupElement multiply(const GroupElement& e1, const GroupElement& e2) {
  require_same_context(e1, e2);
  GroupContext ctx(e1.n());
  return GroupElement(ctx, e1.mask() ^ e2.mask());
}

bool has_fixed_points(const GroupElement& e) {
  if (e.is_identity()) {
    throw std::domain_error("fixed-point predicate undefined for identity");
  }
  return e.weight() == 1;
}

bool weight_lex_less(const GroupElement& a, const GroupElement& b) {
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  if (a.mask() == b.mask()) return false;
  uint32_t d = a.mask() ^ b.mask();
  uint32_t low = d & (~d + 1u);
  return (a.mask() & low) != 0;  // holder of the smallest differing index
}

namespace {

// Insert v into an RREF row set; returns false if dependent.
bool rref_insert(std::vector<uint32_t>& rows, uint32_t v) {
  for (uint32_t r : rows) {
    uint32_t pivot = r & (~r + 1u);
    if (v & pivot) v ^= r;
  }
  if (v == 0) return false;
  uint32_t pivot = v & (~v + 1u);
  for (uint32_t& r : rows) {
    if (r & pivot) r ^= v;
  }
  auto pos = rows.begin();
  while (pos != rows.end() && ((*pos) & (~(*pos) + 1u)) < pivot) ++pos;
  rows.insert(pos, v);
  return true;
}

}  // namespace

Subgroup Subgroup::span(const GroupContext& ctx,
                        const std::vector<GroupElement>& generators) {
  std::vector<uint32_t> rows;
  for (const auto& g : generators) {
    if (g.n() != ctx.n()) {
      throw std::domain_error("span: generator from a different context");
    }
    rref_insert(rows, g.vec());
  }
  return Subgroup(ctx, std::move(rows));
}

Subgroup Subgroup::from_rows(const GroupContext& ctx, std::vector<uint32_t> rows) {
  return Subgroup(ctx, std::move(rows));
}

std::vector<GroupElement> Subgroup::basis() const {
  std::vector<GroupElement> out;
  out.reserve(rows_.size());
  for (uint32_t r : rows_) out.push_back(element_from_vec(ctx_, r));
  return out;
}

uint32_t Subgroup::reduce_vec(uint32_t v) const {
  for (uint32_t r : rows_) {
    uint32_t pivot = r & (~r + 1u);
    if (v & pivot) v ^= r;
  }
  return v;
}

bool Subgroup::contains(const GroupElement& e) const {
  if (e.n() != ctx_.n()) throw std::domain_error("contains: context mismatch");
  return reduce_vec(e.vec()) == 0;
}

std::vector<GroupElement> Subgroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(1u << rows_.size());
  for (uint32_t s = 0; s < (1u << rows_.size()); ++s) {
    uint32_t v = 0;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if ((s >> i) & 1u) v ^= rows_[i];
    }
    out.push_back(element_from_vec(ctx_, v));
  }
  std::sort(out.begin(), out.end(), weight_lex_less);
  return out;
}

bool Subgroup::acts_freely() const {
  // A singleton e_j lies in an RREF row space iff it is one of the rows;
  // a_{n+1} is the all-ones coordinate vector.
  for (uint32_t r : rows_) {
    if (std::popcount(r) == 1) return false;
  }
  uint32_t all_ones = (1u << ctx_.n()) - 1u;
  return reduce_vec(all_ones) != 0;
}

Coset::Coset(const Subgroup& subgroup, const GroupElement& e)
    : subgroup_(subgroup), rep_(e) {
  if (e.n() != subgroup.context().n()) {
    throw std::domain_error("Coset: context mismatch");
  }
  GroupElement best = e;
  for (const auto& k : subgroup.elements()) {
    GroupElement cand = multiply(e, k);
    if (weight_lex_less(cand, best)) best = cand;
  }
  rep_ = best;
}

std::vector<GroupElement> Coset::members() const {
  std::vector<GroupElement> out;
  for (const auto& k : subgroup_.elements()) out.push_back(multiply(rep_, k));
  std::sort(out.begin(), out.end(), weight_lex_less);
  return out;
}

QuotientProfile quotient_profile(const Subgroup& k) {
  if (!k.acts_freely()) {
    throw std::domain_error("quotient_profile: subgroup does not act freely");
  }
  const GroupContext& ctx = k.context();
  const int n = ctx.n();
  const int rank = k.rank();

  long gm1 = ctx.ambient_genus() - 1;
  if (gm1 % (1L << rank) != 0) {
    throw std::logic_error("quotient_profile: non-integral quotient genus");
  }
  long genus = 1 + gm1 / (1L << rank);

  // Group the 2^n elements by coset residue; track per-coset generator count
  // and the weight-lex minimal member.
  std::map<uint32_t, std::pair<int, GroupElement>> by_residue;
  for (uint32_t v = 0; v < (1u << n); ++v) {
    GroupElement e = element_from_vec(ctx, v);
    uint32_t res = k.reduce_vec(v);
    auto it = by_residue.find(res);
    if (it == by_residue.end()) {
      by_residue.emplace(res, std::make_pair(e.weight() == 1 ? 1 : 0, e));
    } else {
      if (e.weight() == 1) it->second.first += 1;
      if (weight_lex_less(e, it->second.second)) it->second.second = e;
    }
  }

  long fp_unit = 1L << (n - 1 - rank);
  std::vector<ProfileRow> rows;
  rows.reserve(by_residue.size());
  for (const auto& [res, info] : by_residue) {
    (void)res;
    Coset c(k, info.second);
    rows.push_back(ProfileRow{c, info.first, info.first * fp_unit});
  }
  std::sort(rows.begin(), rows.end(), [](const ProfileRow& a, const ProfileRow& b) {
    return weight_lex_less(a.coset.representative(), b.coset.representative());
  });

  std::optional<Coset> witness;
  for (const auto& row : rows) {
    if (row.coset.representative().is_identity()) continue;
    if (row.fixed_points == 2 * genus + 2) {
      witness = row.coset;
      break;
    }
  }
  return QuotientProfile{k, genus, std::move(rows), std::move(witness)};
}

std::vector<int> hyperelliptic_rank_bound(const GroupContext& ctx) {
  if (ctx.n() % 2 == 0) return {ctx.n() - 3, ctx.n() - 2};
  return {ctx.n() - 3, ctx.n() - 2, ctx.n() - 1};
}

Subgroup pair_subgroup(const GroupContext& ctx, int p, int q) {
  if (p == q) throw std::domain_error("pair_subgroup: indices must differ");
  if (p < 1 || p > ctx.n() + 1 || q < 1 || q > ctx.n() + 1) {
    throw std::domain_error("pair_subgroup: index out of range");
  }
  std::vector<int> included;
  for (int j = 1; j <= ctx.n() + 1; ++j) {
    if (j != p && j != q) included.push_back(j);
  }
  std::vector<GroupElement> gens;
  for (size_t i = 1; i < included.size(); ++i) {
    gens.push_back(make_element(ctx, {included[0], included[i]}));
  }
  return Subgroup::span(ctx, gens);
}

std::optional<std::pair<int, int>> omitted_pair_of(const Subgroup& k) {
  const GroupContext& ctx = k.context();
  if (k.rank() != ctx.n() - 2) return std::nullopt;
  for (int p = 1; p <= ctx.n() + 1; ++p) {
    for (int q = p + 1; q <= ctx.n() + 1; ++q) {
      if (pair_subgroup(ctx, p, q) == k) return std::make_pair(p, q);
    }
  }
  return std::nullopt;
}

namespace {

std::vector<Subgroup> sorted_unique(std::vector<Subgroup> list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  return list;
}

}  // namespace

std::vector<Subgroup> hyperelliptic_extensions(const GroupContext& ctx) {
  if (ctx.n() % 2 != 0) {
    throw std::domain_error("hyperelliptic_extensions: n must be even");
  }
  std::vector<Subgroup> out;
  for (int p = 1; p <= ctx.n() + 1; ++p) {
    for (int q = p + 1; q <= ctx.n() + 1; ++q) {
      Subgroup k = pair_subgroup(ctx, p, q);
      for (int j = 1; j <= ctx.n() + 1; ++j) {
        if (j == p || j == q) continue;
        std::vector<GroupElement> gens = k.basis();
        gens.push_back(make_element(ctx, {j}));
        out.push_back(Subgroup::span(ctx, gens));
      }
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<Subgroup> non_hyperelliptic_extensions(const GroupContext& ctx) {
  if (ctx.n() % 2 != 0) {
    throw std::domain_error("non_hyperelliptic_extensions: n must be even");
  }
  std::vector<Subgroup> out;
  for (int p = 1; p <= ctx.n() + 1; ++p) {
    for (int q = p + 1; q <= ctx.n() + 1; ++q) {
      Subgroup k = pair_subgroup(ctx, p, q);
      for (int r : {p, q}) {
        std::vector<GroupElement> gens = k.basis();
        gens.push_back(make_element(ctx, {r}));
        out.push_back(Subgroup::span(ctx, gens));
      }
    }
  }
  return sorted_unique(std::move(out));
}

bool check_extension_span_equality(const Subgroup& u1, const Subgroup& u2, int r) {
  if (u1.context() != u2.context()) {
    throw std::domain_error("check_extension_span_equality: context mismatch");
  }
  const GroupContext& ctx = u1.context();
  auto om1 = omitted_pair_of(u1);
  auto om2 = omitted_pair_of(u2);
  if (!om1 || !om2) {
    throw std::domain_error("check_extension_span_equality: inputs must be of pair_subgroup form");
  }
  auto omits = [](const std::pair<int, int>& om, int idx) {
    return om.first == idx || om.second == idx;
  };
  if (!omits(*om1, r) || !omits(*om2, r)) {
    throw std::domain_error("check_extension_span_equality: r is contained in an included set");
  }
  GroupElement ar = make_element(ctx, {r});
  auto extend = [&](const Subgroup& u) {
    std::vector<GroupElement> gens = u.basis();
    gens.push_back(ar);
    return Subgroup::span(ctx, gens);
  };
  return extend(u1) == extend(u2);
}

}  // namespace humbert
