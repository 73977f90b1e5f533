#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace humbert {

// The group H of a generalized Humbert curve of type n: H ~ Z2^n, presented
// on n+1 standard generators a1..a_{n+1} with a1 a2 ... a_{n+1} = 1. Elements
// are subsets of {1..n+1} modulo complementation; the canonical subset is the
// one of smaller weight (tie, only for n odd: the one excluding index n+1).
class GroupContext {
 public:
  explicit GroupContext(int n);

  int n() const { return n_; }
  int generator_count() const { return n_ + 1; }
  long group_order() const { return 1L << n_; }
  // g_n = 1 - 2^n + (n+1) 2^{n-2}, always >= 5 for n >= 4.
  long ambient_genus() const;

  bool operator==(const GroupContext& o) const { return n_ == o.n_; }
  bool operator!=(const GroupContext& o) const { return n_ != o.n_; }

  static constexpr int kMaxN = 20;

 private:
  int n_;
};

class GroupElement {
 public:
  // Canonical representative of the product of a_j over the index set.
  GroupElement(const GroupContext& ctx, uint32_t raw_mask);

  static GroupElement identity(const GroupContext& ctx);

  int n() const { return n_; }
  uint32_t mask() const { return mask_; }        // canonical, bit j-1 = index j
  int weight() const;
  bool is_identity() const { return mask_ == 0; }

  // Coordinate in F2^n: the unique coset representative excluding index n+1.
  // Linear in the group law; all subspace algebra runs here.
  uint32_t vec() const;

  std::vector<int> indices() const;              // sorted, 1-based
  std::string str() const;                       // "a1*a3", identity "1"

  bool operator==(const GroupElement& o) const {
    return n_ == o.n_ && mask_ == o.mask_;
  }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }

 private:
  int n_;
  uint32_t mask_;
};

// Product of the listed standard generators (indices in 1..n+1, no repeats).
GroupElement make_element(const GroupContext& ctx, const std::vector<int>& indices);

// Element from its F2^n coordinate.
GroupElement element_from_vec(const GroupContext& ctx, uint32_t vec);

// Symmetric difference followed by canonicalization; every element is an
// involution. Mismatched contexts -> domain error.
GroupElement multiply(const GroupElement& e1, const GroupElement& e2);

// True iff e is one of the standard generators (the only elements with fixed
// points on the curve). Identity input -> domain error.
bool has_fixed_points(const GroupElement& e);

// weight-then-lexicographic order on canonical masks; "lexicographic" is
// dictionary order on the sorted index sequence (a1*a4 < a2*a3).
bool weight_lex_less(const GroupElement& a, const GroupElement& b);

// A GF(2) subspace of H, stored as the reduced row echelon basis of the
// F2^n coordinates (pivots strictly increasing, each pivot confined to its
// own row). Equality of subgroups is equality of the RREF.
class Subgroup {
 public:
  static Subgroup span(const GroupContext& ctx,
                       const std::vector<GroupElement>& generators);
  static Subgroup from_rows(const GroupContext& ctx,
                            std::vector<uint32_t> rref_rows);

  const GroupContext& context() const { return ctx_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<uint32_t>& rows() const { return rows_; }

  std::vector<GroupElement> basis() const;
  bool contains(const GroupElement& e) const;
  // Residue of v after eliminating all pivots; canonical coset key.
  uint32_t reduce_vec(uint32_t v) const;

  // All 2^rank elements, sorted weight-then-lex.
  std::vector<GroupElement> elements() const;

  // No nonidentity member is a standard generator.
  bool acts_freely() const;

  bool operator==(const Subgroup& o) const {
    return ctx_ == o.ctx_ && rows_ == o.rows_;
  }
  bool operator!=(const Subgroup& o) const { return !(*this == o); }
  bool operator<(const Subgroup& o) const { return rows_ < o.rows_; }

 private:
  Subgroup(const GroupContext& ctx, std::vector<uint32_t> rows)
      : ctx_(ctx), rows_(std::move(rows)) {}

  GroupContext ctx_;
  std::vector<uint32_t> rows_;
};

class Coset {
 public:
  // Coset e*K; representative is the weight-then-lex minimum of the coset.
  Coset(const Subgroup& subgroup, const GroupElement& e);

  const Subgroup& subgroup() const { return subgroup_; }
  const GroupElement& representative() const { return rep_; }
  std::vector<GroupElement> members() const;

  bool operator==(const Coset& o) const {
    return subgroup_ == o.subgroup_ && rep_ == o.rep_;
  }

 private:
  Subgroup subgroup_;
  GroupElement rep_;
};

struct ProfileRow {
  Coset coset;
  int generator_count;   // standard generators lying in the coset
  long fixed_points;     // generator_count * 2^{n-1-rank}
};

// Fixed-point bookkeeping of H/K acting on S/K, for K acting freely.
struct QuotientProfile {
  Subgroup subgroup;
  long quotient_genus;                     // 1 + (g_n - 1) / 2^rank
  std::vector<ProfileRow> rows;            // identity coset first, then by rep
  std::optional<Coset> hyperelliptic_witness;  // fixed_points == 2g+2
};

QuotientProfile quotient_profile(const Subgroup& k);

// Admissible ranks m with S/L hyperelliptic for L ~ Z2^m acting freely:
// {n-3, n-2} for n even, {n-3, n-2, n-1} for n odd.
std::vector<int> hyperelliptic_rank_bound(const GroupContext& ctx);

// The rank-(n-2) subgroup of even-weight products over all indices except
// {p, q}. Acts freely; in bijection with the rank-(n-2) free census.
Subgroup pair_subgroup(const GroupContext& ctx, int p, int q);

// Included index set when k is of pair_subgroup form, else nullopt.
std::optional<std::pair<int, int>> omitted_pair_of(const Subgroup& k);

// All rank-(n-1) subgroups <pair_subgroup({p,q}), a_j> with j outside {p,q};
// n even only. Exactly n(n+1)/2, one per omitted pair.
std::vector<Subgroup> hyperelliptic_extensions(const GroupContext& ctx);

// All rank-(n-1) subgroups <pair_subgroup({p,q}), a_p>; n even only.
// Exactly n+1, determined by the adjoined index alone.
std::vector<Subgroup> non_hyperelliptic_extensions(const GroupContext& ctx);

// Span equality <U1, a_r> == <U2, a_r> for pair-form U1, U2 with r omitted
// from both. Domain error if either input is not pair-form or r is included.
bool check_extension_span_equality(const Subgroup& u1, const Subgroup& u2, int r);

}  // namespace humbert
