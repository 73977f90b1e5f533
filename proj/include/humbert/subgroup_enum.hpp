#pragma once

#include <cstdint>
#include <vector>

#include "humbert/group.hpp"

namespace humbert {

// Exhaustive census of the freely-acting subgroups of H, by iteration over
// all reduced-row-echelon bases of rank-k subspaces of F2^n. The parallel
// kernel and the serial reference return identical, deterministically
// sorted lists (sorted by RREF rows).

inline constexpr int kMaxEnumerateN = 8;   // materializing sweep cap
inline constexpr int kMaxCountN = 10;      // counting-only sweep cap

// Number of rank-k subspaces of F2^n (Gaussian binomial); the sweep size.
uint64_t gaussian_binomial_2(int n, int k);

std::vector<Subgroup> enumerate_free_subgroups(const GroupContext& ctx, int rank);
std::vector<Subgroup> enumerate_free_subgroups_serial(const GroupContext& ctx,
                                                      int rank);

uint64_t count_free_subgroups(const GroupContext& ctx, int rank);
uint64_t count_free_subgroups_serial(const GroupContext& ctx, int rank);

// Independent counting route for the same census: inclusion-exclusion over
// the forbidden vectors (the standard generators) inside the subspace
// lattice. No sweep; pure Gaussian-binomial arithmetic.
uint64_t inclusion_exclusion_free_count(const GroupContext& ctx, int rank);

// The free subgroups whose quotient carries a hyperelliptic witness coset
// (an induced involution with 2g+2 fixed points). At rank n-2 these are
// exactly the pair-form subgroups, n(n+1)/2 of them; the raw free census is
// strictly larger for n >= 5.
std::vector<Subgroup> hyperelliptic_quotient_subgroups(const GroupContext& ctx,
                                                       int rank);

}  // namespace humbert
