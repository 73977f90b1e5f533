#include "humbert/subgroup_enum.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "humbert/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace humbert {

namespace {

constexpr int kMaxRank = GroupContext::kMaxN;

// One pivot-column choice of the sweep. Row i of every matrix in the block
// is e_{pivot[i]} plus an assignment of its free columns (columns above the
// pivot that are not pivots themselves).
struct SweepPlan {
  std::vector<int> pivots;
  std::vector<std::vector<int>> freepos;
  int free_bits = 0;
};

std::vector<SweepPlan> make_plans(int n, int k) {
  std::vector<SweepPlan> plans;
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  while (true) {
    SweepPlan plan;
    plan.pivots = comb;
    uint32_t pivot_mask = 0;
    for (int c : comb) pivot_mask |= 1u << c;
    plan.freepos.resize(k);
    for (int i = 0; i < k; ++i) {
      for (int c = comb[i] + 1; c < n; ++c) {
        if (!(pivot_mask & (1u << c))) plan.freepos[i].push_back(c);
      }
      plan.free_bits += static_cast<int>(plan.freepos[i].size());
    }
    plans.push_back(std::move(plan));
    // next k-combination of {0..n-1}
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return plans;
}

void decode(const SweepPlan& plan, uint64_t assignment, uint32_t* rows) {
  int cursor = 0;
  for (size_t i = 0; i < plan.pivots.size(); ++i) {
    uint32_t row = 1u << plan.pivots[i];
    for (int c : plan.freepos[i]) {
      if ((assignment >> cursor) & 1u) row |= 1u << c;
      ++cursor;
    }
    rows[i] = row;
  }
}

// Free action: no row is a bare pivot (the subgroup would contain a
// standard generator), and the all-ones vector (a_{n+1}) is not in the span.
bool rows_free(const SweepPlan& plan, const uint32_t* rows, uint32_t all_ones) {
  const int k = static_cast<int>(plan.pivots.size());
  for (int i = 0; i < k; ++i) {
    if (rows[i] == (1u << plan.pivots[i])) return false;
  }
  uint32_t acc = all_ones;
  for (int i = 0; i < k; ++i) {
    if (acc & (1u << plan.pivots[i])) acc ^= rows[i];
  }
  return acc != 0;
}

void validate(const GroupContext& ctx, int rank, int cap, const char* what) {
  if (rank < 1 || rank > ctx.n()) {
    throw std::domain_error(std::string(what) + ": rank " + std::to_string(rank) +
                            " out of range 1.." + std::to_string(ctx.n()));
  }
  if (ctx.n() > cap) {
    throw CapacityError(std::string(what) + ": exhaustive sweep capped at n <= " +
                        std::to_string(cap) + " (requested n = " +
                        std::to_string(ctx.n()) + ")");
  }
}

std::vector<Subgroup> sort_result(const GroupContext& ctx,
                                  std::vector<std::vector<uint32_t>> rowsets) {
  std::sort(rowsets.begin(), rowsets.end());
  std::vector<Subgroup> out;
  out.reserve(rowsets.size());
  for (auto& rows : rowsets) out.push_back(Subgroup::from_rows(ctx, std::move(rows)));
  return out;
}

}  // namespace

uint64_t gaussian_binomial_2(int n, int k) {
  if (k < 0 || k > n) return 0;
  // prod_{i=0}^{k-1} (2^{n-i} - 1) / (2^{k-i} - 1), assembled as an exact
  // integer by interleaving multiplication and division.
  unsigned long long num = 1;
  for (int i = 0; i < k; ++i) num *= (1ull << (n - i)) - 1;
  for (int i = 0; i < k; ++i) num /= (1ull << (k - i)) - 1;
  return num;
}

std::vector<Subgroup> enumerate_free_subgroups_serial(const GroupContext& ctx,
                                                      int rank) {
  validate(ctx, rank, kMaxEnumerateN, "enumerate_free_subgroups");
  const uint32_t all_ones = (1u << ctx.n()) - 1u;
  std::vector<std::vector<uint32_t>> found;
  uint32_t rows[kMaxRank];
  for (const SweepPlan& plan : make_plans(ctx.n(), rank)) {
    const uint64_t total = 1ull << plan.free_bits;
    for (uint64_t a = 0; a < total; ++a) {
      decode(plan, a, rows);
      if (rows_free(plan, rows, all_ones)) {
        found.emplace_back(rows, rows + rank);
      }
    }
  }
  return sort_result(ctx, std::move(found));
}

std::vector<Subgroup> enumerate_free_subgroups(const GroupContext& ctx, int rank) {
  validate(ctx, rank, kMaxEnumerateN, "enumerate_free_subgroups");
  const uint32_t all_ones = (1u << ctx.n()) - 1u;
  const std::vector<SweepPlan> plans = make_plans(ctx.n(), rank);
  std::vector<std::vector<std::vector<uint32_t>>> local(plans.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (size_t pi = 0; pi < plans.size(); ++pi) {
    const SweepPlan& plan = plans[pi];
    uint32_t rows[kMaxRank];
    const uint64_t total = 1ull << plan.free_bits;
    for (uint64_t a = 0; a < total; ++a) {
      decode(plan, a, rows);
      if (rows_free(plan, rows, all_ones)) {
        local[pi].emplace_back(rows, rows + rank);
      }
    }
  }
  std::vector<std::vector<uint32_t>> found;
  for (auto& bucket : local) {
    found.insert(found.end(), std::make_move_iterator(bucket.begin()),
                 std::make_move_iterator(bucket.end()));
  }
  return sort_result(ctx, std::move(found));
}

uint64_t count_free_subgroups_serial(const GroupContext& ctx, int rank) {
  validate(ctx, rank, kMaxCountN, "count_free_subgroups");
  const uint32_t all_ones = (1u << ctx.n()) - 1u;
  uint64_t count = 0;
  uint32_t rows[kMaxRank];
  for (const SweepPlan& plan : make_plans(ctx.n(), rank)) {
    const uint64_t total = 1ull << plan.free_bits;
    for (uint64_t a = 0; a < total; ++a) {
      decode(plan, a, rows);
      if (rows_free(plan, rows, all_ones)) ++count;
    }
  }
  return count;
}

uint64_t inclusion_exclusion_free_count(const GroupContext& ctx, int rank) {
  const int n = ctx.n();
  if (rank < 1 || rank > n) {
    throw std::domain_error("inclusion_exclusion_free_count: rank out of range");
  }
  // Forbidden vectors: the standard generators e_1..e_n and all-ones.
  std::vector<uint32_t> forbidden;
  for (int j = 0; j < n; ++j) forbidden.push_back(1u << j);
  forbidden.push_back((1u << n) - 1u);

  long long nonfree = 0;
  const uint32_t m = static_cast<uint32_t>(forbidden.size());
  for (uint32_t s = 1; s < (1u << m); ++s) {
    // dim of the span of the chosen forbidden vectors
    uint32_t rows[GroupContext::kMaxN + 1];
    int dim = 0;
    for (uint32_t i = 0; i < m; ++i) {
      if (!((s >> i) & 1u)) continue;
      uint32_t v = forbidden[i];
      for (int r = 0; r < dim; ++r) {
        uint32_t pivot = rows[r] & (~rows[r] + 1u);
        if (v & pivot) v ^= rows[r];
      }
      if (v != 0) rows[dim++] = v;
    }
    if (dim > rank) continue;
    uint64_t count = gaussian_binomial_2(n - dim, rank - dim);
    nonfree += (std::popcount(s) % 2 == 1) ? static_cast<long long>(count)
                                           : -static_cast<long long>(count);
  }
  return gaussian_binomial_2(n, rank) - static_cast<uint64_t>(nonfree);
}

std::vector<Subgroup> hyperelliptic_quotient_subgroups(const GroupContext& ctx,
                                                       int rank) {
  std::vector<Subgroup> out;
  for (const auto& k : enumerate_free_subgroups(ctx, rank)) {
    if (quotient_profile(k).hyperelliptic_witness) out.push_back(k);
  }
  return out;
}

uint64_t count_free_subgroups(const GroupContext& ctx, int rank) {
  validate(ctx, rank, kMaxCountN, "count_free_subgroups");
  const uint32_t all_ones = (1u << ctx.n()) - 1u;
  const std::vector<SweepPlan> plans = make_plans(ctx.n(), rank);
  // Chunk large plans so two threads stay busy on skewed free-bit counts.
  constexpr uint64_t kBlock = 1ull << 20;
  struct Task {
    const SweepPlan* plan;
    uint64_t begin, end;
  };
  std::vector<Task> tasks;
  for (const SweepPlan& plan : plans) {
    const uint64_t total = 1ull << plan.free_bits;
    for (uint64_t b = 0; b < total; b += kBlock) {
      tasks.push_back(Task{&plan, b, std::min(total, b + kBlock)});
    }
  }
  uint64_t count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
#endif
  for (size_t t = 0; t < tasks.size(); ++t) {
    uint32_t rows[kMaxRank];
    const SweepPlan& plan = *tasks[t].plan;
    for (uint64_t a = tasks[t].begin; a < tasks[t].end; ++a) {
      decode(plan, a, rows);
      if (rows_free(plan, rows, all_ones)) ++count;
    }
  }
  return count;
}

}  // namespace humbert
