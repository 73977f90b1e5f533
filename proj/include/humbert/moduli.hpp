#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "humbert/rational.hpp"

namespace humbert {

// A point of V_n: (lambda_1, ..., lambda_{n-2}), entries rational, outside
// {0, 1}, pairwise distinct.
class ParameterTuple {
 public:
  ParameterTuple(int n, std::vector<mpq_class> lambdas);

  int n() const { return n_; }
  const std::vector<mpq_class>& lambdas() const { return lambdas_; }
  std::string key() const;  // canonical "p/q,p/q" form

  bool operator==(const ParameterTuple& o) const {
    return n_ == o.n_ && lambdas_ == o.lambdas_;
  }
  bool operator<(const ParameterTuple& o) const { return lambdas_ < o.lambdas_; }

 private:
  int n_;
  std::vector<mpq_class> lambdas_;
};

enum class ModuliGenerator { kT, kB, kS, kC };

char generator_label(ModuliGenerator g);
ModuliGenerator generator_from_label(char label);

// The printed generator actions on V_n. t is the (n+1)-cycle of branch
// positions, b swaps inf and 0, s is the (n-1)-cycle fixing the last two
// positions, c swaps the last two.
ParameterTuple apply_generator(ModuliGenerator g, const ParameterTuple& p);

// Generic branch-position action: permute the branch list (perm[i] = 1-based
// old position feeding new position i+1), renormalize the first three values
// to (inf, 0, 1) and read off the new tuple. t, b, s, c are instances.
ParameterTuple apply_branch_permutation(const ParameterTuple& p,
                                        const std::vector<int>& perm);

struct Orbit {
  ParameterTuple seed;
  std::vector<ModuliGenerator> generators;
  std::vector<ParameterTuple> members;  // sorted lexicographically
};

inline constexpr size_t kDefaultOrbitCap = 1u << 20;

// Breadth-first closure of the seed under the generator set; deterministic
// member order independent of schedule. Cap exceeded -> capacity error.
Orbit orbit(const ParameterTuple& seed, const std::vector<ModuliGenerator>& gens,
            size_t cap = kDefaultOrbitCap);
Orbit orbit_serial(const ParameterTuple& seed,
                   const std::vector<ModuliGenerator>& gens,
                   size_t cap = kDefaultOrbitCap);

// Same {t,b}-orbit test (conformal equivalence of the underlying curves).
bool are_equivalent(const ParameterTuple& p1, const ParameterTuple& p2);

// Generator word w1..wk with wk(...(w1(p1))...) = p2 when equivalent.
std::optional<std::vector<ModuliGenerator>> equivalence_witness(
    const ParameterTuple& p1, const ParameterTuple& p2);

// Number of <s,b,c>-orbits partitioning the {t,b}-orbit; n(n+1)/2 when the
// seed has a full orbit.
int suborbit_count(const ParameterTuple& p);

// Partition of the {t,b}-orbit under the stabilizer of the last branch
// position (generated by b and the (1..n)-cycle); n+1 classes for full orbits.
int omitted_point_class_count(const ParameterTuple& p);

// {"seed": [...], "generators": [...], "size": k, "members": [...]}.
nlohmann::json orbit_json(const Orbit& orbit);

}  // namespace humbert
