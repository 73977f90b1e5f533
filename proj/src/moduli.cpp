#include "humbert/moduli.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "humbert/errors.hpp"
#include "humbert/mobius.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace humbert {

ParameterTuple::ParameterTuple(int n, std::vector<mpq_class> lambdas)
    : n_(n), lambdas_(std::move(lambdas)) {
  if (n_ < 4) throw std::domain_error("ParameterTuple: n must be >= 4");
  if (static_cast<int>(lambdas_.size()) != n_ - 2) {
    throw std::domain_error("ParameterTuple: expected " + std::to_string(n_ - 2) +
                            " entries, got " + std::to_string(lambdas_.size()));
  }
  for (auto& l : lambdas_) {
    l.canonicalize();
    if (l == 0 || l == 1) {
      throw std::domain_error("ParameterTuple: entries must avoid {0,1}");
    }
  }
  for (size_t i = 0; i < lambdas_.size(); ++i) {
    for (size_t j = i + 1; j < lambdas_.size(); ++j) {
      if (lambdas_[i] == lambdas_[j]) {
        throw std::domain_error("ParameterTuple: entries must be distinct");
      }
    }
  }
}

std::string ParameterTuple::key() const {
  std::ostringstream os;
  for (size_t i = 0; i < lambdas_.size(); ++i) {
    if (i) os << ',';
    os << lambdas_[i].get_str();
  }
  return os.str();
}

char generator_label(ModuliGenerator g) {
  switch (g) {
    case ModuliGenerator::kT: return 't';
    case ModuliGenerator::kB: return 'b';
    case ModuliGenerator::kS: return 's';
    case ModuliGenerator::kC: return 'c';
  }
  return '?';
}

ModuliGenerator generator_from_label(char label) {
  switch (label) {
    case 't': return ModuliGenerator::kT;
    case 'b': return ModuliGenerator::kB;
    case 's': return ModuliGenerator::kS;
    case 'c': return ModuliGenerator::kC;
  }
  throw std::domain_error(std::string("unknown moduli generator: ") + label);
}

ParameterTuple apply_generator(ModuliGenerator g, const ParameterTuple& p) {
  const std::vector<mpq_class>& l = p.lambdas();
  const size_t m = l.size();
  std::vector<mpq_class> out;
  out.reserve(m);
  switch (g) {
    case ModuliGenerator::kT: {
      const mpq_class& v = l[m - 1];
      out.push_back(mpq_class(v / (v - 1)));
      for (size_t j = 0; j + 1 < m; ++j) out.push_back(mpq_class(v / (v - l[j])));
      break;
    }
    case ModuliGenerator::kB:
      for (const auto& x : l) out.push_back(mpq_class(1 / x));
      break;
    case ModuliGenerator::kC:
      out = l;
      std::swap(out[m - 2], out[m - 1]);
      break;
    case ModuliGenerator::kS: {
      if (p.n() == 4) {
        // lambda_{n-4} does not exist at n = 4; the action degenerates to
        // the (1 2 3)-cycle of branch positions, lambda -> 1/(1-lambda).
        for (const auto& x : l) out.push_back(mpq_class(1 / (1 - x)));
        break;
      }
      const mpq_class& v = l[m - 3];  // lambda_{n-4}
      out.push_back(mpq_class(v / (v - 1)));
      for (size_t j = 0; j + 3 < m; ++j) out.push_back(mpq_class(v / (v - l[j])));
      out.push_back(mpq_class(v / (v - l[m - 2])));
      out.push_back(mpq_class(v / (v - l[m - 1])));
      break;
    }
  }
  return ParameterTuple(p.n(), std::move(out));
}

ParameterTuple apply_branch_permutation(const ParameterTuple& p,
                                        const std::vector<int>& perm) {
  const int n = p.n();
  if (static_cast<int>(perm.size()) != n + 1) {
    throw std::domain_error("apply_branch_permutation: permutation size mismatch");
  }
  std::vector<ExtRat> branch;
  branch.push_back(ExtRat::infinity());
  branch.push_back(ExtRat(0));
  branch.push_back(ExtRat(1));
  for (const auto& x : p.lambdas()) branch.push_back(ExtRat(x));

  std::vector<ExtRat> permuted(n + 1, ExtRat(0));
  std::vector<bool> used(n + 2, false);
  for (int i = 0; i <= n; ++i) {
    int src = perm[i];
    if (src < 1 || src > n + 1 || used[src]) {
      throw std::domain_error("apply_branch_permutation: not a permutation");
    }
    used[src] = true;
    permuted[i] = branch[src - 1];
  }
  MobiusMap norm = triple_normalizer(permuted[0], permuted[1], permuted[2]);
  std::vector<mpq_class> out;
  for (int i = 3; i <= n; ++i) out.push_back(norm(permuted[i]).value());
  return ParameterTuple(n, std::move(out));
}

namespace {

std::vector<ParameterTuple> expand(const ParameterTuple& member,
                                   const std::vector<ModuliGenerator>& gens) {
  std::vector<ParameterTuple> out;
  out.reserve(gens.size());
  for (ModuliGenerator g : gens) out.push_back(apply_generator(g, member));
  return out;
}

Orbit close_orbit(const ParameterTuple& seed,
                  const std::vector<ModuliGenerator>& gens, size_t cap,
                  bool parallel) {
  std::set<std::string> seen = {seed.key()};
  std::vector<ParameterTuple> members = {seed};
  std::vector<ParameterTuple> frontier = {seed};
  while (!frontier.empty()) {
    std::vector<std::vector<ParameterTuple>> images(frontier.size());
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (size_t i = 0; i < frontier.size(); ++i) {
        images[i] = expand(frontier[i], gens);
      }
    } else {
      for (size_t i = 0; i < frontier.size(); ++i) {
        images[i] = expand(frontier[i], gens);
      }
    }
    std::vector<ParameterTuple> next;
    for (const auto& batch : images) {
      for (const auto& img : batch) {
        if (seen.insert(img.key()).second) {
          members.push_back(img);
          next.push_back(img);
          if (members.size() > cap) {
            throw CapacityError("orbit: size cap " + std::to_string(cap) +
                                " exceeded");
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(members.begin(), members.end());
  return Orbit{seed, gens, std::move(members)};
}

}  // namespace

Orbit orbit(const ParameterTuple& seed, const std::vector<ModuliGenerator>& gens,
            size_t cap) {
  return close_orbit(seed, gens, cap, /*parallel=*/true);
}

Orbit orbit_serial(const ParameterTuple& seed,
                   const std::vector<ModuliGenerator>& gens, size_t cap) {
  return close_orbit(seed, gens, cap, /*parallel=*/false);
}

bool are_equivalent(const ParameterTuple& p1, const ParameterTuple& p2) {
  if (p1.n() != p2.n()) {
    throw std::domain_error("are_equivalent: dimension mismatch");
  }
  Orbit o = orbit(p1, {ModuliGenerator::kT, ModuliGenerator::kB});
  return std::binary_search(o.members.begin(), o.members.end(), p2,
                            [](const ParameterTuple& a, const ParameterTuple& b) {
                              return a < b;
                            });
}

std::optional<std::vector<ModuliGenerator>> equivalence_witness(
    const ParameterTuple& p1, const ParameterTuple& p2) {
  if (p1.n() != p2.n()) {
    throw std::domain_error("equivalence_witness: dimension mismatch");
  }
  const std::vector<ModuliGenerator> gens = {ModuliGenerator::kT,
                                             ModuliGenerator::kB};
  // Serial BFS with parent tracking; the word is read off the parent chain.
  struct Node {
    int parent;
    ModuliGenerator via;
  };
  std::vector<ParameterTuple> members = {p1};
  std::vector<Node> nodes = {{-1, ModuliGenerator::kT}};
  std::map<std::string, int> seen = {{p1.key(), 0}};
  const std::string target = p2.key();
  if (p1.key() == target) return std::vector<ModuliGenerator>{};
  size_t head = 0;
  while (head < members.size()) {
    if (members.size() > kDefaultOrbitCap) {
      throw CapacityError("equivalence_witness: orbit cap exceeded");
    }
    ParameterTuple cur = members[head];
    for (ModuliGenerator g : gens) {
      ParameterTuple img = apply_generator(g, cur);
      std::string k = img.key();
      if (seen.count(k)) continue;
      seen[k] = static_cast<int>(members.size());
      members.push_back(img);
      nodes.push_back({static_cast<int>(head), g});
      if (k == target) {
        std::vector<ModuliGenerator> word;
        int at = static_cast<int>(members.size()) - 1;
        while (at != 0) {
          word.push_back(nodes[at].via);
          at = nodes[at].parent;
        }
        std::reverse(word.begin(), word.end());
        return word;
      }
    }
    ++head;
  }
  return std::nullopt;
}

namespace {

int partition_count(const ParameterTuple& p,
                    const std::vector<std::vector<int>>& stabilizer_perms) {
  Orbit full = orbit(p, {ModuliGenerator::kT, ModuliGenerator::kB});
  std::map<std::string, int> index;
  for (size_t i = 0; i < full.members.size(); ++i) {
    index[full.members[i].key()] = static_cast<int>(i);
  }
  std::vector<bool> visited(full.members.size(), false);
  int classes = 0;
  for (size_t i = 0; i < full.members.size(); ++i) {
    if (visited[i]) continue;
    ++classes;
    std::vector<int> stack = {static_cast<int>(i)};
    visited[i] = true;
    while (!stack.empty()) {
      int at = stack.back();
      stack.pop_back();
      for (const auto& perm : stabilizer_perms) {
        ParameterTuple img = apply_branch_permutation(full.members[at], perm);
        auto it = index.find(img.key());
        if (it == index.end()) {
          throw std::logic_error("stabilizer image escaped the orbit");
        }
        if (!visited[it->second]) {
          visited[it->second] = true;
          stack.push_back(it->second);
        }
      }
    }
  }
  return classes;
}

}  // namespace

int suborbit_count(const ParameterTuple& p) {
  const int n = p.n();
  // <s, b, c> as branch-position permutations: the (1..n-1)-cycle, (1 2),
  // and (n n+1).
  std::vector<int> s_perm(n + 1), b_perm(n + 1), c_perm(n + 1);
  for (int i = 0; i <= n; ++i) s_perm[i] = b_perm[i] = c_perm[i] = i + 1;
  s_perm[0] = n - 1;
  for (int i = 1; i <= n - 2; ++i) s_perm[i] = i;
  b_perm[0] = 2;
  b_perm[1] = 1;
  c_perm[n - 1] = n + 1;
  c_perm[n] = n;
  return partition_count(p, {s_perm, b_perm, c_perm});
}

int omitted_point_class_count(const ParameterTuple& p) {
  const int n = p.n();
  // Stabilizer of the last branch position: (1..n)-cycle and (1 2).
  std::vector<int> cyc(n + 1), b_perm(n + 1);
  for (int i = 0; i <= n; ++i) cyc[i] = b_perm[i] = i + 1;
  cyc[0] = n;
  for (int i = 1; i <= n - 1; ++i) cyc[i] = i;
  b_perm[0] = 2;
  b_perm[1] = 1;
  return partition_count(p, {cyc, b_perm});
}

nlohmann::json orbit_json(const Orbit& orbit) {
  nlohmann::json seed = nlohmann::json::array();
  for (const auto& x : orbit.seed.lambdas()) seed.push_back(rat_str(x));
  nlohmann::json gens = nlohmann::json::array();
  for (ModuliGenerator g : orbit.generators) {
    gens.push_back(std::string(1, generator_label(g)));
  }
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : orbit.members) {
    nlohmann::json entry = nlohmann::json::array();
    for (const auto& x : m.lambdas()) entry.push_back(rat_str(x));
    members.push_back(entry);
  }
  return nlohmann::json{{"seed", seed},
                        {"generators", gens},
                        {"size", orbit.members.size()},
                        {"members", members}};
}

}  // namespace humbert
