// Command-line front end: subgroup censuses, quotient equation emission,
// moduli orbits, conformal-equivalence tests, the n=4 catalog, and the
// compiled-in verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "humbert/catalog.hpp"
#include "humbert/curve_model.hpp"
#include "humbert/equations.hpp"
#include "humbert/errors.hpp"
#include "humbert/group.hpp"
#include "humbert/moduli.hpp"
#include "humbert/rational.hpp"
#include "humbert/subgroup_enum.hpp"
#include "humbert/verification.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  int n = 0;
  int rank = 0;
  std::string format = "text";
  std::string lambdas;
  std::vector<int> omit;
  int tower_b3 = 0;
  bool full_rank = false;
  std::string generators;
  std::string left, right;
  std::string suite = "all";
  long orbit_max = 0;
  bool witness_only = false;
};

int run_enumerate(const Options& opt) {
  humbert::GroupContext ctx(opt.n);
  auto census = opt.witness_only
                    ? humbert::hyperelliptic_quotient_subgroups(ctx, opt.rank)
                    : humbert::enumerate_free_subgroups(ctx, opt.rank);
  if (opt.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& k : census) {
      nlohmann::json basis = nlohmann::json::array();
      for (const auto& e : k.basis()) basis.push_back(e.str());
      out.push_back({{"rank", k.rank()}, {"basis", basis}});
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "n=" << opt.n << " rank=" << opt.rank
              << " free subgroups: " << census.size() << '\n';
    size_t i = 0;
    for (const auto& k : census) {
      std::cout << "  " << ++i << ": <";
      bool first = true;
      for (const auto& e : k.basis()) {
        if (!first) std::cout << ", ";
        std::cout << e.str();
        first = false;
      }
      std::cout << ">\n";
    }
  }
  return kExitPass;
}

int run_quotient(const Options& opt) {
  humbert::BranchSet branch(opt.n, humbert::parse_rational_csv(opt.lambdas));
  if (opt.tower_b3 != 0 && opt.omit.size() != 3) {
    throw std::domain_error("--tower-b3 requires --omit with three indices");
  }
  humbert::QuotientCurve curve = [&] {
    if (opt.full_rank) {
      if (!opt.omit.empty()) {
        throw std::domain_error("--full-rank excludes --omit");
      }
      return humbert::full_rank_quotient_curve(branch);
    }
    switch (opt.omit.size()) {
      case 1:
        return humbert::single_omission_curve(branch, opt.omit[0]);
      case 2:
        return humbert::pair_quotient_curve(branch, opt.omit[0], opt.omit[1]);
      case 3: {
        if (opt.tower_b3 != 0) {
          int r = opt.tower_b3;
          std::vector<int> pair;
          for (int v : opt.omit) {
            if (v != r) pair.push_back(v);
          }
          if (pair.size() != 2) {
            throw std::domain_error("--tower-b3 must name one of the --omit indices");
          }
          return humbert::tower_quartic_curve(branch, pair[0], pair[1], r);
        }
        return humbert::triple_quotient_curve(branch, opt.omit[0], opt.omit[1],
                                              opt.omit[2]);
      }
      default:
        throw std::domain_error(
            "choose one of: --omit i | --omit i,j | --omit i,j,k [--tower-b3 r] "
            "| --full-rank");
    }
  }();

  if (!humbert::verify_cover_consistency(curve)) {
    std::cerr << "self-check failed: emitted equation is not cover-consistent\n";
    return kExitFail;
  }
  if (opt.format == "json") {
    std::cout << humbert::equation_json(curve).dump(2) << '\n';
  } else {
    std::cout << curve.equation.render() << '\n';
  }
  return kExitPass;
}

int run_orbit(const Options& opt) {
  humbert::ParameterTuple p(opt.n, humbert::parse_rational_csv(opt.lambdas));
  std::vector<humbert::ModuliGenerator> gens;
  for (char c : opt.generators) gens.push_back(humbert::generator_from_label(c));
  size_t cap = opt.orbit_max > 0 ? static_cast<size_t>(opt.orbit_max)
                                 : humbert::kDefaultOrbitCap;
  humbert::Orbit o = humbert::orbit(p, gens, cap);
  std::cout << humbert::orbit_json(o).dump(2) << '\n';
  return kExitPass;
}

int run_equivalent(const Options& opt) {
  humbert::ParameterTuple left(opt.n, humbert::parse_rational_csv(opt.left));
  humbert::ParameterTuple right(opt.n, humbert::parse_rational_csv(opt.right));
  auto word = humbert::equivalence_witness(left, right);
  if (!word) {
    std::cout << "equivalent: false\n";
    return kExitFail;
  }
  std::cout << "equivalent: true\nwitness:";
  if (word->empty()) {
    std::cout << " (identity)";
  } else {
    for (auto g : *word) std::cout << ' ' << humbert::generator_label(g);
  }
  std::cout << "\n";
  return kExitPass;
}

int run_catalog(const Options& opt) {
  auto lambdas = humbert::parse_rational_csv(opt.lambdas);
  if (lambdas.size() != 2) {
    throw std::domain_error("catalog: exactly two lambdas (n = 4)");
  }
  std::cout << humbert::build_catalog(lambdas[0], lambdas[1]).dump(2) << '\n';
  return kExitPass;
}

int run_verify(const Options& opt) {
  humbert::PrecisionContext prec = humbert::PrecisionContext::from_environment();
  auto reports = humbert::verify_suite(opt.suite, opt.n, prec);
  bool ok = true;
  for (const auto& rep : reports) {
    rep.print(std::cout);
    ok = ok && rep.passed();
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Humbert curve quotients: censuses, equations, moduli"};
  app.require_subcommand(1);
  Options opt;

  auto* enumerate = app.add_subcommand("enumerate", "free-subgroup census");
  enumerate->add_option("--n", opt.n, "group type (n >= 4)")->required();
  enumerate->add_option("--rank", opt.rank, "subgroup rank")->required();
  enumerate->add_option("--format", opt.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  enumerate->add_flag("--witness-only", opt.witness_only,
                      "keep only subgroups whose quotient carries a "
                      "hyperelliptic witness coset");

  auto* quotient = app.add_subcommand("quotient", "emit a hyperelliptic quotient");
  quotient->add_option("--n", opt.n, "group type")->required();
  quotient->add_option("--lambdas", opt.lambdas, "comma-separated rationals")
      ->required();
  quotient->add_option("--omit", opt.omit, "1-3 branch indices (1-based)")
      ->delimiter(',');
  quotient->add_option("--tower-b3", opt.tower_b3,
                       "tower base point: one of the three --omit indices");
  quotient->add_flag("--full-rank", opt.full_rank, "maximal-rank family (n odd)");
  quotient->add_option("--format", opt.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* orbit_cmd = app.add_subcommand("orbit", "moduli orbit closure");
  orbit_cmd->add_option("--n", opt.n, "group type")->required();
  orbit_cmd->add_option("--lambdas", opt.lambdas, "seed tuple")->required();
  orbit_cmd->add_option("--generators", opt.generators, "tb|sbc")
      ->required()
      ->check(CLI::IsMember({"tb", "sbc"}));
  orbit_cmd->add_option("--max", opt.orbit_max, "orbit size cap");

  auto* equivalent = app.add_subcommand("equivalent", "conformal equivalence test");
  equivalent->add_option("--n", opt.n, "group type")->required();
  equivalent->add_option("--left", opt.left, "first tuple")->required();
  equivalent->add_option("--right", opt.right, "second tuple")->required();

  auto* catalog = app.add_subcommand("catalog", "full n=4 catalog as JSON");
  catalog->add_option("--lambdas", opt.lambdas, "two rationals")->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--n", opt.n, "group type")->required();
  verify->add_option("--suite", opt.suite,
                     "counts|profiles|equations|moduli|model|all")
      ->check(CLI::IsMember(
          {"counts", "profiles", "equations", "moduli", "model", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(enumerate)) return run_enumerate(opt);
    if (app.got_subcommand(quotient)) return run_quotient(opt);
    if (app.got_subcommand(orbit_cmd)) return run_orbit(opt);
    if (app.got_subcommand(equivalent)) return run_equivalent(opt);
    if (app.got_subcommand(catalog)) return run_catalog(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
  } catch (const humbert::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const humbert::PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
