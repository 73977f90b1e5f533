#pragma once

#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "humbert/curve_model.hpp"
#include "humbert/equations.hpp"
#include "humbert/moduli.hpp"

namespace humbert {

enum class CheckStatus { kPass, kFail, kErratum };

struct CheckResult {
  std::string id;
  std::string statement;
  CheckStatus status;
  std::string witness;  // counterexample or supporting data
};

// Erratum entries document reference-catalog transcription mismatches that
// exact cover consistency resolves; they are reported but do not fail.
struct VerificationReport {
  std::string suite;
  int n = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  int fail_count() const;
  int erratum_count() const;
  void add(std::string id, std::string statement, bool ok, std::string witness = "");
  void add_erratum(std::string id, std::string statement, std::string witness);
  void print(std::ostream& os) const;
};

// Deterministic parameter tuples for the sweeps.
ParameterTuple seed_tuple(int n);                        // small primes
ParameterTuple random_tuple(int n, std::mt19937& rng);   // small random rationals

// First tuple of small distinct integers whose {t,b}-orbit is full
// (size (n+1)!); nullopt if none within the candidate budget.
std::optional<ParameterTuple> find_full_orbit_seed(int n);

// Printed reference forms of the n = 4 catalog, as functions of the two
// parameters. Pair family entries are the s-multisets of x^2 - s factors;
// entries 5, 8, 9 reproduce known transcription errors (see the erratum
// handling in the equations suite).
std::vector<std::vector<mpq_class>> printed_pair_family(const mpq_class& l1,
                                                        const mpq_class& l2);
// The corrected (cover-consistent) forms of the same ten curves.
std::vector<std::vector<mpq_class>> consistent_pair_family(const mpq_class& l1,
                                                           const mpq_class& l2);
// Indices (0-based) of the pair-family entries with transcription errors,
// with a short description each.
std::vector<std::pair<int, std::string>> pair_family_errata();

// The ten printed (a, b) parameter pairs of the genus-3 quartic family.
std::vector<std::pair<mpq_class, mpq_class>> printed_quartic_pairs(
    const mpq_class& l1, const mpq_class& l2);

// The five printed third roots of the genus-1 cubics y^2 = x(x-1)(x-r).
std::vector<mpq_class> printed_single_omission_roots(const mpq_class& l1,
                                                     const mpq_class& l2);

// Suites behind `verify`; all deterministic for fixed inputs.
VerificationReport verify_counts(int n);
VerificationReport verify_profiles(int n);
VerificationReport verify_equations(int n, int random_tuples = 5,
                                    unsigned rng_seed = 20260810);
VerificationReport verify_moduli(int n, unsigned rng_seed = 20260810);
VerificationReport verify_model(int n, const PrecisionContext& prec);

std::vector<VerificationReport> verify_suite(const std::string& suite, int n,
                                             const PrecisionContext& prec);

}  // namespace humbert
