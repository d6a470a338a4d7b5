#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "asai/charlattice.hpp"

namespace asai::oracle {

/// Knobs for the verification suite.  mutate deliberately corrupts one
/// library value per check kind so the harness can prove it detects
/// regressions.
struct OracleConfig {
  unsigned long max_modulus = 1ul << 22;
  unsigned long threads = 1;
  unsigned long euler_bound = 24;
  std::vector<unsigned long> euler_primes{2, 3, 5, 7, 13};
  bool mutate = false;
};

struct OracleFailure {
  std::string input;
  std::string expected;
  std::string actual;
  std::string rule;
};

/// Outcome of one or more verification passes.  witness_count counts the
/// positive instances a scan is allowed to find (with witness the first
/// one); failures are genuine disagreements.
struct OracleReport {
  unsigned long checked = 0;
  unsigned long skipped = 0;
  unsigned long witness_count = 0;
  std::string witness;
  std::vector<OracleFailure> failures;

  bool pass() const { return failures.empty(); }
  void merge(const OracleReport& other);
};

/// Exhaustive duality scan over all indices: compares the library duality
/// test against a from-scratch scan wherever the library defines one, and
/// asserts that no regular dual index exists when the degree parity rules
/// one out.  When parity allows dual indices, they are tallied as witnesses.
OracleReport verify_parity(const charlattice::FiniteSetting& s, const OracleConfig& cfg = {});

/// For every index: compares the library mod-ell duality test against a
/// from-scratch route.  For every regular index passing it, recounts the
/// lift census and orbit classes by brute force and compares every field of
/// enumerate_lifts, the case classification, and the closed-form dual lift
/// count; for ell = 2 additionally asserts both counts are strictly partial
/// in the covered parities.
OracleReport verify_lift_counts(const charlattice::FiniteSetting& s, const mpz_class& ell,
                                const OracleConfig& cfg = {});

/// Exhaustively recounts the duality subgroups: orders of the plus/minus
/// subgroups against their gcd closed forms, their intersection against
/// {0, M/2}, the ell-part inclusion dictated by the case sign, and every
/// membership flag of subgroup_membership.
OracleReport verify_subgroup_lattice(const charlattice::FiniteSetting& s, const mpz_class& ell,
                                     const OracleConfig& cfg = {});

/// Replays expand / reduce_mod_ell / divides inside explicit cyclic group
/// rings F_p[y]/(y^L - 1): roots of unity become powers of y, the claimed
/// root multisets are multiplied out densely, and products are compared
/// coefficientwise modulo the L-th cyclotomic polynomial against direct
/// expansions, independent reductions, and polynomial long division.
OracleReport verify_euler_arithmetic(const OracleConfig& cfg = {});

/// The full battery over the standard setting grid (skipping settings whose
/// modulus exceeds cfg.max_modulus) plus the Euler arithmetic pass.
OracleReport run_full_suite(const OracleConfig& cfg = {});

} // namespace asai::oracle
