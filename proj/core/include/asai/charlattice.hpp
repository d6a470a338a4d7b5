#pragma once

#include <vector>

#include <gmpxx.h>

#include "asai/errors.hpp"

namespace asai::charlattice {

/// Residue class mod M = q^n - 1 indexing a character of the degree-n
/// extension's multiplicative group relative to a fixed generator of the
/// character lattice.
using CharIndex = mpz_class;

enum class DualKind { GaloisPair, SelfDual };

enum class CaseTag { Coprime, PlusCase, MinusCase, EllTwo };

const char* to_string(CaseTag tag);
const char* to_string(DualKind kind);

/// Default ceiling on the modulus M for enumeration-based operations.
inline constexpr unsigned long kDefaultEnumerationBound = 1ul << 22;

/// A finite-level character universe: modulus M = q_base^n - 1, the
/// Frobenius multiplier acting on indices, and a duality multiplier whose
/// shape depends on the kind.
///
/// GaloisPair models a quadratic base extension: q_base = q_o^2 and duality
/// twists by the order-2 base automorphism.  SelfDual models plain
/// contragredient duality over the base field itself; its duality multiplier
/// exists only for n even or n = 1.
class FiniteSetting {
public:
  static FiniteSetting galois_pair(const mpz_class& q_o, unsigned long n);
  static FiniteSetting self_dual(const mpz_class& q, unsigned long n);

  DualKind kind() const { return kind_; }
  const mpz_class& q_base() const { return q_base_; }

  /// Order of the small field in a GaloisPair setting (q_base = q_o^2).
  const mpz_class& q_o() const;

  unsigned long n() const { return n_; }
  const mpz_class& modulus() const { return modulus_; }
  const mpz_class& frob_mult() const { return frob_mult_; }

  bool has_dual_mult() const { return has_dual_mult_; }

  /// Index multiplier of the dualizing involution, reduced mod M.
  /// Undefined (throws SettingError) for SelfDual with odd n > 1.
  const mpz_class& dual_mult() const;

  /// The un-reduced integer whose residue is dual_mult(): q_o^n for
  /// GaloisPair, q^{n/2} for SelfDual with n even, q for SelfDual with
  /// n = 1.  Case classification tests divisibility against this value.
  mpz_class dual_mult_lift() const;

  /// a mod M, normalized to [0, M).
  CharIndex reduce(const mpz_class& a) const;

private:
  FiniteSetting() = default;

  DualKind kind_ = DualKind::SelfDual;
  mpz_class q_base_;
  mpz_class q_o_;
  unsigned long n_ = 1;
  mpz_class modulus_;
  mpz_class frob_mult_;
  mpz_class dual_mult_;
  bool has_dual_mult_ = false;
};

/// Splitting data for M = M_r * ell^v with gcd(M_r, ell) = 1, together with
/// the CRT idempotents selecting each factor.
struct EllContext {
  mpz_class ell;
  unsigned long v = 0;
  mpz_class ell_pow;  // ell^v
  mpz_class m_r;      // M / ell^v
  mpz_class idem_r;   // 1 mod m_r, 0 mod ell^v
  mpz_class idem_s;   // 0 mod m_r, 1 mod ell^v
};

/// Builds the splitting context.  ell must be prime and coprime to q_base.
EllContext ell_context(const FiniteSetting& s, const mpz_class& ell);

/// a = a_r + a_s with ord(a_r) | M_r and ord(a_s) | ell^v.
struct Decomposition {
  CharIndex a_r;
  CharIndex a_s;
};

Decomposition ell_decompose(const FiniteSetting& s, const EllContext& ctx, const CharIndex& a);

/// {a * frob^k : 0 <= k < n}, deduplicated, ascending.
std::vector<CharIndex> frobenius_orbit(const FiniteSetting& s, const CharIndex& a);

/// True iff the Frobenius orbit of a has full size n.
bool is_regular(const FiniteSetting& s, const CharIndex& a);

/// Duality test at the integral level: does some Galois translate of the
/// dualizing involution send a to -a?  For GaloisPair the involution ranges
/// over the odd-power coset q_o * frob^k; for SelfDual over dual_mult *
/// frob^k.  Throws SettingError when the setting has no duality; throws
/// DualityViolation if the odd-degree closed form disagrees with the scan on
/// a regular input (a build-integrity cross-check).
bool is_dual_selfdual_adic(const FiniteSetting& s, const CharIndex& a);

/// Duality test after reduction mod ell: the test above applied to the
/// prime-to-ell component a_r.  Uses the closed form
/// (dual_mult + 1) * a_r == 0 in the GaloisPair odd-n odd-ell regime where
/// it is equivalent.
bool is_dual_selfdual_modell(const FiniteSetting& s, const EllContext& ctx, const CharIndex& a);

struct SubgroupFlags {
  bool in_plus = false;   // (dual_mult - 1) * a == 0
  bool in_minus = false;  // (dual_mult + 1) * a == 0
  bool in_s = false;      // ell^v * a == 0 (the ell-part)
  bool in_r = false;      // M_r * a == 0 (the prime-to-ell part)
};

SubgroupFlags subgroup_membership(const FiniteSetting& s, const EllContext& ctx, const CharIndex& a);

/// Index of the unique order-2 character: M/2.
CharIndex quadratic_character(const FiniteSetting& s);

/// Lift data for the mod-ell reduction of the character indexed by a.
///
/// Lift parameters are the ell_pow translates a_r + mu with mu ranging over
/// the ell-part subgroup; total/dual_count count parameters (dual_count those
/// whose translate passes the integral duality test).  Distinct parameters
/// can land in one Frobenius orbit and non-regular translates occur, so the
/// class_* fields separately count orbits among regular translates;
/// representatives holds the minimal index of each such orbit, ascending.
struct LiftClass {
  std::vector<CharIndex> representatives;
  mpz_class total;
  mpz_class dual_count;
  mpz_class class_total;
  mpz_class class_dual;
  CaseTag case_tag = CaseTag::Coprime;
};

/// Enumerates the lift parameters of a's mod-ell reduction.  Requires a
/// regular (NonRegularInput) and M <= bound (ModulusTooLarge).
LiftClass enumerate_lifts(const FiniteSetting& s, const EllContext& ctx, const CharIndex& a,
                          unsigned long bound = kDefaultEnumerationBound);

/// EllTwo if ell = 2; Coprime if ell does not divide M; otherwise PlusCase
/// or MinusCase according to whether ell divides dual_mult_lift() - 1 or
/// dual_mult_lift() + 1 (exclusive and exhaustive for odd ell dividing M).
CaseTag classify_case(const FiniteSetting& s, const EllContext& ctx);

/// Number of duality-stable lifts without enumeration where a closed form
/// exists: 1 for Coprime; 1 or 0 for PlusCase according to
/// supercuspidal_reduction; for MinusCase, ell^v with supercuspidal
/// reduction and 0 when (dual_mult + 1) * a_r != 0 mod M, i.e. when the
/// reduction is dual only through a proper Frobenius twist (possible only
/// for a SelfDual setting of even degree with non-regular a_r, e.g. q=3,
/// n=4, ell=5, a=4).  The remaining branches (involutive MinusCase without
/// supercuspidal reduction, EllTwo) fall back to enumeration and
/// cross-check internal identities.  The PlusCase and MinusCase forms hold
/// only for a GaloisPair of odd degree or a SelfDual setting; a GaloisPair
/// of even degree refuses them with SettingError (its lift classes
/// genuinely mix dual and non-dual orbits, e.g. q_o=3, n=2, ell=5, a=4).
/// Requires a to pass the mod-ell duality test (DualityViolation) and
/// supercuspidal_reduction to equal is_regular(s, a_r) (DatumError).
mpz_class closed_form_dual_lift_count(const FiniteSetting& s, const EllContext& ctx,
                                      const CharIndex& a, bool supercuspidal_reduction,
                                      unsigned long bound = kDefaultEnumerationBound);

} // namespace asai::charlattice
