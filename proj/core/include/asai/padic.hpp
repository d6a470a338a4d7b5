#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "asai/charlattice.hpp"
#include "asai/errors.hpp"
#include "asai/roots.hpp"

namespace asai::padic {

enum class Distinction {
  Distinguished,
  TwistOfDistinguished,
  NotDistinguishedUpToUnramifiedTwist,
};

/// Parametrizing data of a p-adic cuspidal representation: residue field
/// size q_o of the base field, degree n, ramification of the quadratic
/// extension F/F_o, the parameter field invariants e(E/F), f(E/F), the
/// ramification e_sigma of E over its involution-fixed subfield, and the
/// caller-supplied distinction status (with the unramified twist value when
/// distinction holds only after twisting).
struct CuspidalDatum {
  mpz_class q_o{3};
  unsigned long n = 1;
  unsigned long e_ffo = 1;
  unsigned long e_ef = 1;
  unsigned long f_ef = 1;
  unsigned long e_sigma = 1;
  bool supercuspidal = false;
  Distinction distinction = Distinction::Distinguished;
  lfactor::RootOfUnity twist{};

  unsigned long d() const { return e_ef * f_ef; }

  /// n / (e_ef * f_ef); throws DatumError when not divisible.
  unsigned long m() const;

  bool distinguished_up_to_twist() const {
    return distinction != Distinction::NotDistinguishedUpToUnramifiedTwist;
  }
};

struct Violation {
  std::string rule;
  std::string message;
};

/// Checks every structural constraint; returns the violated rules (empty
/// means valid).  When ell is supplied, additionally rejects a datum marked
/// Distinguished whose invariants contradict distinction at that ell.
std::vector<Violation> validate(const CuspidalDatum& d,
                                const std::optional<mpz_class>& ell = std::nullopt);

/// Throws DatumError listing the violations if d is structurally invalid.
void require_valid(const CuspidalDatum& d);

/// e(E_o/F_o), doubled when e_sigma = 2 and m != 1.  Divides n.
unsigned long e_o(const CuspidalDatum& d);

/// Residue field size of E_o: q_o^{f_ef * e_sigma / e_ffo}.  Asserts the
/// comparison identities tying q_Eo powers to q_o^{n/e_o}.
mpz_class q_Eo(const CuspidalDatum& d);

/// q_o^{n/e_o} != 1 mod ell.  Defined for distinguished-up-to-twist data
/// only (NotDistinguishedInput otherwise); ell must be a prime not
/// dividing q_o.
bool is_relatively_banal(const CuspidalDatum& d, const mpz_class& ell);

/// q^{n/e_ef} != 1 mod ell with q = q_o^{2/e_ffo} the residue field size
/// of F.
bool is_banal(const CuspidalDatum& d, const mpz_class& ell);

/// Orders of the group of unramified-twist distinctions: N = n/e_o in
/// characteristic 0; its prime-to-ell part and the ell-power kernel after
/// reduction.
struct XoOrders {
  unsigned long char0 = 1;
  unsigned long mod_ell = 1;
  unsigned long kernel = 1;
};

XoOrders x_o_orders(const CuspidalDatum& d, const std::optional<mpz_class>& ell);

/// Finite-level shadow of the datum: a character universe over the residue
/// field of E_o, of degree m.
struct FiniteLevel {
  charlattice::FiniteSetting setting;
  unsigned long m = 1;
};

FiniteLevel finite_level(const CuspidalDatum& d, const mpz_class& ell);

/// True iff the finite-level case classification lands in a branch where
/// every lift is an unramified twist of a distinguished representation.
/// Asserts agreement with is_relatively_banal (CrossCheckError on
/// disagreement).
bool all_lifts_unramified_twist_distinguished(const CuspidalDatum& d, const mpz_class& ell);

} // namespace asai::padic
