#pragma once

#include <map>
#include <string>

#include <gmpxx.h>

#include "asai/errors.hpp"
#include "asai/padic.hpp"
#include "asai/roots.hpp"

namespace asai::lfactor {

/// The inverse polynomial 1/prod(1 - zX)^mult, stored as the multiset of its
/// roots z (all roots of unity) with multiplicities.  characteristic is 0 or
/// a prime ell; in characteristic ell every root order is coprime to ell.
/// An empty root map is the unit factor 1.
struct EulerFactor {
  mpz_class characteristic{0};
  std::map<RootOfUnity, mpz_class> roots;
};

bool operator==(const EulerFactor& f, const EulerFactor& g);
bool operator!=(const EulerFactor& f, const EulerFactor& g);

EulerFactor unit_factor(const mpz_class& characteristic = 0);

/// Canonical root multiset of 1/(1 - (cX)^N).  In characteristic 0 the N
/// roots c * zeta_N^j are distinct with multiplicity 1.  In characteristic
/// ell, writing N = N_r * ell^e with ell coprime to N_r, the N_r distinct
/// roots each carry multiplicity ell^e.
EulerFactor expand(const RootOfUnity& c, const mpz_class& N, const mpz_class& characteristic);

/// Multiplicity of the root z = 1; equals the pole order of f at X = 1.
mpz_class pole_order_at_one(const EulerFactor& f);

/// Sum of all root multiplicities (the degree of the inverse polynomial).
mpz_class total_multiplicity(const EulerFactor& f);

/// Coefficientwise reduction of a characteristic-0 factor to characteristic
/// ell: each root maps to its prime-to-ell part, colliding multiplicities
/// add.
EulerFactor reduce_mod_ell(const EulerFactor& f, const mpz_class& ell);

/// Inverse-polynomial divisibility: true iff every root multiplicity of f
/// is at most its multiplicity in g.  Both factors must share a
/// characteristic.
bool divides(const EulerFactor& f, const EulerFactor& g);

/// "1" for the unit, otherwise "1/(1 - z X)^m * ..." with roots ascending.
std::string to_string(const EulerFactor& f);

/// The Asai L-factor of the datum.  ell = 0 selects characteristic 0; a
/// prime ell (coprime to q_o) selects characteristic ell, where the factor
/// is the unit unless the datum is relatively banal.  Data that are not
/// distinguished up to an unramified twist always yield the unit factor.
EulerFactor asai_l_factor(const padic::CuspidalDatum& d, const mpz_class& ell);

/// Vanishing analysis of the canonical period pairing: the period is a unit
/// scalar times (1 - X^n)/(1 - X^{n/e_o}) evaluated where both vanish to the
/// recorded orders.  nonzero holds iff the scalar survives and the zero
/// orders match.
struct PeriodReport {
  bool nonzero = false;
  mpz_class numerator_zero_order{1};
  mpz_class denominator_zero_order{1};
  bool scalar_vanishes = false;
  unsigned long val_ell_qo_minus_1 = 0;
};

PeriodReport period_report(const padic::CuspidalDatum& d, const mpz_class& ell);

} // namespace asai::lfactor
