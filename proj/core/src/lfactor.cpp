#include "asai/lfactor.hpp"

#include <sstream>

#include "asai/arith.hpp"

namespace asai::lfactor {

RootOfUnity::RootOfUnity(const mpz_class& order, const mpz_class& exponent) {
  if (order < 1) throw DatumError("a root of unity needs a positive order");
  mpz_class e = arith::mod_floor(exponent, order);
  if (e == 0) return;
  mpz_class g = gcd(e, order);
  order_ = order / g;
  exponent_ = e / g;
}

bool operator==(const RootOfUnity& x, const RootOfUnity& y) {
  return x.order() == y.order() && x.exponent() == y.exponent();
}

bool operator!=(const RootOfUnity& x, const RootOfUnity& y) { return !(x == y); }

bool operator<(const RootOfUnity& x, const RootOfUnity& y) {
  if (x.order() != y.order()) return x.order() < y.order();
  return x.exponent() < y.exponent();
}

RootOfUnity multiply(const RootOfUnity& x, const RootOfUnity& y) {
  mpz_class l = lcm(x.order(), y.order());
  return RootOfUnity(l, x.exponent() * (l / x.order()) + y.exponent() * (l / y.order()));
}

RootOfUnity power(const RootOfUnity& x, const mpz_class& k) {
  return RootOfUnity(x.order(), x.exponent() * k);
}

RootOfUnity inverse(const RootOfUnity& x) {
  return RootOfUnity(x.order(), -x.exponent());
}

RootOfUnity prime_to_ell_part(const RootOfUnity& x, const mpz_class& ell) {
  if (ell < 2 || !arith::is_probable_prime(ell))
    throw BadCharacteristic("a positive characteristic must be prime");
  auto [t, d_r] = arith::val_and_strip(x.order(), ell);
  if (t == 0) return x;
  if (d_r == 1) return RootOfUnity();
  mpz_class u = *arith::inv_mod(arith::pow_ui(ell, t), d_r);
  return RootOfUnity(d_r, x.exponent() * u);
}

std::string to_string(const RootOfUnity& x) {
  if (x.is_identity()) return "1";
  std::ostringstream out;
  out << "zeta(" << x.order() << "," << x.exponent() << ")";
  return out.str();
}

namespace {

void check_characteristic(const mpz_class& characteristic) {
  if (characteristic == 0) return;
  if (characteristic < 2 || !arith::is_probable_prime(characteristic))
    throw BadCharacteristic("characteristic must be 0 or a prime");
}

} // namespace

bool operator==(const EulerFactor& f, const EulerFactor& g) {
  return f.characteristic == g.characteristic && f.roots == g.roots;
}

bool operator!=(const EulerFactor& f, const EulerFactor& g) { return !(f == g); }

EulerFactor unit_factor(const mpz_class& characteristic) {
  check_characteristic(characteristic);
  return EulerFactor{characteristic, {}};
}

EulerFactor expand(const RootOfUnity& c, const mpz_class& N, const mpz_class& characteristic) {
  check_characteristic(characteristic);
  if (N < 1) throw DatumError("expansion degree must be positive");
  if (characteristic != 0 && c.order() % characteristic == 0)
    throw BadCharacteristic("the twist order is divisible by the characteristic");

  mpz_class n_r = N;
  mpz_class mult = 1;
  if (characteristic != 0) {
    auto [e, stripped] = arith::val_and_strip(N, characteristic);
    n_r = stripped;
    mult = arith::pow_ui(characteristic, e);
  }

  EulerFactor f{characteristic, {}};
  mpz_class l = lcm(c.order(), n_r);
  mpz_class base = c.exponent() * (l / c.order());
  mpz_class step = l / n_r;
  unsigned long count = arith::to_ulong(n_r);
  for (unsigned long j = 0; j < count; ++j)
    f.roots[RootOfUnity(l, base + mpz_class(j) * step)] += mult;
  return f;
}

mpz_class pole_order_at_one(const EulerFactor& f) {
  auto it = f.roots.find(RootOfUnity());
  return it == f.roots.end() ? mpz_class(0) : it->second;
}

mpz_class total_multiplicity(const EulerFactor& f) {
  mpz_class total = 0;
  for (const auto& [root, mult] : f.roots) total += mult;
  return total;
}

EulerFactor reduce_mod_ell(const EulerFactor& f, const mpz_class& ell) {
  if (f.characteristic != 0)
    throw CharacteristicMismatch("only characteristic-0 factors can be reduced");
  if (ell < 2 || !arith::is_probable_prime(ell))
    throw BadCharacteristic("reduction requires a prime characteristic");
  EulerFactor g{ell, {}};
  for (const auto& [root, mult] : f.roots) g.roots[prime_to_ell_part(root, ell)] += mult;
  return g;
}

bool divides(const EulerFactor& f, const EulerFactor& g) {
  if (f.characteristic != g.characteristic)
    throw CharacteristicMismatch("divisibility needs matching characteristics");
  for (const auto& [root, mult] : f.roots) {
    auto it = g.roots.find(root);
    if (it == g.roots.end() || it->second < mult) return false;
  }
  return true;
}

std::string to_string(const EulerFactor& f) {
  if (f.roots.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [root, mult] : f.roots) {
    if (!first) out << " * ";
    first = false;
    out << "1/(1 - ";
    if (!root.is_identity()) out << to_string(root) << " ";
    out << "X)";
    if (mult != 1) out << "^" << mult;
  }
  return out.str();
}

EulerFactor asai_l_factor(const padic::CuspidalDatum& d, const mpz_class& ell) {
  padic::require_valid(d);
  if (ell != 0 && (ell < 2 || !arith::is_probable_prime(ell) || d.q_o % ell == 0))
    throw SettingError("ell must be 0 or a prime not dividing q_o");
  if (!d.distinguished_up_to_twist()) return unit_factor(ell);
  RootOfUnity c =
      d.distinction == padic::Distinction::TwistOfDistinguished ? d.twist : RootOfUnity();
  mpz_class big_n(d.n / padic::e_o(d));
  if (ell == 0) return expand(c, big_n, 0);
  if (!padic::is_relatively_banal(d, ell)) return unit_factor(ell);
  return expand(prime_to_ell_part(c, ell), big_n, ell);
}

PeriodReport period_report(const padic::CuspidalDatum& d, const mpz_class& ell) {
  padic::require_valid(d);
  if (d.distinction != padic::Distinction::Distinguished)
    throw NotDistinguishedInput("the period pairing is defined for distinguished data");
  bool rel_banal = padic::is_relatively_banal(d, ell);

  PeriodReport r;
  unsigned long e = padic::e_o(d);
  r.numerator_zero_order = arith::pow_ui(ell, arith::val_and_strip(mpz_class(d.n), ell).first);
  r.denominator_zero_order =
      arith::pow_ui(ell, arith::val_and_strip(mpz_class(d.n / e), ell).first);
  r.scalar_vanishes = arith::pow_mod(d.q_o, mpz_class(d.n / e), ell) == 1;
  r.val_ell_qo_minus_1 = arith::val_and_strip(mpz_class(d.q_o - 1), ell).first;
  r.nonzero = !r.scalar_vanishes && r.numerator_zero_order == r.denominator_zero_order;

  bool closed_form = rel_banal && mpz_class(e) % ell != 0;
  if (r.nonzero != closed_form)
    throw CrossCheckError("period vanishing disagrees with its closed-form criterion");
  return r;
}

} // namespace asai::lfactor
