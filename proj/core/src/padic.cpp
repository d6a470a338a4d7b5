#include "asai/padic.hpp"

#include <sstream>

#include "asai/arith.hpp"

namespace asai::padic {

namespace {

bool one_or_two(unsigned long x) { return x == 1 || x == 2; }

void check_ell(const CuspidalDatum& d, const mpz_class& ell) {
  if (ell < 2 || !arith::is_probable_prime(ell) || d.q_o % ell == 0)
    throw SettingError("ell must be a prime not dividing q_o");
}

} // namespace

unsigned long CuspidalDatum::m() const {
  unsigned long deg = d();
  if (deg == 0 || n % deg != 0)
    throw DatumError("e(E/F) * f(E/F) must divide n");
  return n / deg;
}

std::vector<Violation> validate(const CuspidalDatum& d, const std::optional<mpz_class>& ell) {
  std::vector<Violation> out;
  if (!arith::is_odd_prime_power(d.q_o))
    out.push_back({"odd-prime-power", "q_o must be an odd prime power"});
  if (d.n < 1) out.push_back({"positive-degree", "n must be at least 1"});
  if (!one_or_two(d.e_ffo))
    out.push_back({"base-ramification-range", "e(F/F_o) must be 1 or 2"});
  if (!one_or_two(d.e_sigma))
    out.push_back({"sigma-ramification-range", "e_sigma must be 1 or 2"});
  if (d.e_ef < 1 || d.f_ef < 1)
    out.push_back({"positive-indices", "e(E/F) and f(E/F) must be at least 1"});
  if (!out.empty()) return out;

  if (d.n % d.d() != 0) {
    out.push_back({"degree-divisibility", "e(E/F) * f(E/F) must divide n"});
    return out;
  }
  unsigned long m = d.m();

  if (d.e_sigma == 2 && d.e_ffo != 2)
    out.push_back({"ramified-base-required",
                   "e_sigma = 2 requires the quadratic base extension to be ramified"});
  if (d.e_sigma == 1 && d.e_ffo == 2 && d.f_ef % 2 != 0)
    out.push_back({"inertia-parity",
                   "e_sigma = 1 with ramified base extension forces f(E/F) even"});
  if (d.e_sigma == 1 && d.supercuspidal && m % 2 == 0)
    out.push_back({"supercuspidal-odd-m",
                   "supercuspidal data with e_sigma = 1 require m odd"});
  if (d.e_sigma == 2 && m != 1 && m % 2 != 0)
    out.push_back({"m-one-or-even", "e_sigma = 2 requires m = 1 or m even"});
  if (d.distinguished_up_to_twist() && d.e_sigma == 2 && m % 2 == 1 && m >= 3)
    out.push_back({"distinction-odd-m",
                   "no distinction is possible with e_sigma = 2 and odd m >= 3"});

  if (out.empty() && ell && d.distinction == Distinction::Distinguished &&
      d.e_sigma == 1 && m % 2 == 0) {
    unsigned long e_eo_fo = d.e_ef * d.e_ffo;
    if (arith::pow_mod(d.q_o, mpz_class(d.n / e_eo_fo), *ell) != 1)
      out.push_back({"even-m-relative-banality",
                     "distinguished data with e_sigma = 1 and m even cannot have "
                     "q_o^{n/e_o} != 1 mod ell"});
  }
  return out;
}

void require_valid(const CuspidalDatum& d) {
  auto violations = validate(d);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid cuspidal datum:";
  for (const auto& v : violations) msg << " [" << v.rule << "] " << v.message << ";";
  throw DatumError(msg.str());
}

unsigned long e_o(const CuspidalDatum& d) {
  require_valid(d);
  unsigned long e_eo_fo = d.e_ef * d.e_ffo / d.e_sigma;
  unsigned long m = d.m();
  unsigned long result = (d.e_sigma == 2 && m != 1) ? 2 * e_eo_fo : e_eo_fo;
  if (result == 0 || d.n % result != 0)
    throw CrossCheckError("e_o does not divide n");
  return result;
}

mpz_class q_Eo(const CuspidalDatum& d) {
  require_valid(d);
  unsigned long f_eo_fo = d.f_ef * d.e_sigma / d.e_ffo;
  mpz_class result = arith::pow_ui(d.q_o, f_eo_fo);

  unsigned long nn = d.n / e_o(d);
  mpz_class rhs = arith::pow_ui(d.q_o, nn);
  unsigned long m = d.m();
  bool ok;
  if (d.e_sigma == 1)
    ok = arith::pow_ui(result, m) == rhs;
  else if (m == 1)
    ok = result == rhs;
  else
    ok = arith::pow_ui(result, m / 2) == rhs;
  if (!ok) throw CrossCheckError("residue field size comparison identity failed");
  return result;
}

bool is_relatively_banal(const CuspidalDatum& d, const mpz_class& ell) {
  require_valid(d);
  if (!d.distinguished_up_to_twist())
    throw NotDistinguishedInput("relative banality is defined for distinguished data");
  check_ell(d, ell);
  return arith::pow_mod(d.q_o, mpz_class(d.n / e_o(d)), ell) != 1;
}

bool is_banal(const CuspidalDatum& d, const mpz_class& ell) {
  require_valid(d);
  check_ell(d, ell);
  unsigned long exponent = (2 / d.e_ffo) * (d.n / d.e_ef);
  return arith::pow_mod(d.q_o, mpz_class(exponent), ell) != 1;
}

XoOrders x_o_orders(const CuspidalDatum& d, const std::optional<mpz_class>& ell) {
  require_valid(d);
  if (!d.distinguished_up_to_twist())
    throw NotDistinguishedInput("the unramified-twist distinction group needs distinguished data");
  XoOrders o;
  o.char0 = d.n / e_o(d);
  if (ell) {
    check_ell(d, *ell);
    auto [r, stripped] = arith::val_and_strip(mpz_class(o.char0), *ell);
    o.mod_ell = arith::to_ulong(stripped);
    o.kernel = arith::to_ulong(arith::pow_ui(*ell, r));
  } else {
    o.mod_ell = o.char0;
    o.kernel = 1;
  }
  return o;
}

FiniteLevel finite_level(const CuspidalDatum& d, const mpz_class& ell) {
  require_valid(d);
  check_ell(d, ell);
  unsigned long m = d.m();
  mpz_class qe = q_Eo(d);
  if (d.e_sigma == 1)
    return {charlattice::FiniteSetting::galois_pair(qe, m), m};
  return {charlattice::FiniteSetting::self_dual(qe, m), m};
}

bool all_lifts_unramified_twist_distinguished(const CuspidalDatum& d, const mpz_class& ell) {
  if (!d.distinguished_up_to_twist())
    throw NotDistinguishedInput("lift distinction is defined for distinguished data");
  FiniteLevel fl = finite_level(d, ell);
  auto ctx = charlattice::ell_context(fl.setting, ell);
  auto tag = charlattice::classify_case(fl.setting, ctx);
  bool result =
      tag == charlattice::CaseTag::Coprime || tag == charlattice::CaseTag::MinusCase;
  if (result != is_relatively_banal(d, ell))
    throw CrossCheckError("finite-level lift classification disagrees with relative banality");
  return result;
}

} // namespace asai::padic
