#include "asai/charlattice.hpp"

#include <algorithm>
#include <set>

#include "asai/arith.hpp"

namespace asai::charlattice {

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Coprime: return "coprime";
    case CaseTag::PlusCase: return "plus";
    case CaseTag::MinusCase: return "minus";
    case CaseTag::EllTwo: return "ell-two";
  }
  return "?";
}

const char* to_string(DualKind kind) {
  switch (kind) {
    case DualKind::GaloisPair: return "galois-pair";
    case DualKind::SelfDual: return "self-dual";
  }
  return "?";
}

FiniteSetting FiniteSetting::galois_pair(const mpz_class& q_o, unsigned long n) {
  if (n < 1) throw SettingError("degree must be at least 1");
  if (!arith::is_odd_prime_power(q_o))
    throw SettingError("small field order must be an odd prime power");
  FiniteSetting s;
  s.kind_ = DualKind::GaloisPair;
  s.q_o_ = q_o;
  s.q_base_ = q_o * q_o;
  s.n_ = n;
  s.modulus_ = arith::pow_ui(s.q_base_, n) - 1;
  s.frob_mult_ = s.q_base_ % s.modulus_;
  s.dual_mult_ = arith::pow_ui(q_o, n) % s.modulus_;
  s.has_dual_mult_ = true;
  return s;
}

FiniteSetting FiniteSetting::self_dual(const mpz_class& q, unsigned long n) {
  if (n < 1) throw SettingError("degree must be at least 1");
  if (!arith::is_odd_prime_power(q))
    throw SettingError("base field order must be an odd prime power");
  FiniteSetting s;
  s.kind_ = DualKind::SelfDual;
  s.q_base_ = q;
  s.n_ = n;
  s.modulus_ = arith::pow_ui(q, n) - 1;
  s.frob_mult_ = q % s.modulus_;
  if (n == 1) {
    s.dual_mult_ = 1;
    s.has_dual_mult_ = true;
  } else if (n % 2 == 0) {
    s.dual_mult_ = arith::pow_ui(q, n / 2) % s.modulus_;
    s.has_dual_mult_ = true;
  }
  return s;
}

const mpz_class& FiniteSetting::q_o() const {
  if (kind_ != DualKind::GaloisPair)
    throw SettingError("no small field in a self-dual setting");
  return q_o_;
}

const mpz_class& FiniteSetting::dual_mult() const {
  if (!has_dual_mult_)
    throw SettingError("duality undefined for a self-dual setting of odd degree > 1");
  return dual_mult_;
}

mpz_class FiniteSetting::dual_mult_lift() const {
  if (kind_ == DualKind::GaloisPair) return arith::pow_ui(q_o_, n_);
  if (n_ == 1) return q_base_;
  if (n_ % 2 == 0) return arith::pow_ui(q_base_, n_ / 2);
  throw SettingError("duality undefined for a self-dual setting of odd degree > 1");
}

CharIndex FiniteSetting::reduce(const mpz_class& a) const {
  return arith::mod_floor(a, modulus_);
}

EllContext ell_context(const FiniteSetting& s, const mpz_class& ell) {
  if (ell < 2 || !arith::is_probable_prime(ell))
    throw SettingError("ell must be prime");
  if (s.q_base() % ell == 0)
    throw SettingError("ell must be coprime to the base field order");
  EllContext ctx;
  ctx.ell = ell;
  auto [v, m_r] = arith::val_and_strip(s.modulus(), ell);
  ctx.v = v;
  ctx.m_r = m_r;
  ctx.ell_pow = arith::pow_ui(ell, v);
  if (v == 0) {
    ctx.idem_r = mpz_class(1) % s.modulus();
  } else if (m_r == 1) {
    ctx.idem_r = 0;
  } else {
    ctx.idem_r = ctx.ell_pow * *arith::inv_mod(ctx.ell_pow, m_r) % s.modulus();
  }
  ctx.idem_s = arith::mod_floor(1 - ctx.idem_r, s.modulus());
  return ctx;
}

Decomposition ell_decompose(const FiniteSetting& s, const EllContext& ctx, const CharIndex& a) {
  CharIndex x = s.reduce(a);
  return {x * ctx.idem_r % s.modulus(), x * ctx.idem_s % s.modulus()};
}

std::vector<CharIndex> frobenius_orbit(const FiniteSetting& s, const CharIndex& a) {
  std::vector<CharIndex> orbit;
  orbit.reserve(s.n());
  CharIndex x = s.reduce(a);
  for (unsigned long k = 0; k < s.n(); ++k) {
    orbit.push_back(x);
    x = x * s.frob_mult() % s.modulus();
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

bool is_regular(const FiniteSetting& s, const CharIndex& a) {
  return frobenius_orbit(s, a).size() == s.n();
}

bool is_dual_selfdual_adic(const FiniteSetting& s, const CharIndex& a) {
  const mpz_class& m = s.modulus();
  CharIndex x = s.reduce(a);
  mpz_class neg = (m - x) % m;
  mpz_class mult = s.kind() == DualKind::GaloisPair ? s.q_o() % m : s.dual_mult();
  bool found = false;
  for (unsigned long k = 0; k < s.n(); ++k) {
    if (mult * x % m == neg) {
      found = true;
      break;
    }
    mult = mult * s.frob_mult() % m;
  }
  if (s.kind() == DualKind::GaloisPair && s.n() % 2 == 1 && is_regular(s, x)) {
    bool closed = (s.dual_mult() + 1) * x % m == 0;
    if (closed != found)
      throw DualityViolation("duality scan disagrees with its odd-degree closed form");
  }
  return found;
}

bool is_dual_selfdual_modell(const FiniteSetting& s, const EllContext& ctx, const CharIndex& a) {
  CharIndex a_r = ell_decompose(s, ctx, a).a_r;
  if (s.kind() == DualKind::GaloisPair && s.n() % 2 == 1 && ctx.ell % 2 == 1)
    return (s.dual_mult() + 1) * a_r % s.modulus() == 0;
  return is_dual_selfdual_adic(s, a_r);
}

SubgroupFlags subgroup_membership(const FiniteSetting& s, const EllContext& ctx, const CharIndex& a) {
  const mpz_class& m = s.modulus();
  CharIndex x = s.reduce(a);
  SubgroupFlags f;
  f.in_plus = (s.dual_mult() - 1) * x % m == 0;
  f.in_minus = (s.dual_mult() + 1) * x % m == 0;
  f.in_s = ctx.ell_pow * x % m == 0;
  f.in_r = ctx.m_r * x % m == 0;
  return f;
}

CharIndex quadratic_character(const FiniteSetting& s) {
  if (s.modulus() % 2 != 0)
    throw SettingError("no quadratic character: modulus is odd");
  return s.modulus() / 2;
}

LiftClass enumerate_lifts(const FiniteSetting& s, const EllContext& ctx, const CharIndex& a,
                          unsigned long bound) {
  if (s.modulus() > bound)
    throw ModulusTooLarge("modulus exceeds the enumeration bound");
  CharIndex x = s.reduce(a);
  if (!is_regular(s, x))
    throw NonRegularInput("lift enumeration needs a regular index");

  CharIndex a_r = ell_decompose(s, ctx, x).a_r;
  LiftClass out;
  out.case_tag = classify_case(s, ctx);
  out.total = ctx.ell_pow;
  out.dual_count = 0;
  std::set<CharIndex> reps;
  unsigned long count = arith::to_ulong(ctx.ell_pow);
  CharIndex t = a_r;
  for (unsigned long j = 0; j < count; ++j) {
    if (is_dual_selfdual_adic(s, t)) ++out.dual_count;
    auto orbit = frobenius_orbit(s, t);
    if (orbit.size() == s.n()) reps.insert(orbit.front());
    t += ctx.m_r;
    if (t >= s.modulus()) t -= s.modulus();
  }
  out.class_total = reps.size();
  out.class_dual = 0;
  out.representatives.assign(reps.begin(), reps.end());
  for (const CharIndex& r : out.representatives)
    if (is_dual_selfdual_adic(s, r)) ++out.class_dual;
  return out;
}

CaseTag classify_case(const FiniteSetting& s, const EllContext& ctx) {
  if (ctx.ell == 2) return CaseTag::EllTwo;
  if (ctx.v == 0) return CaseTag::Coprime;
  mpz_class lift = s.dual_mult_lift();
  if ((lift - 1) % ctx.ell == 0) return CaseTag::PlusCase;
  if ((lift + 1) % ctx.ell == 0) return CaseTag::MinusCase;
  throw DualityViolation("case classification fell through for odd ell dividing the modulus");
}

mpz_class closed_form_dual_lift_count(const FiniteSetting& s, const EllContext& ctx,
                                      const CharIndex& a, bool supercuspidal_reduction,
                                      unsigned long bound) {
  if (!is_dual_selfdual_modell(s, ctx, a))
    throw DualityViolation("index fails the mod-ell duality test");
  CharIndex a_r = ell_decompose(s, ctx, a).a_r;
  if (supercuspidal_reduction != is_regular(s, a_r))
    throw DatumError("supercuspidal_reduction flag contradicts the decomposition");

  bool odd_ell_scope = (s.kind() == DualKind::GaloisPair && s.n() % 2 == 1) ||
                       s.kind() == DualKind::SelfDual;
  switch (classify_case(s, ctx)) {
    case CaseTag::Coprime:
      return 1;
    case CaseTag::PlusCase:
      if (!odd_ell_scope)
        throw SettingError("no closed-form dual lift count for a sigma-paired setting of even degree");
      return supercuspidal_reduction ? mpz_class(1) : mpz_class(0);
    case CaseTag::MinusCase: {
      if (!odd_ell_scope)
        throw SettingError("no closed-form dual lift count for a sigma-paired setting of even degree");
      bool strict = arith::mod_floor((s.dual_mult() + 1) * a_r, s.modulus()) == 0;
      if (!strict) {
        // the reduction is dual only through a Frobenius twist, which no
        // lift of a regular translate can match
        LiftClass lifts = enumerate_lifts(s, ctx, a, bound);
        if (lifts.class_dual != 0)
          throw DualityViolation("twist-dual minus case produced a dual lift class");
        return 0;
      }
      if (supercuspidal_reduction) return ctx.ell_pow;
      LiftClass lifts = enumerate_lifts(s, ctx, a, bound);
      if (lifts.class_dual != lifts.class_total)
        throw DualityViolation("minus case produced a duality-unstable lift class");
      return lifts.class_total;
    }
    case CaseTag::EllTwo: {
      LiftClass lifts = enumerate_lifts(s, ctx, a, bound);
      bool covered = (s.kind() == DualKind::GaloisPair && s.n() % 2 == 1) ||
                     (s.kind() == DualKind::SelfDual && s.n() % 2 == 0);
      if (covered && (lifts.dual_count >= lifts.total || lifts.class_dual >= lifts.class_total))
        throw DualityViolation("characteristic-two lift counts are not strictly partial");
      return lifts.class_dual;
    }
  }
  throw DualityViolation("unreachable case tag");
}

} // namespace asai::charlattice
