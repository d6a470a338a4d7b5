#include "asai/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "asai/arith.hpp"
#include "asai/errors.hpp"
#include "asai/lfactor.hpp"

namespace asai::oracle {

namespace cl = charlattice;
namespace lf = lfactor;

void OracleReport::merge(const OracleReport& other) {
  checked += other.checked;
  skipped += other.skipped;
  witness_count += other.witness_count;
  if (witness.empty()) witness = other.witness;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

struct RawSetting {
  bool galois_pair = false;
  mpz_class q_base;
  mpz_class sigma_start;  // q_o for a galois pair, 1 otherwise
  unsigned long n = 1;
  mpz_class modulus;
};

RawSetting raw_from(const cl::FiniteSetting& s) {
  RawSetting r;
  r.galois_pair = s.kind() == cl::DualKind::GaloisPair;
  if (r.galois_pair) {
    r.sigma_start = s.q_o();
    r.q_base = r.sigma_start * r.sigma_start;
  } else {
    r.q_base = s.q_base();
    r.sigma_start = 1;
  }
  r.n = s.n();
  mpz_pow_ui(r.modulus.get_mpz_t(), r.q_base.get_mpz_t(), r.n);
  r.modulus -= 1;
  return r;
}

std::string setting_str(const cl::FiniteSetting& s) {
  std::ostringstream out;
  if (s.kind() == cl::DualKind::GaloisPair)
    out << "galois-pair q_o=" << s.q_o() << " n=" << s.n();
  else
    out << "self-dual q=" << s.q_base() << " n=" << s.n();
  return out.str();
}

unsigned long raw_orbit_len(const RawSetting& r, const mpz_class& a) {
  mpz_class x = a;
  for (unsigned long k = 1; k <= r.n; ++k) {
    x = x * r.q_base % r.modulus;
    if (x == a) return k;
  }
  return r.n;
}

mpz_class raw_orbit_min(const RawSetting& r, const mpz_class& a) {
  mpz_class x = a;
  mpz_class best = a;
  for (unsigned long k = 1; k < r.n; ++k) {
    x = x * r.q_base % r.modulus;
    if (x < best) best = x;
  }
  return best;
}

bool raw_dual(const RawSetting& r, const mpz_class& a) {
  mpz_class neg = (r.modulus - a) % r.modulus;
  mpz_class t = r.sigma_start % r.modulus;
  for (unsigned long k = 0; k < r.n; ++k) {
    if (t * a % r.modulus == neg) return true;
    t = t * r.q_base % r.modulus;
  }
  return false;
}

void require_modulus(const RawSetting& r, const OracleConfig& cfg) {
  if (r.modulus > cfg.max_modulus)
    throw ModulusTooLarge("modulus exceeds max_modulus");
}

mpz_class raw_dual_mult_lift(const RawSetting& r) {
  if (r.galois_pair) return arith::pow_ui(r.sigma_start, r.n);
  if (r.n == 1) return r.q_base;
  return arith::pow_ui(r.q_base, r.n / 2);
}

template <typename Fn>
OracleReport run_blocks(unsigned long total, unsigned long threads, Fn&& fn) {
  if (threads <= 1 || total < 8192) return fn(0ul, total);
  unsigned long count = std::min<unsigned long>(threads, 64);
  unsigned long chunk = (total + count - 1) / count;
  std::vector<OracleReport> parts(count);
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> workers;
  for (unsigned long i = 0; i < count; ++i) {
    unsigned long lo = i * chunk;
    unsigned long hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&parts, &errors, &fn, i, lo, hi] {
      try {
        parts[i] = fn(lo, hi);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  OracleReport merged;
  for (auto& p : parts) merged.merge(p);
  return merged;
}

std::string flag_str(bool b) { return b ? "true" : "false"; }

} // namespace

OracleReport verify_parity(const cl::FiniteSetting& s, const OracleConfig& cfg) {
  RawSetting r = raw_from(s);
  require_modulus(r, cfg);
  unsigned long m = arith::to_ulong(r.modulus);
  bool forbidden = r.galois_pair ? r.n % 2 == 0 : (r.n % 2 == 1 && r.n > 1);
  bool lib_defined = r.galois_pair || r.n % 2 == 0 || r.n == 1;
  std::string base = setting_str(s);

  return run_blocks(m, cfg.threads, [&](unsigned long lo, unsigned long hi) {
    OracleReport rep;
    for (unsigned long ai = lo; ai < hi; ++ai) {
      mpz_class a(ai);
      bool rd = raw_dual(r, a);
      if (lib_defined) {
        bool ld = cl::is_dual_selfdual_adic(s, a);
        if (cfg.mutate && ai == 1) ld = !ld;
        if (ld != rd)
          rep.failures.push_back(
              {base + " a=" + a.get_str(), flag_str(rd), flag_str(ld), "duality-agreement"});
      }
      ++rep.checked;
      if (!rd || raw_orbit_len(r, a) != r.n) continue;
      if (forbidden)
        rep.failures.push_back({base + " a=" + a.get_str(), "no regular dual index",
                                "regular dual index", "parity-exclusion"});
      else {
        if (rep.witness_count == 0) rep.witness = a.get_str();
        ++rep.witness_count;
      }
    }
    return rep;
  });
}

OracleReport verify_lift_counts(const cl::FiniteSetting& s, const mpz_class& ell,
                                const OracleConfig& cfg) {
  RawSetting r = raw_from(s);
  require_modulus(r, cfg);
  if (!s.has_dual_mult())
    throw SettingError("lift counting needs a setting with duality");
  unsigned long m = arith::to_ulong(r.modulus);
  auto ctx = cl::ell_context(s, ell);

  mpz_class m_r;
  unsigned long v = mpz_remove(m_r.get_mpz_t(), r.modulus.get_mpz_t(), ell.get_mpz_t());
  mpz_class ell_pow;
  mpz_pow_ui(ell_pow.get_mpz_t(), ell.get_mpz_t(), v);
  mpz_class idem_r = 0;
  if (m_r != 1) {
    mpz_class g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), ell_pow.get_mpz_t(),
               m_r.get_mpz_t());
    idem_r = arith::mod_floor(ell_pow * x, r.modulus);
  }

  mpz_class dml = raw_dual_mult_lift(r);
  bool own_tag_ok = true;
  cl::CaseTag own_tag = cl::CaseTag::Coprime;
  if (ell == 2)
    own_tag = cl::CaseTag::EllTwo;
  else if (v == 0)
    own_tag = cl::CaseTag::Coprime;
  else if ((dml - 1) % ell == 0)
    own_tag = cl::CaseTag::PlusCase;
  else if ((dml + 1) % ell == 0)
    own_tag = cl::CaseTag::MinusCase;
  else
    own_tag_ok = false;

  bool strict_scope = r.galois_pair ? r.n % 2 == 1 : r.n % 2 == 0;
  unsigned long count = arith::to_ulong(ell_pow);
  std::string base = setting_str(s) + " ell=" + ell.get_str();

  OracleReport head;
  if (!own_tag_ok) {
    head.failures.push_back(
        {base, "ell divides dual_mult_lift - 1 or + 1", "neither", "case-exhaustion"});
    ++head.checked;
  }

  OracleReport body = run_blocks(m, cfg.threads, [&](unsigned long lo, unsigned long hi) {
    OracleReport rep;
    auto check = [&rep](bool ok, const std::string& input, const std::string& expected,
                        const std::string& actual, const char* rule) {
      ++rep.checked;
      if (!ok) rep.failures.push_back({input, expected, actual, rule});
    };
    for (unsigned long ai = lo; ai < hi; ++ai) {
      mpz_class a(ai);
      mpz_class a_r = a * idem_r % r.modulus;
      bool own_md = raw_dual(r, a_r);
      bool lib_md = cl::is_dual_selfdual_modell(s, ctx, a);
      std::string input = base + " a=" + a.get_str();
      check(own_md == lib_md, input, flag_str(own_md), flag_str(lib_md), "mod-ell-duality");
      if (!own_md || raw_orbit_len(r, a) != r.n) continue;

      mpz_class census_dual = 0;
      std::set<mpz_class> mins;
      mpz_class t = a_r;
      for (unsigned long j = 0; j < count; ++j) {
        if (raw_dual(r, t)) ++census_dual;
        if (raw_orbit_len(r, t) == r.n) mins.insert(raw_orbit_min(r, t));
        t += m_r;
        if (t >= r.modulus) t -= r.modulus;
      }
      mpz_class class_dual = 0;
      for (const auto& rep_idx : mins)
        if (raw_dual(r, rep_idx)) ++class_dual;
      mpz_class class_total(static_cast<unsigned long>(mins.size()));

      try {
        auto lc = cl::enumerate_lifts(s, ctx, a, cfg.max_modulus);
        mpz_class lib_dual = lc.dual_count;
        if (cfg.mutate) lib_dual += 1;
        check(lc.total == ell_pow, input, ell_pow.get_str(), lc.total.get_str(),
              "lift-census-total");
        check(lib_dual == census_dual, input, census_dual.get_str(), lib_dual.get_str(),
              "lift-census-dual");
        check(lc.class_total == class_total, input, class_total.get_str(),
              lc.class_total.get_str(), "lift-class-total");
        check(lc.class_dual == class_dual, input, class_dual.get_str(),
              lc.class_dual.get_str(), "lift-class-dual");
        std::vector<cl::CharIndex> own_reps(mins.begin(), mins.end());
        check(lc.representatives == own_reps, input, "orbit minima of regular translates",
              "library representatives", "lift-representatives");
        if (own_tag_ok)
          check(lc.case_tag == own_tag, input, cl::to_string(own_tag),
                cl::to_string(lc.case_tag), "case-classification");

        bool sc_own = raw_orbit_len(r, a_r) == r.n;
        bool plus_minus =
            own_tag == cl::CaseTag::PlusCase || own_tag == cl::CaseTag::MinusCase;
        if (plus_minus && r.galois_pair && r.n % 2 == 0) {
          bool refused = false;
          try {
            cl::closed_form_dual_lift_count(s, ctx, a, sc_own, cfg.max_modulus);
          } catch (const SettingError&) {
            refused = true;
          }
          check(refused, input, "refusal outside the closed-form scope",
                refused ? "refused" : "returned a count", "closed-form-scope");
        } else {
          mpz_class expect_closed = own_tag == cl::CaseTag::EllTwo
                                        ? class_dual
                                        : (sc_own ? census_dual : class_dual);
          mpz_class got = cl::closed_form_dual_lift_count(s, ctx, a, sc_own, cfg.max_modulus);
          check(got == expect_closed, input, expect_closed.get_str(), got.get_str(),
                "closed-form-count");
        }

        if (ell == 2 && strict_scope) {
          std::ostringstream actual;
          actual << "census " << census_dual << "/" << ell_pow << " class " << class_dual
                 << "/" << class_total;
          check(census_dual < ell_pow && class_dual < class_total, input,
                "strictly partial dual counts", actual.str(), "characteristic-two-strictness");
        }
      } catch (const std::exception& ex) {
        rep.failures.push_back({input, "no exception", ex.what(), "unexpected-exception"});
      }
    }
    return rep;
  });
  head.merge(body);
  return head;
}

OracleReport verify_subgroup_lattice(const cl::FiniteSetting& s, const mpz_class& ell,
                                     const OracleConfig& cfg) {
  RawSetting r = raw_from(s);
  require_modulus(r, cfg);
  if (!s.has_dual_mult())
    throw SettingError("the subgroup lattice needs a setting with duality");
  unsigned long m = arith::to_ulong(r.modulus);
  auto ctx = cl::ell_context(s, ell);

  mpz_class m_r;
  unsigned long v = mpz_remove(m_r.get_mpz_t(), r.modulus.get_mpz_t(), ell.get_mpz_t());
  mpz_class ell_pow;
  mpz_pow_ui(ell_pow.get_mpz_t(), ell.get_mpz_t(), v);
  mpz_class dml = raw_dual_mult_lift(r);
  mpz_class dplus = arith::mod_floor(dml - 1, r.modulus);
  mpz_class dminus = arith::mod_floor(dml + 1, r.modulus);

  int sign = 0;
  if (ell != 2 && v > 0) {
    if ((dml - 1) % ell == 0)
      sign = 1;
    else if ((dml + 1) % ell == 0)
      sign = -1;
  }

  OracleReport rep;
  auto check = [&rep](bool ok, const std::string& input, const std::string& expected,
                      const std::string& actual, const char* rule) {
    ++rep.checked;
    if (!ok) rep.failures.push_back({input, expected, actual, rule});
  };
  std::string base = setting_str(s) + " ell=" + ell.get_str();

  mpz_class plus_count = 0, minus_count = 0, s_count = 0, r_count = 0;
  std::vector<mpz_class> inter;
  for (unsigned long ai = 0; ai < m; ++ai) {
    mpz_class a(ai);
    bool in_plus = dplus * a % r.modulus == 0;
    bool in_minus = dminus * a % r.modulus == 0;
    bool in_s = ell_pow * a % r.modulus == 0;
    bool in_r = m_r * a % r.modulus == 0;
    if (in_plus) ++plus_count;
    if (in_minus) ++minus_count;
    if (in_s) ++s_count;
    if (in_r) ++r_count;
    if (in_plus && in_minus) inter.push_back(a);

    auto lib = cl::subgroup_membership(s, ctx, a);
    if (cfg.mutate && ai == 1) lib.in_plus = !lib.in_plus;
    std::ostringstream own_str, lib_str;
    own_str << in_plus << in_minus << in_s << in_r;
    lib_str << lib.in_plus << lib.in_minus << lib.in_s << lib.in_r;
    check(lib.in_plus == in_plus && lib.in_minus == in_minus && lib.in_s == in_s &&
              lib.in_r == in_r,
          base + " a=" + a.get_str(), own_str.str(), lib_str.str(), "membership-agreement");
    if (sign > 0)
      check(!in_s || in_plus, base + " a=" + a.get_str(), "ell-part inside plus subgroup",
            "escaping index", "ell-inclusion");
    else if (sign < 0)
      check(!in_s || in_minus, base + " a=" + a.get_str(), "ell-part inside minus subgroup",
            "escaping index", "ell-inclusion");
  }

  mpz_class gplus = gcd(mpz_class(dml - 1), r.modulus);
  mpz_class gminus = gcd(mpz_class(dml + 1), r.modulus);
  check(plus_count == gplus, base, gplus.get_str(), plus_count.get_str(), "plus-order-gcd");
  check(minus_count == gminus, base, gminus.get_str(), minus_count.get_str(),
        "minus-order-gcd");
  check(plus_count == dml - 1, base, mpz_class(dml - 1).get_str(), plus_count.get_str(),
        "plus-order");
  bool sd_one = !r.galois_pair && r.n == 1;
  if (sd_one)
    check(minus_count == 2, base, "2", minus_count.get_str(), "minus-order");
  else
    check(minus_count == dml + 1, base, mpz_class(dml + 1).get_str(), minus_count.get_str(),
          "minus-order");
  check(s_count == ell_pow, base, ell_pow.get_str(), s_count.get_str(), "s-order");
  check(r_count == m_r, base, m_r.get_str(), r_count.get_str(), "r-order");
  std::vector<mpz_class> expect_inter{mpz_class(0), r.modulus / 2};
  std::ostringstream inter_str;
  for (const auto& x : inter) inter_str << x << " ";
  check(inter == expect_inter, base, "0 " + mpz_class(r.modulus / 2).get_str(),
        inter_str.str(), "plus-minus-intersection");
  check(cl::quadratic_character(s) == r.modulus / 2, base,
        mpz_class(r.modulus / 2).get_str(), cl::quadratic_character(s).get_str(),
        "quadratic-character");
  return rep;
}

namespace {

// Exact model of F_p[y] / (y^L - 1) for a prime p not dividing L, with
// comparisons taken modulo the L-th cyclotomic factor Phi_L(y).  Phi_L is
// squarefree mod p and each of its irreducible factors cuts out a field
// component in which y is a root of unity of exact order L, so distinct
// powers of y stay distinct there and products of linear factors
// (1 - y^t X) agree modulo Phi_L exactly when their exponent multisets
// agree mod L; divisibility by such a factor likewise matches multiset
// membership when the remainder is tested modulo Phi_L.  The components
// for proper divisors d of L, where y drops to a root of smaller order,
// can fail identities that hold for an exact order-L root, so full-ring
// equality would be the wrong test.  Arithmetic stays in the cyclic ring
// (index shifts and additions, never a factorization); only equality and
// exactness reduce.
struct CycRing {
  std::uint64_t p;
  unsigned long L;
  std::vector<std::uint64_t> phi;

  using Elem = std::vector<std::uint64_t>;
  using Poly = std::vector<Elem>;

  CycRing(std::uint64_t p_, unsigned long L_) : p(p_), L(L_), phi(cyclotomic(L_, p_)) {}

  // Phi_n over F_p through the Moebius product of binomials y^{n/e} - 1
  // over squarefree e | n: multiplications first, then the divisions,
  // each of which is exact.
  static std::vector<std::uint64_t> cyclotomic(unsigned long n, std::uint64_t p) {
    std::vector<unsigned long> primes;
    unsigned long m = n;
    for (unsigned long q = 2; q * q <= m; ++q)
      if (m % q == 0) {
        primes.push_back(q);
        while (m % q == 0) m /= q;
      }
    if (m > 1) primes.push_back(m);
    std::vector<std::uint64_t> f{1 % p};
    auto mul_binomial = [&](unsigned long d) {
      std::vector<std::uint64_t> g(f.size() + d, 0);
      for (std::size_t i = 0; i < f.size(); ++i) {
        g[i + d] = (g[i + d] + f[i]) % p;
        g[i] = (g[i] + p - f[i]) % p;
      }
      f = std::move(g);
    };
    auto div_binomial = [&](unsigned long d) {
      std::vector<std::uint64_t> q(f.size() - d, 0);
      for (std::size_t i = f.size(); i-- > d;) {
        std::uint64_t carry = i < q.size() ? q[i] : 0;
        q[i - d] = (f[i] + carry) % p;
      }
      f = std::move(q);
    };
    for (int pass = 0; pass < 2; ++pass)
      for (unsigned mask = 0; mask < (1u << primes.size()); ++mask) {
        unsigned long d = n;
        for (std::size_t i = 0; i < primes.size(); ++i)
          if (mask & (1u << i)) d /= primes[i];
        bool odd_mask = std::popcount(mask) % 2 == 1;
        if (pass == 0 && !odd_mask) mul_binomial(d);
        if (pass == 1 && odd_mask) div_binomial(d);
      }
    return f;
  }

  Elem zero() const { return Elem(L, 0); }

  // canonical representative modulo phi, length deg(phi)
  Elem reduced(const Elem& e) const {
    Elem r = e;
    std::size_t dg = phi.size() - 1;
    for (std::size_t i = r.size(); i-- > dg;) {
      std::uint64_t c = r[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dg; ++j)
        r[i - dg + j] = (r[i - dg + j] + (p - phi[j]) * c) % p;
    }
    r.resize(dg);
    return r;
  }

  bool reduces_to_zero(const Elem& e) const { return is_zero(reduced(e)); }

  Elem monomial(unsigned long t) const {
    Elem e(L, 0);
    e[t % L] = 1 % p;
    return e;
  }

  // acc += sign * y^t * x
  void add_shift(Elem& acc, const Elem& x, unsigned long t, bool negate) const {
    for (unsigned long i = 0; i < L; ++i) {
      std::uint64_t& slot = acc[(i + t) % L];
      slot = negate ? (slot + p - x[i]) % p : (slot + x[i]) % p;
    }
  }

  static bool is_zero(const Elem& e) {
    return std::all_of(e.begin(), e.end(), [](std::uint64_t v) { return v == 0; });
  }

  Poly one() const { return Poly{monomial(0)}; }

  // f *= (1 - y^t X)
  void mul_linear(Poly& f, unsigned long t) const {
    f.push_back(zero());
    for (std::size_t k = f.size(); k-- > 1;) add_shift(f[k], f[k - 1], t, true);
  }

  // f /= (1 - y^t X); returns whether the division was exact
  bool div_linear(Poly& f, unsigned long t) const {
    if (f.size() < 2) return false;
    Poly q(f.size() - 1, zero());
    q[0] = f[0];
    for (std::size_t k = 1; k + 1 < f.size(); ++k) {
      q[k] = f[k];
      add_shift(q[k], q[k - 1], t, false);
    }
    Elem rem = f.back();
    add_shift(rem, q.back(), t, false);
    if (!reduces_to_zero(rem)) return false;
    f = std::move(q);
    return true;
  }
};

bool poly_eq(const CycRing& ring, const CycRing::Poly& a, const CycRing::Poly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (ring.reduced(a[i]) != ring.reduced(b[i])) return false;
  return true;
}

// Ring exponent of a root of unity; fails when its order does not divide L.
bool ring_exponent(const CycRing& ring, const lf::RootOfUnity& z, unsigned long& t) {
  unsigned long ord = arith::to_ulong(z.order());
  if (ord == 0 || ring.L % ord != 0) return false;
  unsigned long e = arith::to_ulong(arith::mod_floor(z.exponent(), z.order()));
  t = static_cast<unsigned long>((static_cast<unsigned long long>(ring.L / ord) * e) % ring.L);
  return true;
}

bool product_from_roots(const CycRing& ring, const std::map<lf::RootOfUnity, mpz_class>& roots,
                        unsigned long bump_first, CycRing::Poly& out) {
  out = ring.one();
  bool first = true;
  for (const auto& [z, mult] : roots) {
    unsigned long t = 0;
    if (!ring_exponent(ring, z, t)) return false;
    unsigned long reps = arith::to_ulong(mult) + (first ? bump_first : 0);
    first = false;
    for (unsigned long i = 0; i < reps; ++i) ring.mul_linear(out, t);
  }
  return true;
}

// 1 - y^{tc * deg} X^deg, the expansion target written as a binomial
CycRing::Poly binomial_target(const CycRing& ring, unsigned long tc, unsigned long deg) {
  CycRing::Poly f(deg + 1, ring.zero());
  f[0] = ring.monomial(0);
  CycRing::Elem top = ring.zero();
  ring.add_shift(top, ring.monomial(0),
                 static_cast<unsigned long>((static_cast<unsigned long long>(tc) * deg) % ring.L),
                 true);
  f[deg] = top;
  return f;
}

unsigned long strip_all(unsigned long x, unsigned long p) {
  while (p > 1 && x % p == 0) x /= p;
  return x;
}

// Any prime exceeding every level in the grid keeps y^L - 1 squarefree.
constexpr std::uint64_t kCharZeroModelPrime = 1000003;

} // namespace

OracleReport verify_euler_arithmetic(const OracleConfig& cfg) {
  OracleReport rep;
  auto check = [&rep](bool ok, const std::string& input, const std::string& expected,
                      const std::string& actual, const char* rule) {
    ++rep.checked;
    if (!ok) rep.failures.push_back({input, expected, actual, rule});
  };

  for (unsigned long o = 1; o <= cfg.euler_bound; ++o) {
    lf::RootOfUnity c(o, 1);
    for (unsigned long deg = 1; deg <= cfg.euler_bound; ++deg) {
      std::string in0 = "order=" + std::to_string(o) + " N=" + std::to_string(deg);
      auto f0 = lf::expand(c, deg, 0);
      unsigned long l0 = std::lcm(o, deg);
      CycRing ring0{kCharZeroModelPrime, l0};
      unsigned long bump = cfg.mutate && o == 1 && deg == 1 ? 1 : 0;
      CycRing::Poly lhs;
      bool ok = product_from_roots(ring0, f0.roots, bump, lhs) &&
                poly_eq(ring0, lhs, binomial_target(ring0, l0 / o, deg));
      check(ok, in0 + " char=0", "dense polynomial match", ok ? "match" : "mismatch",
            "expansion-char0");

      for (unsigned long ell : cfg.euler_primes) {
        std::string inl = in0 + " char=" + std::to_string(ell);
        mpz_class ellz(ell);
        if (o % ell == 0) {
          bool threw = false;
          try {
            lf::expand(c, deg, ellz);
          } catch (const BadCharacteristic&) {
            threw = true;
          }
          check(threw, inl, "BadCharacteristic", threw ? "BadCharacteristic" : "no exception",
                "characteristic-guard");
          continue;
        }
        auto g = lf::expand(c, deg, ellz);
        unsigned long nr = strip_all(deg, ell);
        unsigned long ll = std::lcm(o, nr);
        CycRing ringl{ell, ll};
        CycRing::Poly lhsl;
        bool okl = product_from_roots(ringl, g.roots, 0, lhsl) &&
                   poly_eq(ringl, lhsl, binomial_target(ringl, ll / o, deg));
        check(okl, inl, "dense polynomial match", okl ? "match" : "mismatch",
              "expansion-mod-ell");
        auto red = lf::reduce_mod_ell(f0, ellz);
        check(red == g, inl, "reduction equals direct mod-ell expansion",
              red == g ? "equal" : "different", "reduce-expand-commute");

        // reduction against an independently reduced root multiset
        unsigned long lr = strip_all(l0, ell);
        CycRing ringr{ell, lr};
        CycRing::Poly own_poly = ringr.one();
        bool okr = true;
        for (const auto& [z, mult] : f0.roots) {
          unsigned long zord = arith::to_ulong(z.order());
          unsigned long dr = zord;
          unsigned long tv = 0;
          while (dr % ell == 0) {
            dr /= ell;
            ++tv;
          }
          mpz_class red_exp = 0;
          if (dr > 1 && tv > 0) {
            mpz_class lt = arith::pow_ui(mpz_class(ell), tv);
            auto u = arith::inv_mod(lt, mpz_class(dr));
            if (!u) {
              okr = false;
              break;
            }
            red_exp = arith::mod_floor(z.exponent() * *u, mpz_class(dr));
          } else if (tv == 0) {
            red_exp = arith::mod_floor(z.exponent(), mpz_class(dr));
          }
          if (dr == 1) red_exp = 0;
          if (lr % dr != 0) {
            okr = false;
            break;
          }
          mpz_class shifted = mpz_class((lr / dr) * red_exp) % lr;
          unsigned long t = arith::to_ulong(shifted);
          unsigned long reps = arith::to_ulong(mult);
          for (unsigned long i = 0; i < reps; ++i) ringr.mul_linear(own_poly, t);
        }
        CycRing::Poly claim;
        okr = okr && product_from_roots(ringr, red.roots, 0, claim) &&
              poly_eq(ringr, own_poly, claim);
        check(okr, inl, "dense reduction match", okr ? "match" : "mismatch",
              "reduction-agreement");
      }
    }
  }

  // divisibility against removing the divisor's linear factors one by one
  for (unsigned long pi = 0; pi <= cfg.euler_primes.size(); ++pi) {
    unsigned long ell = pi == 0 ? 0 : cfg.euler_primes[pi - 1];
    mpz_class ellz(ell);
    for (unsigned long n1 = 1; n1 <= cfg.euler_bound; ++n1) {
      auto f1 = lf::expand(lf::RootOfUnity(), n1, ellz);
      for (unsigned long n2 = 1; n2 <= cfg.euler_bound; ++n2) {
        auto f2 = lf::expand(lf::RootOfUnity(), n2, ellz);
        bool lib = lf::divides(f1, f2);
        unsigned long lev = ell == 0 ? std::lcm(n1, n2)
                                     : std::lcm(strip_all(n1, ell), strip_all(n2, ell));
        CycRing ring{ell == 0 ? kCharZeroModelPrime : ell, lev};
        CycRing::Poly p2;
        std::string ind = "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) +
                          " char=" + std::to_string(ell);
        if (!product_from_roots(ring, f2.roots, 0, p2)) {
          check(false, ind, "embeddable root multisets", "embedding failure",
                "divides-agreement");
          continue;
        }
        bool own = true;
        for (const auto& [z, mult] : f1.roots) {
          unsigned long t = 0;
          if (!ring_exponent(ring, z, t)) {
            own = false;
            break;
          }
          unsigned long reps = arith::to_ulong(mult);
          for (unsigned long i = 0; i < reps && own; ++i) own = ring.div_linear(p2, t);
          if (!own) break;
        }
        check(lib == own, ind, flag_str(own), flag_str(lib), "divides-agreement");
      }
    }
  }
  return rep;
}

OracleReport run_full_suite(const OracleConfig& cfg) {
  OracleReport total;
  static const unsigned long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

  auto process = [&](const cl::FiniteSetting& s, bool with_duality) {
    if (s.modulus() > cfg.max_modulus) {
      ++total.skipped;
      return;
    }
    total.merge(verify_parity(s, cfg));
    if (!with_duality) return;
    for (unsigned long ell : primes) {
      if (s.modulus() % ell != 0) continue;
      mpz_class ellz(ell);
      total.merge(verify_lift_counts(s, ellz, cfg));
      total.merge(verify_subgroup_lattice(s, ellz, cfg));
    }
  };

  static const unsigned long gp_orders[] = {3, 5, 7, 9};
  static const unsigned long gp_degrees[] = {1, 3, 5};
  static const unsigned long gp_extra_degrees[] = {2, 4};
  for (unsigned long qo : gp_orders) {
    for (unsigned long n : gp_degrees) process(cl::FiniteSetting::galois_pair(qo, n), true);
    for (unsigned long n : gp_extra_degrees)
      process(cl::FiniteSetting::galois_pair(qo, n), true);
  }
  static const unsigned long sd_orders[] = {3, 5, 9};
  static const unsigned long sd_degrees[] = {1, 2, 4};
  static const unsigned long sd_extra_degrees[] = {3, 5};
  for (unsigned long q : sd_orders) {
    for (unsigned long n : sd_degrees) process(cl::FiniteSetting::self_dual(q, n), true);
    for (unsigned long n : sd_extra_degrees)
      process(cl::FiniteSetting::self_dual(q, n), false);
  }

  total.merge(verify_euler_arithmetic(cfg));
  return total;
}

} // namespace asai::oracle
