#include "asai/arith.hpp"

#include <stdexcept>

namespace asai::arith {

mpz_class pow_ui(const mpz_class& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const mpz_class& m) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::pair<unsigned long, mpz_class> val_and_strip(const mpz_class& n, const mpz_class& p) {
  mpz_class stripped;
  unsigned long v = mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return {v, stripped};
}

std::optional<mpz_class> inv_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

bool is_probable_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::optional<std::pair<mpz_class, unsigned long>> as_prime_power(const mpz_class& n) {
  if (n < 2) return std::nullopt;
  if (mpz_perfect_power_p(n.get_mpz_t()) == 0) {
    if (!is_probable_prime(n)) return std::nullopt;
    return std::make_pair(n, 1ul);
  }
  // Perfect power: find the prime base by taking k-th roots.
  for (unsigned long k = 2; ; ++k) {
    mpz_class root;
    int exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), k);
    if (root < 2) return std::nullopt;
    if (exact && is_probable_prime(root)) return std::make_pair(root, k);
  }
}

bool is_odd_prime_power(const mpz_class& n) {
  auto pp = as_prime_power(n);
  return pp && pp->first % 2 == 1;
}

std::vector<mpz_class> prime_factors(mpz_class n) {
  std::vector<mpz_class> out;
  if (n < 0) n = -n;
  for (mpz_class p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned long mult_order(const mpz_class& a, const mpz_class& m) {
  if (m <= 1) return 1;
  mpz_class x = mod_floor(a, m);
  if (gcd(x, m) != 1) throw std::invalid_argument("mult_order: arguments not coprime");
  mpz_class cur = x;
  unsigned long k = 1;
  while (cur != 1) {
    cur = cur * x % m;
    ++k;
  }
  return k;
}

mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

unsigned long to_ulong(const mpz_class& n) {
  if (n < 0 || !n.fits_ulong_p()) throw std::overflow_error("to_ulong: out of range");
  return n.get_ui();
}

} // namespace asai::arith
