#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace asai::arith {

/// base^exp as an exact integer.
mpz_class pow_ui(const mpz_class& base, unsigned long exp);

/// base^exp mod m, m > 0.
mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const mpz_class& m);

/// Largest e with p^e | n together with n / p^e.  n != 0, p >= 2.
std::pair<unsigned long, mpz_class> val_and_strip(const mpz_class& n, const mpz_class& p);

/// Multiplicative inverse of a mod m if gcd(a, m) == 1.
std::optional<mpz_class> inv_mod(const mpz_class& a, const mpz_class& m);

bool is_probable_prime(const mpz_class& n);

/// Writes n = p^k with p prime, k >= 1, if possible.
std::optional<std::pair<mpz_class, unsigned long>> as_prime_power(const mpz_class& n);

/// True when n = p^k for an odd prime p.
bool is_odd_prime_power(const mpz_class& n);

/// Distinct prime factors by trial division; intended for small n.
std::vector<mpz_class> prime_factors(mpz_class n);

/// Multiplicative order of a mod m, gcd(a, m) == 1.  Brute-force; intended
/// for small m.
unsigned long mult_order(const mpz_class& a, const mpz_class& m);

/// a mod m normalized to [0, m).
mpz_class mod_floor(const mpz_class& a, const mpz_class& m);

/// Exact conversion to unsigned long; throws std::overflow_error when out of
/// range.
unsigned long to_ulong(const mpz_class& n);

} // namespace asai::arith
