#pragma once

#include <string>

#include <gmpxx.h>

namespace asai::lfactor {

/// zeta_order^exponent, normalized so that order is the exact multiplicative
/// order of the value (gcd(exponent, order) = 1 and exponent = 0 only for
/// order 1).  The identity is (1, 0).
class RootOfUnity {
public:
  RootOfUnity() = default;
  RootOfUnity(const mpz_class& order, const mpz_class& exponent);

  const mpz_class& order() const { return order_; }
  const mpz_class& exponent() const { return exponent_; }
  bool is_identity() const { return order_ == 1; }

private:
  mpz_class order_{1};
  mpz_class exponent_{0};
};

bool operator==(const RootOfUnity& x, const RootOfUnity& y);
bool operator!=(const RootOfUnity& x, const RootOfUnity& y);
bool operator<(const RootOfUnity& x, const RootOfUnity& y);

RootOfUnity multiply(const RootOfUnity& x, const RootOfUnity& y);
RootOfUnity power(const RootOfUnity& x, const mpz_class& k);
RootOfUnity inverse(const RootOfUnity& x);

/// The component of exact order prime to ell in x = x_r * x_s.
RootOfUnity prime_to_ell_part(const RootOfUnity& x, const mpz_class& ell);

/// "1" for the identity, "zeta(order,exponent)" otherwise.
std::string to_string(const RootOfUnity& x);

} // namespace asai::lfactor
