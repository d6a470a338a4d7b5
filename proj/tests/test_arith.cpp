#include "doctest.h"

#include <stdexcept>

#include "asai/arith.hpp"

using namespace asai;

TEST_CASE("pow_ui and pow_mod") {
  CHECK(arith::pow_ui(3, 0) == 1);
  CHECK(arith::pow_ui(3, 6) == 729);
  CHECK(arith::pow_ui(-2, 3) == -8);
  CHECK(arith::pow_mod(3, 6, 7) == 1);
  CHECK(arith::pow_mod(3, 3, 13) == 1);
  CHECK(arith::pow_mod(mpz_class("123456789"), mpz_class("987654321"),
                       mpz_class("1000000007")) ==
        mpz_class("652541198"));
}

TEST_CASE("val_and_strip") {
  auto [v, rest] = arith::val_and_strip(728, 7);
  CHECK(v == 1);
  CHECK(rest == 104);
  auto [v2, rest2] = arith::val_and_strip(728, 2);
  CHECK(v2 == 3);
  CHECK(rest2 == 91);
  auto [v3, rest3] = arith::val_and_strip(91, 2);
  CHECK(v3 == 0);
  CHECK(rest3 == 91);
}

TEST_CASE("inv_mod") {
  auto inv = arith::inv_mod(104, 7);
  REQUIRE(inv.has_value());
  CHECK((*inv * 104) % 7 == 1);
  CHECK(!arith::inv_mod(104, 8).has_value());
}

TEST_CASE("prime power recognition") {
  CHECK(arith::is_odd_prime_power(3));
  CHECK(arith::is_odd_prime_power(27));
  CHECK(arith::is_odd_prime_power(49));
  CHECK(!arith::is_odd_prime_power(1));
  CHECK(!arith::is_odd_prime_power(2));
  CHECK(!arith::is_odd_prime_power(4));
  CHECK(!arith::is_odd_prime_power(15));
  auto pp = arith::as_prime_power(81);
  REQUIRE(pp.has_value());
  CHECK(pp->first == 3);
  CHECK(pp->second == 4);
  CHECK(!arith::as_prime_power(12).has_value());
}

TEST_CASE("prime_factors and mult_order") {
  auto fs = arith::prime_factors(728);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0] == 2);
  CHECK(fs[1] == 7);
  CHECK(fs[2] == 13);
  CHECK(arith::mult_order(3, 728) == 6);
  CHECK(arith::mult_order(9, 728) == 3);
  CHECK(arith::mult_order(1, 5) == 1);
}

TEST_CASE("mod_floor normalizes into [0, m)") {
  CHECK(arith::mod_floor(-1, 728) == 727);
  CHECK(arith::mod_floor(728, 728) == 0);
  CHECK(arith::mod_floor(729, 728) == 1);
}

TEST_CASE("to_ulong overflow") {
  CHECK(arith::to_ulong(728) == 728);
  CHECK_THROWS_AS(arith::to_ulong(mpz_class("18446744073709551616")), std::overflow_error);
  CHECK_THROWS_AS(arith::to_ulong(mpz_class(-1)), std::overflow_error);
}
