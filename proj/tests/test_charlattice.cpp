#include "doctest.h"

#include <string>
#include <vector>

#include "asai/arith.hpp"
#include "asai/charlattice.hpp"
#include "asai/errors.hpp"

using namespace asai;
namespace cl = asai::charlattice;

TEST_CASE("finite settings") {
  auto gp = cl::FiniteSetting::galois_pair(3, 3);
  CHECK(gp.kind() == cl::DualKind::GaloisPair);
  CHECK(gp.q_base() == 9);
  CHECK(gp.q_o() == 3);
  CHECK(gp.modulus() == 728);
  CHECK(gp.frob_mult() == 9);
  CHECK(gp.dual_mult() == 27);
  CHECK(gp.dual_mult_lift() == 27);

  auto sd = cl::FiniteSetting::self_dual(3, 4);
  CHECK(sd.kind() == cl::DualKind::SelfDual);
  CHECK(sd.modulus() == 80);
  CHECK(sd.frob_mult() == 3);
  CHECK(sd.dual_mult() == 9);
  CHECK(sd.dual_mult_lift() == 9);

  auto sd1 = cl::FiniteSetting::self_dual(3, 1);
  CHECK(sd1.dual_mult() == 1);
  CHECK(sd1.dual_mult_lift() == 3);

  auto sd3 = cl::FiniteSetting::self_dual(3, 3);
  CHECK(!sd3.has_dual_mult());
  CHECK_THROWS_AS(sd3.dual_mult(), SettingError);
  CHECK_THROWS_AS(cl::FiniteSetting::self_dual(3, 3).dual_mult_lift(), SettingError);

  CHECK(gp.reduce(728) == 0);
  CHECK(gp.reduce(-1) == 727);
  CHECK(cl::to_string(cl::DualKind::GaloisPair) == std::string("galois-pair"));
  CHECK(cl::to_string(cl::DualKind::SelfDual) == std::string("self-dual"));
}

TEST_CASE("ell context splits the modulus with CRT idempotents") {
  auto gp = cl::FiniteSetting::galois_pair(3, 3);

  auto c7 = cl::ell_context(gp, 7);
  CHECK(c7.v == 1);
  CHECK(c7.ell_pow == 7);
  CHECK(c7.m_r == 104);
  CHECK(c7.idem_r == 105);
  CHECK(c7.idem_s == 624);

  auto c13 = cl::ell_context(gp, 13);
  CHECK(c13.m_r == 56);
  CHECK(c13.idem_r == 169);
  CHECK(c13.idem_s == 560);

  auto c11 = cl::ell_context(gp, 11);
  CHECK(c11.v == 0);
  CHECK(c11.ell_pow == 1);
  CHECK(c11.m_r == 728);
  CHECK(c11.idem_r == 1);
  CHECK(c11.idem_s == 0);

  auto c2 = cl::ell_context(gp, 2);
  CHECK(c2.v == 3);
  CHECK(c2.ell_pow == 8);
  CHECK(c2.m_r == 91);

  SUBCASE("idempotent identities hold on a grid") {
    for (unsigned long ell : {2ul, 5ul, 7ul, 13ul}) {
      auto ctx = cl::ell_context(gp, ell);
      CHECK((ctx.idem_r + ctx.idem_s) % gp.modulus() == 1);
      CHECK(ctx.idem_r % ctx.ell_pow == 0);
      CHECK(ctx.idem_s % ctx.m_r == 0);
      CHECK(ctx.m_r * ctx.ell_pow == gp.modulus());
    }
  }

  CHECK_THROWS_AS(cl::ell_context(gp, 3), SettingError);
  CHECK_THROWS_AS(cl::ell_context(gp, 4), SettingError);
}

TEST_CASE("ell decomposition") {
  auto gp = cl::FiniteSetting::galois_pair(3, 3);
  auto c7 = cl::ell_context(gp, 7);
  auto d7 = cl::ell_decompose(gp, c7, 26);
  CHECK(d7.a_r == 546);
  CHECK(d7.a_s == 208);

  auto c13 = cl::ell_context(gp, 13);
  auto d13 = cl::ell_decompose(gp, c13, 26);
  CHECK(d13.a_r == 26);
  CHECK(d13.a_s == 0);

  SUBCASE("recombination and component orders") {
    for (unsigned long a = 0; a < 728; a += 13) {
      auto d = cl::ell_decompose(gp, c7, a);
      CHECK((d.a_r + d.a_s) % 728 == a);
      CHECK(d.a_r * c7.m_r % 728 == 0);
      CHECK(d.a_s * c7.ell_pow % 728 == 0);
    }
  }
}

TEST_CASE("frobenius orbits and regularity") {
  auto gp = cl::FiniteSetting::galois_pair(3, 3);
  auto orbit = cl::frobenius_orbit(gp, 26);
  CHECK(orbit == std::vector<cl::CharIndex>{26, 234, 650});
  CHECK(cl::is_regular(gp, 26));
  CHECK(cl::frobenius_orbit(gp, 91) == std::vector<cl::CharIndex>{91});
  CHECK(!cl::is_regular(gp, 91));
  CHECK(!cl::is_regular(gp, 0));

  for (unsigned long a = 0; a < 728; ++a)
    CHECK(3 % cl::frobenius_orbit(gp, a).size() == 0);
}

TEST_CASE("duality tests") {
  auto gp = cl::FiniteSetting::galois_pair(3, 3);
  CHECK(cl::is_dual_selfdual_adic(gp, 26));
  CHECK(cl::is_dual_selfdual_adic(gp, 0));
  CHECK(!cl::is_dual_selfdual_adic(gp, 1));
  CHECK(cl::quadratic_character(gp) == 364);

  auto sd3 = cl::FiniteSetting::self_dual(3, 3);
  CHECK_THROWS_AS(cl::is_dual_selfdual_adic(sd3, 1), SettingError);

  SUBCASE("mod-ell test sees only the prime-to-ell component") {
    auto c7 = cl::ell_context(gp, 7);
    for (unsigned long a = 0; a < 728; ++a) {
      bool direct = cl::is_dual_selfdual_adic(gp, cl::ell_decompose(gp, c7, a).a_r);
      CHECK(cl::is_dual_selfdual_modell(gp, c7, a) == direct);
    }
  }

  SUBCASE("a twist-dual reduction passes the scan but not the involution form") {
    auto sd = cl::FiniteSetting::self_dual(3, 4);
    CHECK(cl::is_dual_selfdual_adic(sd, 20));
    mpz_class strict = (sd.dual_mult() + 1) * 20 % sd.modulus();
    CHECK(strict == 40);
  }
}

TEST_CASE("subgroup membership flags") {
  auto gp = cl::FiniteSetting::galois_pair(3, 3);
  auto c7 = cl::ell_context(gp, 7);

  auto f104 = cl::subgroup_membership(gp, c7, 104);
  CHECK(f104.in_s);
  CHECK(!f104.in_r);
  CHECK(f104.in_minus);
  CHECK(!f104.in_plus);

  auto f0 = cl::subgroup_membership(gp, c7, 0);
  CHECK(f0.in_s);
  CHECK(f0.in_r);
  CHECK(f0.in_minus);
  CHECK(f0.in_plus);

  auto f546 = cl::subgroup_membership(gp, c7, 546);
  CHECK(!f546.in_s);
  CHECK(f546.in_r);

  SUBCASE("subgroup orders match their gcd closed forms") {
    mpz_class plus = 0, minus = 0;
    for (unsigned long a = 0; a < 728; ++a) {
      auto f = cl::subgroup_membership(gp, c7, a);
      if (f.in_plus) ++plus;
      if (f.in_minus) ++minus;
    }
    CHECK(plus == gcd(mpz_class(26), mpz_class(728)));
    CHECK(minus == gcd(mpz_class(28), mpz_class(728)));
  }
}

TEST_CASE("lift enumeration, minus case census and classes") {
  auto gp = cl::FiniteSetting::galois_pair(3, 3);
  auto c7 = cl::ell_context(gp, 7);
  auto lifts = cl::enumerate_lifts(gp, c7, 26);
  CHECK(lifts.case_tag == cl::CaseTag::MinusCase);
  CHECK(lifts.total == 7);
  CHECK(lifts.dual_count == 7);
  CHECK(lifts.class_total == 2);
  CHECK(lifts.class_dual == 2);
  CHECK(lifts.representatives == std::vector<cl::CharIndex>{26, 130});
}

TEST_CASE("lift enumeration, plus case census and classes") {
  auto gp = cl::FiniteSetting::galois_pair(3, 3);
  auto c13 = cl::ell_context(gp, 13);
  auto lifts = cl::enumerate_lifts(gp, c13, 26);
  CHECK(lifts.case_tag == cl::CaseTag::PlusCase);
  CHECK(lifts.total == 13);
  CHECK(lifts.dual_count == 1);
  CHECK(lifts.class_total == 13);
  CHECK(lifts.class_dual == 1);
  CHECK(lifts.representatives ==
        std::vector<cl::CharIndex>{10, 26, 34, 66, 122, 138, 146, 194, 202, 314, 402, 458, 474});
}

TEST_CASE("lift enumeration, ell = 2") {
  auto gp = cl::FiniteSetting::galois_pair(3, 3);
  auto c2 = cl::ell_context(gp, 2);
  auto lifts = cl::enumerate_lifts(gp, c2, 26);
  CHECK(lifts.case_tag == cl::CaseTag::EllTwo);
  CHECK(lifts.total == 8);
  CHECK(lifts.dual_count == 4);
  CHECK(lifts.class_total == 8);
  CHECK(lifts.class_dual == 4);
}

TEST_CASE("lift enumeration input guards") {
  auto gp = cl::FiniteSetting::galois_pair(3, 3);
  auto c7 = cl::ell_context(gp, 7);
  CHECK_THROWS_AS(cl::enumerate_lifts(gp, c7, 91), NonRegularInput);
  CHECK_THROWS_AS(cl::enumerate_lifts(gp, c7, 26, 100), ModulusTooLarge);
}

TEST_CASE("case classification") {
  auto gp = cl::FiniteSetting::galois_pair(3, 3);
  CHECK(cl::classify_case(gp, cl::ell_context(gp, 7)) == cl::CaseTag::MinusCase);
  CHECK(cl::classify_case(gp, cl::ell_context(gp, 13)) == cl::CaseTag::PlusCase);
  CHECK(cl::classify_case(gp, cl::ell_context(gp, 11)) == cl::CaseTag::Coprime);
  CHECK(cl::classify_case(gp, cl::ell_context(gp, 2)) == cl::CaseTag::EllTwo);
  CHECK(cl::to_string(cl::CaseTag::EllTwo) == std::string("ell-two"));

  SUBCASE("plus and minus exhaust the odd divisors of the modulus") {
    for (unsigned long ell : {5ul, 7ul, 13ul, 41ul}) {
      for (auto s : {cl::FiniteSetting::galois_pair(3, 2), cl::FiniteSetting::self_dual(3, 4)}) {
        if (s.modulus() % ell != 0) continue;
        auto tag = cl::classify_case(s, cl::ell_context(s, ell));
        CHECK((tag == cl::CaseTag::PlusCase || tag == cl::CaseTag::MinusCase));
        bool plus = (s.dual_mult_lift() - 1) % ell == 0;
        CHECK(tag == (plus ? cl::CaseTag::PlusCase : cl::CaseTag::MinusCase));
      }
    }
  }
}

TEST_CASE("closed-form dual lift counts") {
  auto gp = cl::FiniteSetting::galois_pair(3, 3);
  CHECK(cl::closed_form_dual_lift_count(gp, cl::ell_context(gp, 7), 26, false) == 2);
  CHECK(cl::closed_form_dual_lift_count(gp, cl::ell_context(gp, 13), 26, true) == 1);
  CHECK(cl::closed_form_dual_lift_count(gp, cl::ell_context(gp, 11), 26, true) == 1);
  CHECK(cl::closed_form_dual_lift_count(gp, cl::ell_context(gp, 2), 26, true) == 4);

  SUBCASE("requires a dual index and a consistent regularity flag") {
    CHECK_THROWS_AS(cl::closed_form_dual_lift_count(gp, cl::ell_context(gp, 7), 1, true),
                    DualityViolation);
    CHECK_THROWS_AS(cl::closed_form_dual_lift_count(gp, cl::ell_context(gp, 7), 26, true),
                    DatumError);
  }

  SUBCASE("refused for a galois pair of even degree") {
    auto gp2 = cl::FiniteSetting::galois_pair(3, 2);
    auto c5 = cl::ell_context(gp2, 5);
    REQUIRE(cl::is_dual_selfdual_modell(gp2, c5, 4));
    CHECK(cl::classify_case(gp2, c5) == cl::CaseTag::MinusCase);
    CHECK_THROWS_AS(cl::closed_form_dual_lift_count(gp2, c5, 4, false), SettingError);
  }

  SUBCASE("self-dual minus case splits on the strict involution test") {
    auto sd = cl::FiniteSetting::self_dual(3, 4);
    auto c5 = cl::ell_context(sd, 5);

    auto twisted = cl::enumerate_lifts(sd, c5, 4);
    CHECK(twisted.class_total == 2);
    CHECK(twisted.class_dual == 0);
    CHECK(twisted.dual_count == 1);
    CHECK(cl::closed_form_dual_lift_count(sd, c5, 4, false) == 0);

    auto strict = cl::enumerate_lifts(sd, c5, 8);
    CHECK(strict.class_total == 1);
    CHECK(strict.class_dual == 1);
    CHECK(cl::closed_form_dual_lift_count(sd, c5, 8, false) == 1);
  }
}

TEST_CASE("default enumeration bound") {
  CHECK(cl::kDefaultEnumerationBound == (1ul << 22));
}
