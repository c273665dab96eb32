#include <catch2/catch_amalgamated.hpp>

#include <pkcong/ladic.hpp>
#include <pkcong/selftest.hpp>

using namespace pkcong;

TEST_CASE("binomial fifth power decomposes canonically") {
  IntDomain Z;
  auto g = pow(make_series(Z, {1, 1}), 5, 5);
  auto dec = ladic_decompose(g, 5, 1);
  // components: f_0 = 1 + q^5 on the ell-divisible exponents,
  // f_1 = q + 2q^2 + 2q^3 + q^4 from binomials 5,10,10,5 divided by 5
  CHECK(dec.c(0, 0) == 1);
  CHECK(dec.c(0, 1) == 1);
  CHECK(dec.c(1, 1) == 1);
  CHECK(dec.c(1, 2) == 2);
  CHECK(dec.c(1, 3) == 2);
  CHECK(dec.c(1, 4) == 1);
  CHECK(dec.c(1, 0) == 0);
  CHECK(equal_series(recompose(dec, Z, 5), g));
}

TEST_CASE("phi^25 decomposition mod 5^2") {
  IntDomain Z;
  auto g = pow(euler_phi(Z, 50), 25, 50);
  // q^1 coefficient of phi^25 is -25: assigned to component 2 as -1
  CHECK(g.at(1) == -25);
  auto dec = ladic_decompose(g, 5, 2);
  CHECK(dec.c(2, 1) == -1);
  CHECK(equal_series(recompose(dec, Z, 50), g));
  // every coefficient obeys the valuation law (decompose did not throw),
  // spot-check one directly
  CHECK(mpz_fdiv_ui(g.at(1).get_mpz_t(), 25) == 0);
}

TEST_CASE("non-powers are refused with the offending exponent") {
  IntDomain Z;
  auto g = make_series(Z, {1, 1});  // 1 + q is not a 5th power
  try {
    ladic_decompose(g, 5, 1);
    FAIL("expected divisibility_violation");
  } catch (const divisibility_violation& e) {
    CHECK(e.exponent == 1);
  }
}

TEST_CASE("laurent decomposition keeps negative exponents") {
  IntDomain Z;
  LaurentSeries<IntDomain> f(Z, -1, 3);
  f.at(-1) = 1;
  f.at(0) = 1;
  auto g = laurent_pow(f, 5);  // q^{-5}(1+q)^5
  CHECK(g.lead == -5);
  auto dec = ladic_decompose(g, 5, 1);
  CHECK(dec.c(0, -1) == 1);
  CHECK(dec.c(1, -4) == 1);  // binomial 5 at q^{-4}, divided by 5
  auto rec = recompose(dec, Z, g.lead, g.order());
  for (long e = g.lead; e <= g.order(); ++e) CHECK(rec.coeff(e) == g.coeff(e));
}

TEST_CASE("rational coefficients use ell-adic valuations") {
  RatDomain Q;
  // denominator coprime to ell is fine wherever it lands
  TruncSeries<RatDomain> ok(Q, 5);
  ok.at(0) = 1;
  ok.at(5) = mpq_class(1, 691);
  CHECK_NOTHROW(ladic_decompose(ok, 5, 1));
  // denominator divisible by ell fails even in the "divisible exponent" slot
  TruncSeries<RatDomain> bad(Q, 5);
  bad.at(0) = 1;
  bad.at(5) = mpq_class(1, 5);
  CHECK_THROWS_AS(ladic_decompose(bad, 5, 1), divisibility_violation);
  // and a unit-valuation coefficient in a slot demanding ell | a fails too
  TruncSeries<RatDomain> bad2(Q, 2);
  bad2.at(0) = 1;
  bad2.at(1) = mpq_class(3, 7);
  CHECK_THROWS_AS(ladic_decompose(bad2, 5, 1), divisibility_violation);
}

TEST_CASE("divisibility law and recomposition fuzz") {
  auto suite = selftest_ladic(30, 0xabcdefULL);
  for (const auto& [what, good] : suite.checks) {
    INFO(what);
    CHECK(good);
  }
}
