#include <catch2/catch_amalgamated.hpp>

#include <pkcong/modforms.hpp>
#include <pkcong/selftest.hpp>

using namespace pkcong;

namespace {

// Oracle: q prod_{n<=N}(1-q^n)^{24} by direct polynomial multiplication.
TruncSeries<IntDomain> delta_bruteforce(long N) {
  IntDomain Z;
  TruncSeries<IntDomain> r(Z, N);
  r.at(1) = 1;
  for (int rep = 0; rep < 24; ++rep)
    for (long n = 1; n <= N; ++n) {
      TruncSeries<IntDomain> f(Z, N);
      f.at(0) = 1;
      f.at(n) = -1;
      r = mul_schoolbook(r, f, N);
    }
  return r;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(4) == mpq_class(-1, 30));
  CHECK(bernoulli(6) == mpq_class(1, 42));
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(17) == 0);
  CHECK_THROWS_AS(bernoulli(201), cap_exceeded);
}

TEST_CASE("sigma divisor sums") {
  CHECK(sigma(1, 3) == 1);
  CHECK(sigma(2, 3) == 9);
  CHECK(sigma(6, 1) == 12);
  CHECK(sigma(12, 0) == 6);
  CHECK_THROWS_AS(sigma(0, 1), error);
}

TEST_CASE("eisenstein expansions") {
  auto e4 = eisenstein(4, 2);
  CHECK(e4.weight == 4);
  CHECK(e4.f.coeff(0) == 1);
  CHECK(e4.f.coeff(1) == 240);
  CHECK(e4.f.coeff(2) == 2160);
  // -2k/B_k recomputed directly
  CHECK(mpq_class(-8) / bernoulli(4) == 240);

  CHECK(eisenstein(6, 1).f.coeff(1) == -504);
  CHECK(eisenstein(14, 1).f.coeff(1) == -24);
  CHECK(eisenstein(12, 1).f.coeff(1) == mpq_class(65520, 691));
  CHECK_THROWS_AS(eisenstein(5, 3), odd_weight);
}

TEST_CASE("eisenstein residue path") {
  auto e4m = eisenstein_mod(4, 100, Modulus(5, 1));
  CHECK(e4m.at(0) == 1);
  for (long n = 1; n <= 100; ++n) CHECK(e4m.at(n) == 0);  // E_4 == 1 (mod 5)
  // 691 divides the reduced denominator of E_12's coefficient
  CHECK_THROWS_AS(eisenstein_mod(12, 4, Modulus(691, 1)), not_a_unit);
}

TEST_CASE("eisenstein congruence checks") {
  auto r1 = eisenstein_congruence_check(5, 1, 120);
  CHECK(r1.weight == 4);
  CHECK(r1.holds);
  CHECK(r1.covers_target);
  auto r2 = eisenstein_congruence_check(5, 2, 80);
  CHECK(r2.weight == 20);
  CHECK(r2.power == 2);  // ord_5(40) + 1
  CHECK(r2.holds);
  auto r3 = eisenstein_congruence_check(7, 1, 120);
  CHECK(r3.weight == 6);
  CHECK(r3.holds);
  CHECK_THROWS_AS(eisenstein_congruence_check(211, 2, 10), cap_exceeded);
}

TEST_CASE("delta powers and tau values") {
  auto oracle = delta_bruteforce(6);
  auto t1 = delta_power(1, 6);
  for (long n = 0; n <= 6; ++n) CHECK(t1.at(n) == oracle.at(n));
  CHECK(t1.at(0) == 0);
  CHECK(t1.at(1) == 1);
  CHECK(t1.at(2) == -24);
  CHECK(t1.at(3) == 252);
  CHECK(t1.at(4) == -1472);
  CHECK(t1.at(5) == 4830);

  auto t2 = delta_power(2, 8);
  CHECK(t2.at(0) == 0);
  CHECK(t2.at(1) == 0);
  CHECK(t2.at(2) == 1);

  CHECK_THROWS_AS(delta_power(0, 5), error);
  CHECK_THROWS_AS(delta_power(3, 2), error);

  auto ts = tau_series(1, 5, 1, 10);
  CHECK(ts.delta == 1);
  CHECK(ts.at(5) == 4830);
}

TEST_CASE("tau as a convolution of p_k against phi^{k ell^{2m}}") {
  IntDomain Z;
  const long N = 40;
  auto tau = tau_series(1, 5, 1, N);
  auto conv = mul(pk_series(1, Z, N).series, pow(euler_phi(Z, N), 25, N), N);
  for (long n = 1; n <= N; ++n) CHECK(tau.at(n) == conv.at(n - 1));  // shift by delta = 1
}

TEST_CASE("dimension formula") {
  CHECK(dim_mk(14) == 1);
  CHECK(dim_mk(12) == 2);
  CHECK(dim_mk(2) == 0);
  CHECK(dim_mk(0) == 1);
  CHECK(dim_mk(7) == 0);
  for (long d = 1; d <= 5; ++d) CHECK(dim_mk(12 * d) == d + 1);
}

TEST_CASE("e_tilde selection") {
  CHECK(e_tilde(12, 5).weight == 0);
  CHECK(e_tilde(12, 5).f.coeff(0) == 1);
  CHECK(e_tilde(4, 5).weight == 4);
  CHECK(e_tilde(26, 5).weight == 14);
  CHECK(e_tilde(8, 5).weight == 8);
  CHECK(e_tilde(8, 5).f.coeff(1) == 480);  // E_4^2
  CHECK(e_tilde(10, 5).weight == 10);
  CHECK_THROWS_AS(e_tilde(7, 5), odd_weight);
}

TEST_CASE("basis monomials match the dimension with independent leading rows") {
  CHECK(basis_mk(14, 6).size() == 1);
  CHECK(basis_mk(12, 6).size() == 2);
  CHECK(basis_mk(4, 6).size() == 1);
  CHECK(basis_mk(2, 6).empty());
  CHECK(basis_mk(0, 6).size() == 1);

  for (long k = 4; k <= 60; k += 2) {
    auto basis = basis_mk(k, 70);
    long d = dim_mk(k);
    REQUIRE(static_cast<long>(basis.size()) == d);
    // Gaussian elimination over Q on the first d coefficients of each row
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& b : basis) {
      std::vector<mpq_class> row;
      for (long j = 0; j < d; ++j) row.push_back(b.f.coeff(j));
      rows.push_back(std::move(row));
    }
    long rank = 0;
    for (long col = 0; col < d && rank < d; ++col) {
      long piv = -1;
      for (long i = rank; i < d; ++i)
        if (rows[i][col] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows[rank], rows[piv]);
      for (long i = rank + 1; i < d; ++i) {
        if (rows[i][col] == 0) continue;
        mpq_class f = rows[i][col] / rows[rank][col];
        for (long j = col; j < d; ++j) rows[i][j] -= f * rows[rank][j];
      }
      ++rank;
    }
    CHECK(rank == d);
  }
}

TEST_CASE("constant term identity cases") {
  const long N = 48;
  auto f = mul_forms(pow_form(eisenstein(4, N), 2), eisenstein(6, N));  // E_4^2 E_6 in M_14
  CHECK(cko_constant_term(0, 4, f, eisenstein(4, N), N) == 0);
  CHECK(cko_constant_term(0, 6, f, eisenstein(6, N), N) == 0);
  for (const auto& b : basis_mk(26, N)) CHECK(cko_constant_term(1, 12, b, delta_form(N), N) == 0);

  CHECK_THROWS_AS(cko_constant_term(1, 4, f, eisenstein(4, N), N), weight_mismatch);
  CHECK_THROWS_AS(cko_constant_term(0, 6, f, eisenstein(4, N), N), weight_mismatch);
  CHECK_THROWS_AS(cko_constant_term(2, 24, basis_mk(38, 4)[0], basis_mk(24, 4)[0], 4),
                  insufficient_precision);
}

TEST_CASE("E_14 over Delta has leading exponent -1 with coefficient 1") {
  auto e14 = eisenstein(14, 20);
  auto q = laurent_mul(e14.f, laurent_inverse(normalize(delta_form(20).f)));
  CHECK(q.lead == -1);
  CHECK(q.coeff(-1) == 1);
}

TEST_CASE("scaffold weight bookkeeping") {
  auto sc = scaffold(1, 5, 1, 1);
  CHECK(sc.weight == 50);
  CHECK(sc.weight_quot == 50);
  CHECK(sc.eis_weight == 6);
  CHECK(sc.eis_exponent == 5);

  for (long long n = 1; n <= 30; ++n) {
    auto s = scaffold(1, 5, 1, n);
    CHECK(mpz_fdiv_ui(s.weight.get_mpz_t(), 1) == 0);  // ell^{m-1} = 1 here
    CHECK(mpz_class(5) * static_cast<long>(s.eis_weight) +
              s.eis_exponent * 4 ==
          s.weight);
  }
  auto s2 = scaffold(1, 5, 2, finite_bound(1, 5, 2));
  CHECK(mpz_fdiv_ui(s2.weight.get_mpz_t(), 5) == 0);  // ell^{m-1} divides w
  CHECK(s2.eis_exponent > 0);

  CHECK_THROWS_AS(scaffold(2, 5, 2, 100), hypothesis_violated);
  CHECK_THROWS_AS(scaffold(1, 5, 1, 0), range_too_small);
}

TEST_CASE("expansion decomposition is normalized at the leading slot") {
  for (long long n = 1; n <= 4; ++n) {
    auto dec = expansion_decomposition(1, 5, 1, n);
    CHECK(dec.c(0, static_cast<long>(-n)) == 1);
    CHECK(dec.c(1, static_cast<long>(-5 * n)) == 0);
  }
  auto dec2 = expansion_decomposition(1, 5, 2, finite_bound(1, 5, 2) + 1);
  long long n2 = finite_bound(1, 5, 2) + 1;
  CHECK(dec2.c(0, static_cast<long>(-n2)) == 1);
  CHECK(dec2.c(1, static_cast<long>(-5 * n2)) == 0);
  CHECK(dec2.c(2, static_cast<long>(-25 * n2)) == 0);
}

TEST_CASE("partial sums against tau vanish mod ell") {
  RatDomain Q;
  for (long long n = 1; n <= 10; ++n) {
    mpq_class s = almost_identity_sum(1, 5, 1, n);
    INFO("n = " << n << ", sum = " << s.get_str());
    CHECK(Q.divisible_by_ell_pow(s, 5, 1));
  }
}

TEST_CASE("tau congruence transfer checks") {
  auto rep = tau_congruence_check(1, 5, 1, 1, 60);
  CHECK(rep.eq_tau_from_pk);
  CHECK(rep.eq_pk_from_tau);
  CHECK(rep.transfer_ok);
  CHECK(rep.pk_prefix[0]);
  CHECK(rep.tau_prefix[0]);

  auto rep7 = tau_congruence_check(1, 7, 1, 1, 49);
  CHECK(rep7.eq_tau_from_pk);
  CHECK(rep7.eq_pk_from_tau);
  CHECK(rep7.transfer_ok);
  CHECK(rep7.pk_prefix[0]);  // p(7n+5) holds on the prefix
  CHECK(rep7.tau_prefix[0]);

  auto rep52 = tau_congruence_check(1, 5, 2, 2, 60);
  CHECK(rep52.eq_tau_from_pk);
  CHECK(rep52.eq_pk_from_tau);
  CHECK(rep52.transfer_ok);

  CHECK_THROWS_AS(tau_congruence_check(1, 5, 1, 3, 40), error);  // r > 2m
}
