#include <catch2/catch_amalgamated.hpp>

#include <pkcong/multipartition.hpp>

using namespace pkcong;

TEST_CASE("pk_enumerate counts tuples of partitions") {
  CHECK(pk_enumerate(2, 3) == 10);
  CHECK(pk_enumerate(1, 5) == 7);
  CHECK(pk_enumerate(3, 0) == 1);
  CHECK(pk_enumerate(1, 0) == 1);
  CHECK(pk_enumerate(2, 1) == 2);
  CHECK_THROWS_AS(pk_enumerate(1, 31), oracle_scale_exceeded);
  CHECK_THROWS_AS(pk_enumerate(11, 5), oracle_scale_exceeded);
  CHECK_THROWS_AS(pk_enumerate(0, 5), oracle_scale_exceeded);
  CHECK_THROWS_AS(pk_enumerate(2, -1), oracle_scale_exceeded);
}

TEST_CASE("pk_series known prefixes") {
  IntDomain Z;
  auto p1 = pk_series(1, Z, 5);
  CHECK(equal_series(p1.series, make_series(Z, {1, 1, 2, 3, 5, 7})));
  auto p2 = pk_series(2, Z, 3);
  CHECK(equal_series(p2.series, make_series(Z, {1, 2, 5, 10})));
  auto pm = pk_series(1, ModDomain(11, 1), 6);
  CHECK(pm.series.at(6) == 0);  // p(6) = 11
}

TEST_CASE("pk_at honors the negative-argument convention") {
  IntDomain Z;
  CHECK(pk_at(1, -1, Z) == 0);
  CHECK(pk_at(1, 0, Z) == 1);
  CHECK(pk_at(10, 8, Z) == pk_enumerate(10, 8));
  CHECK(pk_at(1, -100, ModDomain(5, 1)) == 0);
}

TEST_CASE("series equals enumeration for k <= 5, n <= 20") {
  IntDomain Z;
  for (long long k = 1; k <= 5; ++k) {
    auto p = pk_series(k, Z, 20);
    for (long n = 0; n <= 20; ++n) CHECK(p.series.at(n) == pk_enumerate(k, n));
  }
}

TEST_CASE("residue series equals reduced exact series") {
  IntDomain Z;
  const Modulus mods[] = {Modulus(5, 1), Modulus(5, 2), Modulus(7, 1),
                          Modulus(11, 1), Modulus(11, 2), Modulus(13, 1)};
  for (long long k = 1; k <= 5; ++k) {
    auto exact = pk_series(k, Z, 200);
    for (const auto& M : mods) {
      auto modp = pk_series(k, ModDomain(M), 200);
      for (long n = 0; n <= 200; ++n)
        CHECK(modp.series.at(n) == mpz_fdiv_ui(exact.series.at(n).get_mpz_t(), M.value));
    }
  }
}

TEST_CASE("convolution identity p_{k1+k2} = p_{k1} * p_{k2}") {
  IntDomain Z;
  for (auto [k1, k2] : {std::pair<long long, long long>{1, 1}, {2, 3}, {4, 7}}) {
    auto lhs = pk_series(k1 + k2, Z, 60).series;
    auto rhs = mul(pk_series(k1, Z, 60).series, pk_series(k2, Z, 60).series, 60);
    CHECK(equal_series(lhs, rhs));
  }
}

TEST_CASE("p satisfies the pentagonal recurrence") {
  IntDomain Z;
  auto p = pk_series(1, Z, 120).series;
  for (long n = 1; n <= 120; ++n) {
    mpz_class acc = 0;
    for (long j = 1;; ++j) {
      long g1 = j * (3 * j - 1) / 2;
      long g2 = j * (3 * j + 1) / 2;
      if (g1 > n) break;
      mpz_class term = p.coeff(n - g1) + p.coeff(n - g2);
      if (j % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    CHECK(p.at(n) == acc);
  }
}

TEST_CASE("both evaluation orders agree on both domains") {
  IntDomain Z;
  CHECK(equal_series(pk_series_power_first(7, Z, 150).series,
                     pk_series_invert_first(7, Z, 150).series));
  ModDomain M(11, 2);
  CHECK(equal_series(pk_series_power_first(7, M, 150).series,
                     pk_series_invert_first(7, M, 150).series));
  CHECK(equal_series(pk_series_power_first(1, Z, 80).series,
                     pk_series_invert_first(1, Z, 80).series));
}

TEST_CASE("exact coefficients are nonnegative with p_k(0) = 1") {
  IntDomain Z;
  for (long long k : {1LL, 5LL, 10LL, 95LL}) {
    auto p = pk_series(k, Z, 100);
    CHECK(p.series.at(0) == 1);
    for (long n = 0; n <= 100; ++n) CHECK(p.series.at(n) >= 0);
  }
}

TEST_CASE("invalid arguments") {
  IntDomain Z;
  CHECK_THROWS_AS(pk_series(0, Z, 5), error);
  CHECK_THROWS_AS(pk_series(1, Z, -1), error);
}
