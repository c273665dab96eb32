#pragma once

#include "modforms.hpp"

namespace pkcong {

struct SuiteResult {
  std::string name;
  std::vector<std::pair<std::string, bool>> checks;

  bool ok() const {
    for (const auto& [_, good] : checks)
      if (!good) return false;
    return true;
  }
  void add(const std::string& what, bool good) { checks.emplace_back(what, good); }
};

namespace detail {

// Deterministic generator independent of the standard library's
// distribution implementations.
struct SplitMix {
  u64 state;
  explicit SplitMix(u64 seed) : state(seed) {}
  u64 next() {
    state += 0x9e3779b97f4a7c15ULL;
    u64 z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [lo, hi]
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<u64>(hi - lo + 1));
  }
};

}  // namespace detail

// Divisibility law of the power decomposition: every coefficient a_j of
// f^{ell^m} is divisible by ell^{m - min(m, v_ell(j))}, and the canonical
// decomposition recomposes to f^{ell^m} exactly.
inline SuiteResult selftest_ladic(int samples = 100, u64 seed = 0x5eed5eedULL) {
  SuiteResult suite{"ladic", {}};
  detail::SplitMix rng(seed);
  IntDomain Z;
  const long len = 60;
  bool law_ok = true, recompose_ok = true;
  for (int s = 0; s < samples; ++s) {
    TruncSeries<IntDomain> f(Z, len - 1);
    for (long i = 0; i < len; ++i) f.at(i) = static_cast<long>(rng.range(-10, 10));
    for (u64 ell : {5ull, 7ull}) {
      for (unsigned m : {1u, 2u}) {
        u64 e = checked_pow_u64(ell, m);
        auto g = pow(f, e, len - 1);
        try {
          auto dec = ladic_decompose(g, ell, m);
          recompose_ok = recompose_ok && equal_series(recompose(dec, Z, g.order()), g);
        } catch (const divisibility_violation&) {
          law_ok = false;
        }
      }
    }
  }
  suite.add("coefficient divisibility ell^{m-min(m,v(j))} | a_j (100 random series)", law_ok);
  suite.add("decompose-then-recompose is the identity", recompose_ok);

  // m=1 special case on series already living in q^ell: f(q^ell)^ell splits
  // into exponents divisible by ell^2 and an ell-multiple remainder.
  bool handy_ok = true;
  for (int s = 0; s < 10; ++s) {
    TruncSeries<IntDomain> f(Z, 11);
    for (long i = 0; i <= 11; ++i) f.at(i) = static_cast<long>(rng.range(-10, 10));
    for (u64 ell : {5ull, 7ull}) {
      long N = static_cast<long>(11 * ell * ell);
      auto fsub = substitute_qpower(f, static_cast<long>(ell), N);
      auto g = pow(fsub, ell, N);
      for (long j = 0; j <= N; ++j) {
        if (g.at(j) == 0) continue;
        if (j % static_cast<long>(ell) != 0) handy_ok = false;
        if (j % static_cast<long>(ell * ell) != 0 && g.at(j) % static_cast<long>(ell) != 0)
          handy_ok = false;
      }
    }
  }
  suite.add("power of a q^ell series splits along ell^{k+1} / ell^k exponents", handy_ok);
  return suite;
}

// E_{ell^{m-1}(ell-1)} == 1 (mod ell^m) coefficientwise.
inline SuiteResult selftest_eisenstein(long N = 300) {
  SuiteResult suite{"eisenstein", {}};
  const std::pair<u64, unsigned> cases[] = {{5, 1}, {7, 1}, {11, 1}, {13, 1}, {5, 2}};
  for (auto [ell, m] : cases) {
    auto rep = eisenstein_congruence_check(ell, m, N);
    suite.add("E_" + std::to_string(rep.weight) + " == 1 (mod " + std::to_string(ell) + "^" +
                  std::to_string(m) + ") to order " + std::to_string(N),
              rep.holds && rep.covers_target);
  }
  return suite;
}

// Exhaustive small sweep of the constant-term identity.
inline SuiteResult selftest_cko(long n_max = 2, long k_max = 24, long N = 48) {
  SuiteResult suite{"cko", {}};
  for (long n = 0; n <= n_max; ++n) {
    auto fs = basis_mk(12 * n + 14, N);
    bool all_zero = true;
    for (long k = 4; k <= k_max; k += 2) {
      auto gs = basis_mk(k, N);
      for (const auto& f : fs)
        for (const auto& g : gs)
          if (cko_constant_term(n, k, f, g, N) != 0) all_zero = false;
    }
    suite.add("const(f g / (Delta^{n+D} Etilde)) = 0 for all f in M_" + std::to_string(12 * n + 14) +
                  ", g in M_k, k <= " + std::to_string(k_max),
              all_zero);
  }
  return suite;
}

// tau/p_k convolution identities and the prefix divisibility transfer.
inline SuiteResult selftest_tau(long N = 100) {
  SuiteResult suite{"tau", {}};
  struct Case {
    long long k;
    u64 ell;
    unsigned m;
    unsigned r;
  };
  const Case cases[] = {{1, 5, 1, 1}, {1, 5, 2, 1}, {1, 5, 2, 2}, {2, 7, 1, 1}};
  for (auto c : cases) {
    auto rep = tau_congruence_check(c.k, c.ell, c.m, c.r, N);
    std::string tag = "(k=" + std::to_string(c.k) + ", ell=" + std::to_string(c.ell) +
                      ", m=" + std::to_string(c.m) + ", r=" + std::to_string(c.r) + ")";
    suite.add("tau-from-p_k convolution identity " + tag, rep.eq_tau_from_pk);
    suite.add("p_k-from-tau convolution identity " + tag, rep.eq_pk_from_tau);
    suite.add("prefix divisibility transfer " + tag, rep.transfer_ok);
  }
  auto tau15 = tau_series(1, 5, 1, 250);
  bool tau5_ok = tau15.at(5) == 4830;
  bool prefix_ok = true;
  for (long t = 0; 5 * t <= 250; ++t)
    if (mpz_fdiv_ui(tau15.at(5 * t).get_mpz_t(), 5) != 0) prefix_ok = false;
  suite.add("tau(5) = 4830", tau5_ok);
  suite.add("tau(5n) == 0 (mod 5) for 5n <= 250", prefix_ok);
  return suite;
}

// Weight bookkeeping of the proof scaffolding, plus the normalized leading
// behaviour of (E_K/Delta^n)^{ell^m} and the vanishing partial sums against
// tau.
inline SuiteResult selftest_scaffold(int n_count = 20) {
  SuiteResult suite{"scaffold", {}};
  struct Case {
    long long k;
    u64 ell;
    unsigned m;
  };
  const Case cases[] = {{1, 5, 1}, {1, 7, 1}, {1, 11, 1}, {1, 5, 2}};
  for (auto c : cases) {
    bool ok = true;
    long long n0 = finite_bound(c.k, c.ell, c.m);
    for (long long n = n0; n < n0 + n_count; ++n) {
      try {
        auto sc = scaffold(c.k, c.ell, c.m, n);
        mpz_class lhs = mpz_class(checked_pow_u64(c.ell, c.m)) * static_cast<long>(sc.eis_weight) +
                        sc.eis_exponent * mpz_class(checked_pow_u64(c.ell, c.m - 1)) *
                            (static_cast<long>(c.ell) - 1);
        ok = ok && lhs == sc.weight && sc.eis_exponent > 0;
      } catch (const error&) {
        ok = false;
      }
    }
    suite.add("weight identity and positivity, k=" + std::to_string(c.k) + ", ell=" +
                  std::to_string(c.ell) + ", m=" + std::to_string(c.m) + ", " +
                  std::to_string(n_count) + " admissible n",
              ok);
  }

  bool lead_ok = true;
  for (long long n = 1; n <= 6; ++n) {
    auto dec = expansion_decomposition(1, 5, 1, n);
    if (dec.c(0, static_cast<long>(-n)) != 1) lead_ok = false;
    for (unsigned i = 1; i <= 1; ++i)
      if (dec.c(i, static_cast<long>(-n * 5)) != 0) lead_ok = false;
  }
  suite.add("expansion of (E_K/Delta^n)^{ell}: c_0(-n) = 1 and c_1(-5n) = 0", lead_ok);

  bool almost_ok = true;
  for (long long n = 1; n <= 10; ++n) {
    mpq_class s = almost_identity_sum(1, 5, 1, n);
    RatDomain Q;
    if (!Q.divisible_by_ell_pow(s, 5, 1)) almost_ok = false;
  }
  suite.add("sum_j c_0(-j) tau(5j) == 0 (mod 5) for n <= 10", almost_ok);
  return suite;
}

inline SuiteResult run_selftest(const std::string& name) {
  if (name == "ladic") return selftest_ladic();
  if (name == "eisenstein") return selftest_eisenstein();
  if (name == "cko") return selftest_cko();
  if (name == "tau") return selftest_tau();
  if (name == "scaffold") return selftest_scaffold();
  throw error("unknown selftest suite: " + name);
}

}  // namespace pkcong
