#pragma once

#include <mutex>

#include "certifier.hpp"

namespace pkcong {

inline constexpr unsigned kBernoulliCap = 200;

// Bernoulli numbers as exact rationals (B_1 = -1/2), by the convolution
// recurrence sum_{j=0}^{n} C(n+1,j) B_j = 0. Memoized behind a lock; the
// table is append-only and values are immutable once published.
inline mpq_class bernoulli(unsigned k) {
  if (k > kBernoulliCap)
    throw cap_exceeded("bernoulli index " + std::to_string(k) + " exceeds cap " +
                       std::to_string(kBernoulliCap));
  static std::vector<mpq_class> table{mpq_class(1)};
  static std::mutex lock;
  std::scoped_lock guard(lock);
  while (table.size() <= k) {
    unsigned n = static_cast<unsigned>(table.size());
    mpq_class acc = 0;
    for (unsigned j = 0; j < n; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), n + 1, j);
      acc += mpq_class(binom) * table[j];
    }
    mpq_class b = -acc / mpq_class(static_cast<long>(n) + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[k];
}

// sigma_r(n) = sum_{d | n} d^r.
inline mpz_class sigma(long long n, unsigned r) {
  if (n < 1) throw error("sigma needs n >= 1");
  mpz_class total = 0;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), r);
    total += t;
    long long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e), r);
      total += t;
    }
  }
  return total;
}

// A formal q-expansion with a weight tag. The weight is bookkeeping from the
// construction; nothing analytic is verified.
struct QExpansion {
  long weight = 0;
  LaurentSeries<RatDomain> f;

  long order() const { return f.order(); }
};

inline QExpansion qexp_one(long N) {
  LaurentSeries<RatDomain> s(RatDomain{}, 0, N);
  s.at(0) = 1;
  return QExpansion{0, s};
}

inline QExpansion mul_forms(const QExpansion& a, const QExpansion& b) {
  return QExpansion{a.weight + b.weight, laurent_mul(a.f, b.f)};
}

inline QExpansion pow_form(const QExpansion& a, unsigned long long e) {
  return QExpansion{a.weight * static_cast<long>(e), laurent_pow(a.f, e)};
}

// E_k = 1 - (2k/B_k) sum_{n>=1} sigma_{k-1}(n) q^n, exact rationals.
inline QExpansion eisenstein(unsigned k, long N) {
  if (k % 2 != 0) throw odd_weight("Eisenstein weight must be even");
  if (k < 4) throw error("Eisenstein weight must be >= 4");
  mpq_class c = mpq_class(-2 * static_cast<long>(k)) / bernoulli(k);
  c.canonicalize();
  LaurentSeries<RatDomain> s(RatDomain{}, 0, N);
  s.at(0) = 1;
  for (long n = 1; n <= N; ++n) s.at(n) = c * mpq_class(sigma(n, k - 1));
  return QExpansion{static_cast<long>(k), s};
}

// Residue-domain E_k; the reduced leading rational needs an ell-free
// denominator.
inline TruncSeries<ModDomain> eisenstein_mod(unsigned k, long N, const Modulus& M) {
  if (k % 2 != 0) throw odd_weight("Eisenstein weight must be even");
  if (k < 4) throw error("Eisenstein weight must be >= 4");
  mpq_class c = mpq_class(-2 * static_cast<long>(k)) / bernoulli(k);
  c.canonicalize();
  ModDomain dom(M);
  u64 num = reduce(mpz_class(c.get_num()), M).value;
  u64 den = reduce(mpz_class(c.get_den()), M).value;
  u64 cm = dom.mul(num, dom.inv(den));  // throws not_a_unit when ell | den
  TruncSeries<ModDomain> s(dom, N);
  s.at(0) = dom.one();
  for (long n = 1; n <= N; ++n) s.at(n) = dom.mul(cm, dom.from_mpz(sigma(n, k - 1)));
  return s;
}

struct EisensteinCongruenceReport {
  unsigned weight = 0;   // ell^{m-1}(ell-1)
  u64 ell = 0;
  unsigned m = 0;
  unsigned power = 0;    // ord_ell(2k) + 1; congruence verified mod ell^power
  long order = 0;
  bool holds = false;
  bool covers_target = false;  // power >= m, i.e. E == 1 (mod ell^m)
  long first_failure = -1;
};

// E_{ell^{m-1}(ell-1)} == 1 (mod ell^{ord_ell(2k)+1}) coefficientwise to
// order N, checked on the exact rational expansion via ell-adic valuations.
inline EisensteinCongruenceReport eisenstein_congruence_check(u64 ell, unsigned m, long N) {
  require_congruence_prime(ell);
  if (m < 1) throw error("need m >= 1");
  mpz_class wz = mpz_class(static_cast<unsigned long>(ell) - 1);
  for (unsigned i = 1; i < m; ++i) wz *= static_cast<unsigned long>(ell);
  if (wz > static_cast<long>(kBernoulliCap))
    throw cap_exceeded("Eisenstein weight " + wz.get_str() + " exceeds Bernoulli cap");
  unsigned k = static_cast<unsigned>(to_ll(wz));

  EisensteinCongruenceReport rep;
  rep.weight = k;
  rep.ell = ell;
  rep.m = m;
  rep.power = ell_valuation(static_cast<u64>(2) * k, ell) + 1;
  rep.order = N;
  rep.covers_target = rep.power >= m;

  mpq_class c = mpq_class(-2 * static_cast<long>(k)) / bernoulli(k);
  c.canonicalize();
  RatDomain Q;
  rep.holds = true;
  for (long n = 1; n <= N; ++n) {
    mpq_class an = c * mpq_class(sigma(n, k - 1));
    if (!Q.divisible_by_ell_pow(an, ell, rep.power)) {
      rep.holds = false;
      rep.first_failure = n;
      break;
    }
  }
  return rep;
}

// Fourier coefficients of Delta^delta = q^delta prod (1-q^n)^{24 delta}.
// When built from congruence parameters, delta = delta_{k,ell,m} and the
// coefficients are the tau_{k,m}(n); the parameter fields are zero when the
// series was built from a bare exponent.
struct TauSeries {
  long long k = 0;
  u64 ell = 0;
  unsigned m = 0;
  mpz_class delta;
  TruncSeries<IntDomain> coeffs;  // tau(0..N); zero below delta, 1 at delta

  const mpz_class& at(long n) const { return coeffs.at(n); }
};

inline TauSeries delta_power(const mpz_class& delta, long N) {
  if (delta < 1) throw error("delta must be a positive integer");
  if (N < to_ll(delta)) throw error("order must be >= delta");
  long d = static_cast<long>(to_ll(delta));
  IntDomain Z;
  auto phi24d = pow(euler_phi(Z, N - d), static_cast<unsigned long long>(24) * d, N - d);
  TauSeries t;
  t.delta = delta;
  t.coeffs = TruncSeries<IntDomain>(Z, N);
  for (long n = d; n <= N; ++n) t.coeffs.at(n) = phi24d.at(n - d);
  return t;
}

inline TauSeries tau_series(long long k, u64 ell, unsigned m, long N) {
  DeltaParams dp = delta_params(k, ell, m);
  TauSeries t = delta_power(dp.delta(m), N);
  t.k = k;
  t.ell = ell;
  t.m = m;
  return t;
}

// dim M_k: floor(k/12) when k == 2 (mod 12), floor(k/12)+1 otherwise;
// zero for odd or negative weight.
inline long dim_mk(long k) {
  if (k < 0 || k % 2 != 0) return 0;
  return k % 12 == 2 ? k / 12 : k / 12 + 1;
}

// The auxiliary form selected by k mod 12: {1, E14, E4, E6, E4^2, E4 E6}.
inline QExpansion e_tilde(long k, long N) {
  if (k % 2 != 0) throw odd_weight("e_tilde needs even weight");
  if (k < 0) throw error("e_tilde needs nonnegative weight");
  switch (k % 12) {
    case 0: return qexp_one(N);
    case 2: return eisenstein(14, N);
    case 4: return eisenstein(4, N);
    case 6: return eisenstein(6, N);
    case 8: return pow_form(eisenstein(4, N), 2);
    default: return mul_forms(eisenstein(4, N), eisenstein(6, N));
  }
}

// The monomials E_4^a E_6^b with 4a + 6b = k, which span M_k; there are
// exactly dim M_k of them.
inline std::vector<QExpansion> basis_mk(long k, long N) {
  std::vector<QExpansion> out;
  if (k < 0 || k % 2 != 0) return out;
  if (k == 0) {
    out.push_back(qexp_one(N));
    return out;
  }
  QExpansion e4 = eisenstein(4, N);
  QExpansion e6 = eisenstein(6, N);
  for (long b = 0; 6 * b <= k; ++b) {
    if ((k - 6 * b) % 4 != 0) continue;
    long a = (k - 6 * b) / 4;
    QExpansion mono = qexp_one(N);
    for (long i = 0; i < a; ++i) mono = mul_forms(mono, e4);
    for (long i = 0; i < b; ++i) mono = mul_forms(mono, e6);
    out.push_back(std::move(mono));
  }
  return out;
}

// Delta = q prod (1-q^n)^{24} as a weight-12 expansion over Q.
inline QExpansion delta_form(long N) {
  RatDomain Q;
  auto phi24 = pow(euler_phi(Q, N - 1), 24, N - 1);
  LaurentSeries<RatDomain> s(Q, 1, N);
  for (long n = 1; n <= N; ++n) s.at(n) = phi24.at(n - 1);
  return QExpansion{12, s};
}

// const( f g / (Delta^{n + dim M_k} Etilde_k) ), computed exactly; the
// constant-term theorem says this vanishes for f in M_{12n+14}, g in M_k.
inline mpq_class cko_constant_term(long n, long k, const QExpansion& f, const QExpansion& g, long N) {
  if (f.weight != 12 * n + 14)
    throw weight_mismatch("f has weight " + std::to_string(f.weight) + ", expected " +
                          std::to_string(12 * n + 14));
  if (g.weight != k)
    throw weight_mismatch("g has weight " + std::to_string(g.weight) + ", expected " +
                          std::to_string(k));
  long D = dim_mk(k);
  QExpansion denom = pow_form(delta_form(N), static_cast<unsigned long long>(n + D));
  denom = mul_forms(denom, e_tilde(k, N));
  auto quot = laurent_mul(laurent_mul(f.f, g.f), laurent_inverse(normalize(denom.f)));
  if (quot.order() < 0)
    throw insufficient_precision("expansion order too small to resolve the constant term");
  return quot.coeff(0);
}

// The weight bookkeeping of the proof: for admissible n,
//   w = 12(n ell^m - delta_{k,ell,m}) + 2           (the target weight)
//   weight_quot = w / ell^{m-1}                      (integral, even)
//   eis_weight in {0,4,6} (ell=5) or {0,4,...,ell-3,ell+1}, == weight_quot (mod ell-1)
//   eis_exponent = (w - eis_weight ell^m) / (ell^{m-1}(ell-1)), a positive integer
// so that eis_weight * ell^m + eis_exponent * ell^{m-1}(ell-1) = w.
struct ProofScaffold {
  long long k = 0;
  u64 ell = 0;
  unsigned m = 0;
  long long n = 0;
  mpz_class weight;        // w
  mpz_class weight_quot;   // w / ell^{m-1}
  unsigned eis_weight = 0;
  mpz_class eis_exponent;
};

inline std::vector<unsigned> scaffold_weight_set(u64 ell) {
  std::vector<unsigned> set{0};
  if (ell == 5) {
    set.push_back(4);
    set.push_back(6);
    return set;
  }
  for (u64 w = 4; w <= ell - 3; w += 2) set.push_back(static_cast<unsigned>(w));
  set.push_back(static_cast<unsigned>(ell + 1));
  return set;
}

inline ProofScaffold scaffold(long long k, u64 ell, unsigned m, long long n) {
  DeltaParams dp = delta_params(k, ell, m);
  detail::require_hypothesis(k, ell, m);
  long long nmin = finite_bound(k, ell, m);
  if (n < nmin)
    throw range_too_small("n = " + std::to_string(n) + " below admissible threshold " +
                          std::to_string(nmin));
  ProofScaffold sc;
  sc.k = k;
  sc.ell = ell;
  sc.m = m;
  sc.n = n;
  u64 modm = checked_pow_u64(ell, m);
  u64 modm1 = checked_pow_u64(ell, m - 1);
  sc.weight = 12 * (mpz_class(modm) * static_cast<long>(n) - dp.delta(m)) + 2;
  if (sc.weight % mpz_class(modm1) != 0) throw error("scaffold: ell^{m-1} does not divide w");
  sc.weight_quot = sc.weight / mpz_class(modm1);
  if (sc.weight_quot % 2 != 0) throw error("scaffold: w / ell^{m-1} is odd");
  u64 cls = mpz_fdiv_ui(sc.weight_quot.get_mpz_t(), ell - 1);
  bool found = false;
  for (unsigned cand : scaffold_weight_set(ell)) {
    if (cand % (ell - 1) == cls) {
      sc.eis_weight = cand;
      found = true;
      break;
    }
  }
  if (!found) throw error("scaffold: no admissible Eisenstein weight in class");
  mpz_class num = sc.weight - mpz_class(modm) * static_cast<long>(sc.eis_weight);
  mpz_class den = mpz_class(modm1) * (static_cast<long>(ell) - 1);
  if (num % den != 0) throw error("scaffold: exponent not integral");
  sc.eis_exponent = num / den;
  if (sc.eis_exponent <= 0) throw error("scaffold: exponent not positive");
  return sc;
}

// The ell-adic decomposition of (E_{K}/Delta^n)^{ell^m} over Q, with K the
// scaffold weight for (k, ell, m, n). Leading exponent -n ell^m; component 0
// starts at -n with coefficient 1 and every other component vanishes at its
// own -n ell^i slot under the canonical assignment.
inline LadicDecomposition<LaurentSeries<RatDomain>> expansion_decomposition(long long k, u64 ell,
                                                                            unsigned m, long long n,
                                                                            long guard = 8) {
  ProofScaffold sc = scaffold(k, ell, m, n);
  u64 modm = checked_pow_u64(ell, m);
  long rel = static_cast<long>(static_cast<long long>(modm) * n) + guard;
  QExpansion ek = sc.eis_weight == 0 ? qexp_one(rel) : eisenstein(sc.eis_weight, rel);
  QExpansion dn = pow_form(delta_form(rel + 1), static_cast<unsigned long long>(n));
  auto unit = laurent_mul(ek.f, laurent_inverse(normalize(dn.f)));
  auto powered = laurent_pow(unit, modm);
  return ladic_decompose(powered, ell, m);
}

// sum_{j=0}^{n} c_{0,n}(-j) tau_{k,m}(j ell^m): vanishes mod ell^m for
// admissible n over certified parameters.
inline mpq_class almost_identity_sum(long long k, u64 ell, unsigned m, long long n) {
  auto dec = expansion_decomposition(k, ell, m, n);
  u64 modm = checked_pow_u64(ell, m);
  TauSeries tau = tau_series(k, ell, m, static_cast<long>(static_cast<long long>(modm) * n));
  mpq_class total = 0;
  for (long long j = 0; j <= n; ++j)
    total += dec.c(0, static_cast<long>(-j)) *
             mpq_class(tau.at(static_cast<long>(static_cast<long long>(modm) * j)));
  return total;
}

struct TauCongruenceReport {
  long long k = 0;
  u64 ell = 0;
  unsigned m = 0;
  unsigned r = 0;
  long order = 0;
  bool eq_tau_from_pk = true;   // tau(n ell^r) recomposed from p_k values and c_{r,i}
  bool eq_pk_from_tau = true;   // p_k(n ell^r - delta) recomposed from tau values and b_{r,i}
  long long first_failure = -1;
  std::vector<bool> pk_prefix;   // [s-1]: p_k(ell^s t - delta) == 0 mod ell^s on the prefix
  std::vector<bool> tau_prefix;  // [s-1]: tau(ell^s t) == 0 mod ell^s on the prefix
  bool transfer_ok = false;      // prefix divisibility transfers both ways
};

// Checks the two convolution identities tying tau_{k,m} to p_k through the
// decomposition of phi^{k ell^{2m}} (and of its reciprocal), then the
// prefix form of the divisibility transfer between them.
inline TauCongruenceReport tau_congruence_check(long long k, u64 ell, unsigned m, unsigned r, long N) {
  if (r < 1 || r > 2 * m) throw error("need 1 <= r <= 2m");
  DeltaParams dp = delta_params(k, ell, m);
  const mpz_class& dz = dp.delta(m);
  long long d = to_ll(dz);
  if (N < d) throw error("order must be >= delta");

  TauCongruenceReport rep;
  rep.k = k;
  rep.ell = ell;
  rep.m = m;
  rep.r = r;
  rep.order = N;

  IntDomain Z;
  unsigned long long k2m =
      static_cast<unsigned long long>(k) * static_cast<unsigned long long>(checked_pow_u64(ell, 2 * m));
  auto phik = pow(euler_phi(Z, N), k2m, N);
  auto cdec = ladic_decompose(phik, ell, r);
  auto pinv = pk_series(static_cast<long long>(k2m), Z, N).series;
  auto bdec = ladic_decompose(pinv, ell, r);
  auto pk = pk_series(k, Z, N).series;
  TauSeries tau = tau_series(k, ell, m, N);

  long long modr = static_cast<long long>(checked_pow_u64(ell, r));
  auto pk_at_shifted = [&](long long arg) -> mpz_class {
    return arg < 0 ? mpz_class(0) : pk.at(static_cast<long>(arg));
  };

  for (long long n = 0; n * modr <= N; ++n) {
    mpz_class rhs_tau = 0, rhs_pk = 0;
    mpz_class ellpow = 1;
    for (unsigned i = 0; i <= r; ++i) {
      long long elli = static_cast<long long>(checked_pow_u64(ell, i));
      long long scale = static_cast<long long>(checked_pow_u64(ell, r - i));
      mpz_class inner_tau = 0, inner_pk = 0;
      for (long long j = 0; j <= n * elli; ++j) {
        if (j > cdec.comp[i].order()) break;
        long long idx = (n * elli - j) * scale;
        inner_tau += pk_at_shifted(idx - d) * cdec.comp[i].at(static_cast<long>(j));
        inner_pk += tau.at(static_cast<long>(idx)) * bdec.comp[i].at(static_cast<long>(j));
      }
      rhs_tau += ellpow * inner_tau;
      rhs_pk += ellpow * inner_pk;
      ellpow *= static_cast<long>(ell);
    }
    if (rep.eq_tau_from_pk && rhs_tau != tau.at(static_cast<long>(n * modr))) {
      rep.eq_tau_from_pk = false;
      rep.first_failure = n;
    }
    if (rep.eq_pk_from_tau && rhs_pk != pk_at_shifted(n * modr - d)) {
      rep.eq_pk_from_tau = false;
      if (rep.first_failure < 0) rep.first_failure = n;
    }
  }

  // prefix divisibility at each level s <= r
  for (unsigned s = 1; s <= r; ++s) {
    u64 mods = checked_pow_u64(ell, s);
    bool pk_ok = true, tau_ok = true;
    for (long long x = 0; x <= N; ++x) {
      if ((x + d) % static_cast<long long>(mods) == 0 && mpz_fdiv_ui(pk.at(static_cast<long>(x)).get_mpz_t(), mods) != 0)
        pk_ok = false;
    }
    for (long long t = 0; t * static_cast<long long>(mods) <= N; ++t)
      if (mpz_fdiv_ui(tau.at(static_cast<long>(t * static_cast<long long>(mods))).get_mpz_t(), mods) != 0)
        tau_ok = false;
    rep.pk_prefix.push_back(pk_ok);
    rep.tau_prefix.push_back(tau_ok);
  }
  rep.transfer_ok = true;
  bool pk_all = true, tau_all = true;
  for (unsigned s = 1; s <= r; ++s) {
    pk_all = pk_all && rep.pk_prefix[s - 1];
    tau_all = tau_all && rep.tau_prefix[s - 1];
    if (pk_all != tau_all) rep.transfer_ok = false;  // conjunction prefixes must agree
  }
  return rep;
}

}  // namespace pkcong
