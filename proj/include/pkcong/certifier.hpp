#pragma once

#include <atomic>
#include <optional>
#include <sstream>
#include <thread>
#include <tuple>
#include <variant>

#include "ladic.hpp"
#include "multipartition.hpp"

namespace pkcong {

inline void require_congruence_prime(u64 ell) {
  if (ell < 5 || !is_prime_u64(ell))
    throw invalid_prime("ell = " + std::to_string(ell) + " must be a prime >= 5");
}

inline long long to_ll(const mpz_class& x) {
  if (!mpz_fits_slong_p(x.get_mpz_t())) throw error("value exceeds desk scale: " + x.get_str());
  return mpz_get_si(x.get_mpz_t());
}

// delta_{k,ell,r} = k(ell^{2r} - 1)/24 for r = 1..m; positive integers since
// ell^2 == 1 (mod 24) for every prime ell >= 5.
struct DeltaParams {
  long long k = 0;
  u64 ell = 0;
  unsigned m = 0;
  std::vector<mpz_class> delta_r;  // delta_r[r-1] = delta_{k,ell,r}

  const mpz_class& delta(unsigned r) const { return delta_r.at(r - 1); }
};

inline DeltaParams delta_params(long long k, u64 ell, unsigned m) {
  require_congruence_prime(ell);
  if (k < 1 || m < 1) throw error("need k >= 1 and m >= 1");
  DeltaParams dp{k, ell, m, {}};
  for (unsigned r = 1; r <= m; ++r) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), ell, 2 * r);
    mpz_class num = mpz_class(static_cast<long>(k)) * (p - 1);
    if (num % 24 != 0) throw invalid_prime("24 does not divide k(ell^{2r}-1)");
    dp.delta_r.push_back(num / 24);
  }
  return dp;
}

// (-delta_{k,ell,r}) mod ell^r, canonical.
inline u64 target_residue(const DeltaParams& dp, unsigned r) {
  if (r < 1 || r > dp.m) throw error("level r out of range");
  u64 mod = checked_pow_u64(dp.ell, r);
  u64 d = mpz_fdiv_ui(dp.delta(r).get_mpz_t(), mod);
  return (mod - d) % mod;
}

// Number of integers n >= 0 with n < (k ell^r + 2 ell + 2)/24, the strict
// inequality honored exactly at integer boundary values.
inline long long finite_bound(long long k, u64 ell, unsigned r) {
  require_congruence_prime(ell);
  if (k < 1 || r < 1) throw error("need k >= 1 and r >= 1");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), ell, r);
  mpz_class t = mpz_class(static_cast<long>(k)) * p + 2 * static_cast<long>(ell) + 2;
  mpz_class count = (t + 23) / 24;  // = ceil(t/24); equals t/24 when 24 | t
  return to_ll(count);
}

// The congruence "p_k(ell^m n + a) == 0 (mod ell^m) for all n >= 0".
struct CongruenceClaim {
  u64 ell = 0;
  unsigned m = 0;
  long long k = 0;
  u64 a = 0;

  bool operator==(const CongruenceClaim&) const = default;
};

enum class CertifyMethod { TheoremMain, CorollaryChain, Lift };

inline const char* method_name(CertifyMethod m) {
  switch (m) {
    case CertifyMethod::TheoremMain: return "main";
    case CertifyMethod::CorollaryChain: return "chain";
    case CertifyMethod::Lift: return "lift";
  }
  return "?";
}

struct LevelEvidence {
  unsigned r = 0;
  u64 modulus = 0;  // ell^r
  u64 a = 0;        // (-delta_{k,ell,r}) mod ell^r
  long long bound = 0;  // count of n required by the finite criterion
  // (n, p_k(ell^r n - delta_r) mod ell^r) for the n with nonnegative argument
  std::vector<std::pair<long long, u64>> checked;
};

struct Certificate {
  CongruenceClaim claim;  // the level-m claim
  CertifyMethod method = CertifyMethod::CorollaryChain;
  bool hypothesis_ok = false;
  std::string hypothesis;            // the verified "k == -4 (mod ell^{m-1})" record
  std::vector<LevelEvidence> levels;  // evidence for every level r = 1..m
  long long base_k = 0;               // Lift only: the certified k it was shifted from
  long long shift_s = 0;              // Lift only

  bool establishes(u64 ell, unsigned r, long long k, u64 a) const {
    if (claim.ell != ell || claim.k != k) return false;
    for (const auto& lv : levels)
      if (lv.r == r && lv.a == a) return true;
    return false;
  }
};

struct Refutation {
  u64 ell = 0;
  unsigned m = 0;
  long long k = 0;
  unsigned r = 0;     // level whose finite check failed
  long long n = 0;    // first failing index
  u64 value = 0;      // p_k(ell^r n - delta_r) mod ell^r
  // A failed finite check refutes the hypothesis set of the criterion, not
  // the congruence claim itself unless the lower-level congruences hold.
  std::string note;
};

struct CertifyResult {
  std::optional<Certificate> certificate;
  std::optional<Refutation> refutation;

  bool certified() const { return certificate.has_value(); }
};

namespace detail {

// Runs the level-r finite check. Returns evidence on success, refutation on
// the first failing value. Negative arguments contribute p_k = 0 by the
// convention and are resolved without series work, so the series order needed
// is only the largest nonnegative argument.
inline std::variant<LevelEvidence, Refutation> check_level(const DeltaParams& dp, unsigned r) {
  u64 modr = checked_pow_u64(dp.ell, r);
  long long bound = finite_bound(dp.k, dp.ell, r);
  LevelEvidence ev{r, modr, target_residue(dp, r), bound, {}};
  const mpz_class& d = dp.delta(r);
  mpz_class n0z;
  mpz_cdiv_q_ui(n0z.get_mpz_t(), d.get_mpz_t(), modr);  // first n with ell^r n >= delta_r
  long long n0 = to_ll(n0z);
  if (n0 < bound) {
    long long maxarg = to_ll(mpz_class(modr) * static_cast<long>(bound - 1) - d);
    auto series = pk_series(dp.k, ModDomain(dp.ell, r), static_cast<long>(maxarg));
    for (long long n = n0; n < bound; ++n) {
      long long arg = to_ll(mpz_class(modr) * static_cast<long>(n) - d);
      u64 v = series.series.at(static_cast<long>(arg));
      ev.checked.emplace_back(n, v);
      if (v != 0)
        return Refutation{dp.ell, dp.m, dp.k, r, n, v,
                          "finite check fails; hypotheses of the criterion not established"};
    }
  }
  return ev;
}

inline std::string hypothesis_string(long long k, u64 ell, unsigned m) {
  return "k = " + std::to_string(k) + " == -4 (mod " + std::to_string(ell) + "^" +
         std::to_string(m - 1) + ")";
}

inline void require_hypothesis(long long k, u64 ell, unsigned m) {
  if (m <= 1) return;  // trivial for m = 1
  u64 modm1 = checked_pow_u64(ell, m - 1);
  if ((k + 4) % static_cast<long long>(modm1) != 0)
    throw hypothesis_violated(hypothesis_string(k, ell, m) + " fails");
}

}  // namespace detail

// Corollary-style certification: run the finite check at every level
// r = 1..m; all of them passing certifies the congruence at
// (ell^r, k, -delta_{k,ell,r}) for every r <= m.
inline CertifyResult certify_chain(long long k, u64 ell, unsigned m) {
  DeltaParams dp = delta_params(k, ell, m);
  detail::require_hypothesis(k, ell, m);
  Certificate cert;
  cert.claim = CongruenceClaim{ell, m, k, target_residue(dp, m)};
  cert.method = CertifyMethod::CorollaryChain;
  cert.hypothesis_ok = true;
  cert.hypothesis = detail::hypothesis_string(k, ell, m);
  for (unsigned r = 1; r <= m; ++r) {
    auto res = detail::check_level(dp, r);
    if (std::holds_alternative<Refutation>(res))
      return CertifyResult{std::nullopt, std::get<Refutation>(res)};
    cert.levels.push_back(std::get<LevelEvidence>(res));
  }
  return CertifyResult{cert, std::nullopt};
}

// Theorem-style certification: priors must establish the congruences at
// every level r < m; only the level-m finite condition is checked here.
// The emitted certificate absorbs the priors' level evidence, so it again
// establishes all levels r <= m.
inline CertifyResult certify_main(long long k, u64 ell, unsigned m,
                                  const std::vector<Certificate>& priors) {
  DeltaParams dp = delta_params(k, ell, m);
  detail::require_hypothesis(k, ell, m);
  Certificate cert;
  cert.claim = CongruenceClaim{ell, m, k, target_residue(dp, m)};
  cert.method = CertifyMethod::TheoremMain;
  cert.hypothesis_ok = true;
  cert.hypothesis = detail::hypothesis_string(k, ell, m);
  for (unsigned r = 1; r < m; ++r) {
    u64 ar = target_residue(dp, r);
    const Certificate* found = nullptr;
    for (const auto& p : priors)
      if (p.establishes(ell, r, k, ar)) {
        found = &p;
        break;
      }
    if (!found)
      throw missing_priors("no prior establishes the congruence at (" + std::to_string(ell) + "^" +
                           std::to_string(r) + ", " + std::to_string(k) + ", " + std::to_string(ar) +
                           ")");
    for (const auto& lv : found->levels)
      if (lv.r == r) cert.levels.push_back(lv);
  }
  auto res = detail::check_level(dp, m);
  if (std::holds_alternative<Refutation>(res))
    return CertifyResult{std::nullopt, std::get<Refutation>(res)};
  cert.levels.push_back(std::get<LevelEvidence>(res));
  return CertifyResult{cert, std::nullopt};
}

// Re-run the finite checks recorded in a certificate from scratch. A
// certified claim must always pass them again (the easy direction of the
// criterion); used as a regression guard on the bound computations.
inline bool recheck_finite(const Certificate& cert) {
  DeltaParams dp = delta_params(cert.claim.k, cert.claim.ell, cert.claim.m);
  for (const auto& lv : cert.levels) {
    auto res = detail::check_level(dp, lv.r);
    if (!std::holds_alternative<LevelEvidence>(res)) return false;
    const auto& ev = std::get<LevelEvidence>(res);
    if (ev.bound != lv.bound || ev.checked != lv.checked) return false;
  }
  return true;
}

struct ShiftEquivalenceReport {
  bool equivalent = false;
  mpz_class index_shift;  // (delta_m - delta_r)/ell^r
  long long checked = 0;
};

// The delta_r-indexed prefix condition for n <= N coincides with the
// delta_m-indexed condition for n <= N + (delta_m - delta_r)/ell^r: verified
// value-by-value on computed series.
inline ShiftEquivalenceReport residue_shift_equivalence(long long k, u64 ell, unsigned r, unsigned m,
                                                        long long N) {
  if (r < 1 || r > m) throw error("need 1 <= r <= m");
  DeltaParams dp = delta_params(k, ell, m);
  u64 modr = checked_pow_u64(ell, r);
  const mpz_class& dr = dp.delta(r);
  const mpz_class& dm = dp.delta(m);
  mpz_class shift_z = (dm - dr) / modr;
  if ((dm - dr) % modr != 0) throw error("delta difference not divisible by ell^r");
  long long shift = to_ll(shift_z);

  long long maxarg = std::max<long long>(0, to_ll(mpz_class(modr) * static_cast<long>(N) - dr));
  auto series = pk_series(k, ModDomain(ell, r), static_cast<long>(maxarg));
  auto value_at = [&](const mpz_class& arg) -> u64 {
    if (arg < 0) return 0;
    return series.series.at(static_cast<long>(to_ll(arg)));
  };

  ShiftEquivalenceReport rep;
  rep.index_shift = shift_z;
  rep.checked = 0;
  rep.equivalent = true;
  for (long long n = 0; n <= N + shift; ++n) {
    u64 vm = value_at(mpz_class(modr) * static_cast<long>(n) - dm);
    u64 vr = n >= shift ? value_at(mpz_class(modr) * static_cast<long>(n - shift) - dr) : 0;
    ++rep.checked;
    if (vm != vr) {
      rep.equivalent = false;
      break;
    }
  }
  return rep;
}

// Shift a fully-certified chain by s*ell^m components (the generalized
// Kiming-Olsson lemma): claims at (ell^r, k + s ell^m, a_r) for every
// r <= m, derived rather than re-checked.
inline std::vector<CongruenceClaim> lift(const Certificate& cert, long long s) {
  u64 ell = cert.claim.ell;
  unsigned m = cert.claim.m;
  u64 modm = checked_pow_u64(ell, m);
  long long k2 = cert.claim.k + s * static_cast<long long>(modm);
  if (k2 < 1)
    throw invalid_shift("k + s ell^m = " + std::to_string(k2) + " must be >= 1");
  for (unsigned r = 1; r <= m; ++r) {
    bool have = false;
    for (const auto& lv : cert.levels) have = have || lv.r == r;
    if (!have) throw incomplete_chain("certificate lacks level r = " + std::to_string(r));
  }
  DeltaParams dp2 = delta_params(k2, ell, m);
  std::vector<CongruenceClaim> out;
  for (unsigned r = 1; r <= m; ++r) {
    u64 a = target_residue(dp2, r);
    for (const auto& lv : cert.levels)
      if (lv.r == r && lv.a != a)
        throw error("lifted target residue mismatch at level " + std::to_string(r));
    out.push_back(CongruenceClaim{ell, r, k2, a});
  }
  return out;
}

struct LiftIdentityReport {
  bool holds = false;
  long long first_failure = -1;  // n at which the identity first failed
  long long checked = 0;
};

// Exact-arithmetic verification of the coefficient identity behind the
// lifting lemma at level ell^{m+1}:
//   p_{k + s ell^{m+1}}(n ell^{m+1} + a)
//     = sum_{i=0}^{m+1} ell^i sum_{j=0}^{n ell^i + b_i}
//         p_k((ell^i n - j) ell^{m+1-i} + a) c_i(j),
// with b_i = floor(a / ell^{m+1-i}) and c_i the components of the
// decomposition of (prod (1-q^n)^{-1})^{s ell^{m+1}}.
inline LiftIdentityReport lift_identity_check(long long k, u64 ell, unsigned m, long long s, u64 a,
                                              long long N) {
  require_congruence_prime(ell);
  if (k < 1 || s == 0) throw error("need k >= 1 and s != 0");
  unsigned level = m + 1;
  u64 modl = checked_pow_u64(ell, level);
  long long k2 = k + s * static_cast<long long>(modl);
  if (k2 < 1) throw invalid_shift("k + s ell^{m+1} must be >= 1");

  long order = static_cast<long>(N * static_cast<long long>(modl) + static_cast<long long>(a));
  IntDomain Z;
  TruncSeries<IntDomain> g =
      s > 0 ? pk_series(s * static_cast<long long>(modl), Z, order).series
            : pow(euler_phi(Z, order), static_cast<unsigned long long>(-s) * modl, order);
  auto dec = ladic_decompose(g, ell, level);
  auto pk = pk_series(k, Z, order).series;
  auto lhs = pk_series(k2, Z, order).series;

  LiftIdentityReport rep;
  rep.holds = true;
  for (long long n = 0; n <= N; ++n) {
    mpz_class rhs = 0;
    mpz_class ellpow = 1;
    for (unsigned i = 0; i <= level; ++i) {
      u64 scale = checked_pow_u64(ell, level - i);
      long long bi = static_cast<long long>(a / scale);
      long long elli = static_cast<long long>(checked_pow_u64(ell, i));
      mpz_class inner = 0;
      for (long long j = 0; j <= n * elli + bi; ++j) {
        long long arg = (elli * n - j) * static_cast<long long>(scale) + static_cast<long long>(a);
        if (arg < 0) continue;  // p_k vanishes there
        if (j > dec.comp[i].order()) continue;
        inner += pk.at(static_cast<long>(arg)) * dec.comp[i].at(static_cast<long>(j));
      }
      rhs += ellpow * inner;
      ellpow *= static_cast<long>(ell);
    }
    ++rep.checked;
    if (rhs != lhs.at(static_cast<long>(n * static_cast<long long>(modl) + static_cast<long long>(a)))) {
      rep.holds = false;
      rep.first_failure = n;
      break;
    }
  }
  return rep;
}

// All (k, a) a mod-ell congruence with 1 <= k <= ell-1, k not in
// {ell-1, ell-3} could possibly occupy: k odd with 24a == k (mod ell).
// Each candidate also satisfies a == -delta_{k,ell,1} (mod ell), asserted.
inline std::vector<std::pair<long long, u64>> ko_exceptional_filter(u64 ell) {
  require_congruence_prime(ell);
  std::vector<std::pair<long long, u64>> out;
  u64 inv24 = inv_mod_u64(24 % ell, ell);
  for (u64 k = 1; k <= ell - 2; ++k) {
    if (k == ell - 3) continue;
    if (k % 2 == 0) continue;
    u64 a = static_cast<u64>(static_cast<u128>(inv24) * k % ell);
    DeltaParams dp = delta_params(static_cast<long long>(k), ell, 1);
    if (a != target_residue(dp, 1))
      throw error("exceptional candidate fails a == -delta (mod ell)");
    out.emplace_back(static_cast<long long>(k), a);
  }
  return out;
}

// Gandhi's non-exceptional family: k = ell-3, a = (ell^2-1)/8 mod ell,
// consistent with a == -delta_{ell-3,ell,1} (mod ell).
inline std::pair<long long, u64> gandhi_params(u64 ell) {
  require_congruence_prime(ell);
  u64 a_full = (ell * ell - 1) / 8;
  u64 a = a_full % ell;
  DeltaParams dp = delta_params(static_cast<long long>(ell - 3), ell, 1);
  if (a != target_residue(dp, 1)) throw error("gandhi parameters fail a == -delta (mod ell)");
  return {static_cast<long long>(ell - 3), a};
}

struct VerifyReport {
  bool ok = false;
  long long n_max = 0;
  long long first_n = -1;  // first counterexample index, -1 if none
  u64 value = 0;           // offending p_k value mod ell^m
};

// Brute-force check of a claim on 0 <= n <= n_max. The default path works in
// the residue domain; exact_path recomputes over Z and reduces, which shares
// no modular arithmetic with the residue route.
inline VerifyReport verify_empirical(const CongruenceClaim& claim, long long n_max,
                                     bool exact_path = false) {
  u64 modm = checked_pow_u64(claim.ell, claim.m);
  if (claim.a >= modm) throw error("claim residue not canonical");
  long order = static_cast<long>(n_max * static_cast<long long>(modm) + static_cast<long long>(claim.a));
  VerifyReport rep;
  rep.ok = true;
  rep.n_max = n_max;
  if (exact_path) {
    auto P = pk_series(claim.k, IntDomain{}, order).series;
    for (long long n = 0; n <= n_max; ++n) {
      long idx = static_cast<long>(n * static_cast<long long>(modm) + static_cast<long long>(claim.a));
      u64 v = mpz_fdiv_ui(P.at(idx).get_mpz_t(), modm);
      if (v != 0) {
        rep.ok = false;
        rep.first_n = n;
        rep.value = v;
        break;
      }
    }
  } else {
    auto P = pk_series(claim.k, ModDomain(claim.ell, claim.m), order).series;
    for (long long n = 0; n <= n_max; ++n) {
      long idx = static_cast<long>(n * static_cast<long long>(modm) + static_cast<long long>(claim.a));
      u64 v = P.at(idx);
      if (v != 0) {
        rep.ok = false;
        rep.first_n = n;
        rep.value = v;
        break;
      }
    }
  }
  return rep;
}

struct SearchEntry {
  Certificate cert;
  std::string family;  // e.g. "p_{1+5r}(5n+4) == 0 (mod 5)"
};

inline std::string family_string(const CongruenceClaim& c) {
  u64 modm = checked_pow_u64(c.ell, c.m);
  std::ostringstream os;
  os << "p_{" << c.k << "+" << modm << "r}(" << modm << "n+" << c.a << ") == 0 (mod " << modm << ")";
  return os.str();
}

// Certify the whole grid: primes 5 <= ell <= ell_max, 1 <= m <= m_max,
// 1 <= k <= k_max restricted to the hypothesis class k == -4 (mod ell^{m-1}).
// Directly certified claims reachable from a smaller certified k by a
// + ell^m shift are presented once, as that base family. Tasks fan out
// across a small worker pool; the table is sorted afterwards, so thread
// scheduling never changes output.
inline std::vector<SearchEntry> search(u64 ell_max, unsigned m_max, long long k_max,
                                       unsigned threads = 0) {
  struct Task {
    long long k;
    u64 ell;
    unsigned m;
  };
  std::vector<Task> tasks;
  for (u64 ell = 5; ell <= ell_max; ++ell) {
    if (!is_prime_u64(ell)) continue;
    for (unsigned m = 1; m <= m_max; ++m) {
      u64 modm1 = checked_pow_u64(ell, m - 1);
      for (long long k = 1; k <= k_max; ++k)
        if ((k + 4) % static_cast<long long>(modm1) == 0) tasks.push_back({k, ell, m});
    }
  }

  std::vector<std::optional<Certificate>> results(tasks.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, 16);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      auto res = certify_chain(tasks[i].k, tasks[i].ell, tasks[i].m);
      if (res.certified()) results[i] = *res.certificate;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<Certificate> certified;
  for (auto& r : results)
    if (r) certified.push_back(*r);

  auto is_certified = [&](u64 ell, unsigned m, long long k) {
    for (const auto& c : certified)
      if (c.claim.ell == ell && c.claim.m == m && c.claim.k == k) return true;
    return false;
  };

  std::vector<SearchEntry> out;
  for (const auto& c : certified) {
    long long step = to_ll(mpz_class(checked_pow_u64(c.claim.ell, c.claim.m)));
    if (c.claim.k - step >= 1 && is_certified(c.claim.ell, c.claim.m, c.claim.k - step))
      continue;  // shift of an already-presented base
    out.push_back(SearchEntry{c, family_string(c.claim)});
  }
  std::sort(out.begin(), out.end(), [](const SearchEntry& x, const SearchEntry& y) {
    auto kx = std::make_tuple(x.cert.claim.ell, x.cert.claim.m, x.cert.claim.k, x.cert.claim.a);
    auto ky = std::make_tuple(y.cert.claim.ell, y.cert.claim.m, y.cert.claim.k, y.cert.claim.a);
    return kx < ky;
  });
  return out;
}

// --- certificate records ----------------------------------------------------
//
// Line-delimited structured records: one JSON object per line, fields in a
// fixed order, no whitespace variation, so equal inputs always serialize to
// equal bytes. Checked values are folded into an FNV-1a digest per level.

inline u64 fnv1a(const std::string& s) {
  u64 h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string level_digest(const LevelEvidence& lv) {
  std::string blob;
  for (const auto& [n, v] : lv.checked) blob += std::to_string(n) + ":" + std::to_string(v) + ";";
  std::ostringstream os;
  os << std::hex << fnv1a(blob);
  return os.str();
}

inline std::string to_record(const Certificate& cert) {
  std::ostringstream os;
  os << "{\"type\":\"certificate\",\"ell\":" << cert.claim.ell << ",\"m\":" << cert.claim.m
     << ",\"k\":" << cert.claim.k << ",\"a\":" << cert.claim.a << ",\"method\":\""
     << method_name(cert.method) << "\",\"family\":\"" << family_string(cert.claim)
     << "\",\"levels\":[";
  for (size_t i = 0; i < cert.levels.size(); ++i) {
    const auto& lv = cert.levels[i];
    if (i) os << ",";
    os << "{\"r\":" << lv.r << ",\"modulus\":" << lv.modulus << ",\"a\":" << lv.a
       << ",\"bound\":" << lv.bound << ",\"checked\":" << lv.checked.size() << ",\"digest\":\"fnv1a:"
       << level_digest(lv) << "\"}";
  }
  os << "]}";
  return os.str();
}

inline std::string to_record(const Refutation& ref) {
  std::ostringstream os;
  os << "{\"type\":\"refutation\",\"ell\":" << ref.ell << ",\"m\":" << ref.m << ",\"k\":" << ref.k
     << ",\"r\":" << ref.r << ",\"n\":" << ref.n << ",\"value\":" << ref.value << ",\"note\":\""
     << ref.note << "\"}";
  return os.str();
}

}  // namespace pkcong
