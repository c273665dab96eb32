#pragma once

#include <map>

#include "series.hpp"

namespace pkcong {

// p_k(0..N) in a coefficient domain, from prod_{n>=1} (1-q^n)^{-k}.
template <class D>
struct PartitionSeries {
  long long k = 0;
  TruncSeries<D> series;

  long order() const { return series.order(); }
  typename D::value_type at(long n) const { return series.coeff(n); }
};

// Bulk path: raise the sparse pentagonal expansion to the kth power, then a
// single Newton inversion.
template <class D>
PartitionSeries<D> pk_series_power_first(long long k, D dom, long N) {
  auto phi = euler_phi(dom, N);
  auto phik = pow(phi, static_cast<unsigned long long>(k), N);
  return PartitionSeries<D>{k, inverse(phik, N)};
}

// Alternate order: invert phi once (the naive recurrence on the sparse
// support is the classical pentagonal recurrence), then power. All powers of
// the inverted series have nonnegative coefficients, which is what the
// exact-domain Kronecker path wants.
template <class D>
PartitionSeries<D> pk_series_invert_first(long long k, D dom, long N) {
  auto phi = euler_phi(dom, N);
  auto p1 = inverse_naive(phi, N);
  return PartitionSeries<D>{k, pow(p1, static_cast<unsigned long long>(k), N)};
}

template <class D>
PartitionSeries<D> pk_series(long long k, D dom, long N) {
  if (k < 1) throw error("component count k must be >= 1");
  if (N < 0) throw error("order must be >= 0");
  if constexpr (is_mod_domain_v<D>)
    return pk_series_power_first(k, dom, N);
  else
    return pk_series_invert_first(k, dom, N);
}

// p_k(n) with the convention p_k(n) = 0 for n < 0.
template <class D>
typename D::value_type pk_at(long long k, long long n, D dom) {
  if (n < 0) return dom.zero();
  return pk_series(k, dom, static_cast<long>(n)).series.at(static_cast<long>(n));
}

namespace detail {

// Count partitions of n with all parts <= maxpart by recursion on the
// largest part. Independent of the pentagonal theorem and of any series
// arithmetic; this is the oracle side.
inline const mpz_class& partitions_bounded(int n, int maxpart,
                                           std::map<std::pair<int, int>, mpz_class>& memo) {
  static const mpz_class one_v = 1;
  static const mpz_class zero_v = 0;
  if (n == 0) return one_v;
  if (n < 0 || maxpart == 0) return zero_v;
  if (maxpart > n) maxpart = n;
  auto key = std::make_pair(n, maxpart);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  mpz_class total = 0;
  for (int p = maxpart; p >= 1; --p) total += partitions_bounded(n - p, p, memo);
  return memo.emplace(key, std::move(total)).first->second;
}

}  // namespace detail

inline constexpr long long kEnumerateMaxN = 30;
inline constexpr long long kEnumerateMaxK = 10;

// Count k-tuples of partitions with total size n: enumerate the composition
// (|lambda_1|, ..., |lambda_k|) of n and multiply per-component partition
// counts. Components are ordered and may be empty.
inline mpz_class pk_enumerate(long long k, long long n) {
  if (n < 0 || n > kEnumerateMaxN || k < 1 || k > kEnumerateMaxK)
    throw oracle_scale_exceeded("pk_enumerate supports 1 <= k <= " + std::to_string(kEnumerateMaxK) +
                                ", 0 <= n <= " + std::to_string(kEnumerateMaxN));
  std::map<std::pair<int, int>, mpz_class> memo;
  auto p1 = [&](int j) { return detail::partitions_bounded(j, j, memo); };
  std::vector<mpz_class> acc(static_cast<size_t>(n) + 1);
  for (long long j = 0; j <= n; ++j) acc[static_cast<size_t>(j)] = p1(static_cast<int>(j));
  for (long long comp = 2; comp <= k; ++comp) {
    std::vector<mpz_class> next(static_cast<size_t>(n) + 1, mpz_class(0));
    for (long long t = 0; t <= n; ++t)
      for (long long j = 0; j <= t; ++j)
        next[static_cast<size_t>(t)] += p1(static_cast<int>(j)) * acc[static_cast<size_t>(t - j)];
    acc = std::move(next);
  }
  return acc[static_cast<size_t>(n)];
}

}  // namespace pkcong
