#pragma once

#include "laurent.hpp"
#include "series.hpp"

namespace pkcong {

// Canonical decomposition of an ell^m-th power:
//   g(q) = f_0(q^{ell^m}) + ell f_1(q^{ell^{m-1}}) + ... + ell^m f_m(q).
// The term a_j q^j is assigned to component i = m - min(m, v_ell(j)) with
// stored coefficient a_j / ell^i; when g genuinely is an ell^m-th power every
// a_j carries the required ell-power (the decomposition lemma), and
// divisibility_violation reports the first exponent where it does not.
// Over rationals "divisible" reads as ell-adic valuation >= i, so the same
// decomposition applies to series with denominators coprime to ell.
template <class S>
struct LadicDecomposition {
  u64 ell = 0;
  unsigned m = 0;
  std::vector<S> comp;  // comp[i] = f_i; its exponent n sits at q^{n ell^{m-i}}

  // c_i(n): coefficient of f_i at exponent n.
  typename S::value_type c(unsigned i, long n) const { return comp[i].coeff(n); }
};

namespace detail {

inline long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}
inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

inline unsigned exponent_valuation(long j, u64 ell) {
  if (j == 0) return kInfValuation;
  u64 x = static_cast<u64>(j < 0 ? -j : j);
  return ell_valuation(x, ell);
}

}  // namespace detail

template <class D>
LadicDecomposition<TruncSeries<D>> ladic_decompose(const TruncSeries<D>& g, u64 ell, unsigned m) {
  static_assert(D::is_exact, "ladic decomposition needs an exact coefficient domain");
  if (m == 0 || ell < 2 || !is_prime_u64(ell)) throw invalid_modulus("need prime ell and m >= 1");
  LadicDecomposition<TruncSeries<D>> dec;
  dec.ell = ell;
  dec.m = m;
  for (unsigned i = 0; i <= m; ++i) {
    long scale = static_cast<long>(checked_pow_u64(ell, m - i));
    dec.comp.emplace_back(g.dom, g.order() / scale);
  }
  for (long j = 0; j <= g.order(); ++j) {
    const auto& aj = g.at(j);
    if (g.dom.is_zero(aj)) continue;
    unsigned u = std::min<unsigned>(m, detail::exponent_valuation(j, ell));
    unsigned i = m - u;
    if (!g.dom.divisible_by_ell_pow(aj, ell, i))
      throw divisibility_violation("coefficient at q^" + std::to_string(j) + " = " + g.dom.str(aj) +
                                       " lacks the required factor " + std::to_string(ell) + "^" +
                                       std::to_string(i),
                                   j);
    long scale = static_cast<long>(checked_pow_u64(ell, m - i));
    dec.comp[i].at(j / scale) = g.dom.div_ell_pow(aj, ell, i);
  }
  return dec;
}

template <class D>
LadicDecomposition<LaurentSeries<D>> ladic_decompose(const LaurentSeries<D>& g, u64 ell, unsigned m) {
  static_assert(D::is_exact, "ladic decomposition needs an exact coefficient domain");
  if (m == 0 || ell < 2 || !is_prime_u64(ell)) throw invalid_modulus("need prime ell and m >= 1");
  LadicDecomposition<LaurentSeries<D>> dec;
  dec.ell = ell;
  dec.m = m;
  for (unsigned i = 0; i <= m; ++i) {
    long scale = static_cast<long>(checked_pow_u64(ell, m - i));
    long lo = detail::ceil_div(g.lead, scale);
    long hi = detail::floor_div(g.order(), scale);
    dec.comp.emplace_back(g.dom, lo, std::max(lo, hi));
  }
  for (long j = g.lead; j <= g.order(); ++j) {
    const auto& aj = g.at(j);
    if (g.dom.is_zero(aj)) continue;
    unsigned u = std::min<unsigned>(m, detail::exponent_valuation(j, ell));
    unsigned i = m - u;
    if (!g.dom.divisible_by_ell_pow(aj, ell, i))
      throw divisibility_violation("coefficient at q^" + std::to_string(j) + " = " + g.dom.str(aj) +
                                       " lacks the required factor " + std::to_string(ell) + "^" +
                                       std::to_string(i),
                                   j);
    long scale = static_cast<long>(checked_pow_u64(ell, m - i));
    dec.comp[i].at(j / scale) = g.dom.div_ell_pow(aj, ell, i);
  }
  return dec;
}

// Reassemble sum_i ell^i f_i(q^{ell^{m-i}}) over the window of the source.
template <class D>
TruncSeries<D> recompose(const LadicDecomposition<TruncSeries<D>>& dec, const D& dom, long N) {
  TruncSeries<D> r(dom, N);
  mpz_class ellpow = 1;
  for (unsigned i = 0; i <= dec.m; ++i) {
    typename D::value_type weight(ellpow);
    long scale = static_cast<long>(checked_pow_u64(dec.ell, dec.m - i));
    const auto& f = dec.comp[i];
    for (long n = 0; n <= f.order() && n * scale <= N; ++n)
      dom.addmul(r.at(n * scale), weight, f.at(n));
    ellpow *= static_cast<long>(dec.ell);
  }
  return r;
}

template <class D>
LaurentSeries<D> recompose(const LadicDecomposition<LaurentSeries<D>>& dec, const D& dom, long lead,
                           long N) {
  LaurentSeries<D> r(dom, lead, N);
  mpz_class ellpow = 1;
  for (unsigned i = 0; i <= dec.m; ++i) {
    typename D::value_type weight(ellpow);
    long scale = static_cast<long>(checked_pow_u64(dec.ell, dec.m - i));
    const auto& f = dec.comp[i];
    for (long n = f.lead; n <= f.order(); ++n) {
      long e = n * scale;
      if (e < lead || e > N) continue;
      dom.addmul(r.at(e), weight, f.at(n));
    }
    ellpow *= static_cast<long>(dec.ell);
  }
  return r;
}

}  // namespace pkcong
