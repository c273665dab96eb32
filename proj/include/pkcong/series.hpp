#pragma once

#include <algorithm>
#include <cstring>
#include <initializer_list>
#include <vector>

#include "domain.hpp"

namespace pkcong {

// Dense truncated power series: c[i] is the coefficient of q^i, 0 <= i <= N.
// Coefficients beyond the stored order are read as zero (polynomial view);
// keeping enough stored order for the precision a computation needs is the
// caller's responsibility, and operations take the target order explicitly.
template <class D>
struct TruncSeries {
  using domain_type = D;
  using value_type = typename D::value_type;

  D dom;
  std::vector<value_type> c;

  TruncSeries() = default;
  TruncSeries(D d, long order) : dom(d), c(static_cast<size_t>(order) + 1, d.zero()) {}

  long order() const { return static_cast<long>(c.size()) - 1; }

  const value_type& at(long i) const { return c[static_cast<size_t>(i)]; }
  value_type& at(long i) { return c[static_cast<size_t>(i)]; }

  // Coefficient of q^i under the polynomial view.
  value_type coeff(long i) const {
    if (i < 0 || i > order()) return dom.zero();
    return c[static_cast<size_t>(i)];
  }

  bool is_zero() const {
    for (const auto& v : c)
      if (!dom.is_zero(v)) return false;
    return true;
  }
};

template <class D>
TruncSeries<D> make_series(D dom, std::initializer_list<long long> coeffs) {
  TruncSeries<D> r(dom, static_cast<long>(coeffs.size()) - 1);
  long i = 0;
  for (long long v : coeffs) r.at(i++) = dom.from_int(v);
  return r;
}

template <class D>
void require_same_domain(const TruncSeries<D>& a, const TruncSeries<D>& b) {
  if (!a.dom.same(b.dom)) throw domain_mismatch("series over different coefficient domains");
}

template <class D>
bool equal_series(const TruncSeries<D>& a, const TruncSeries<D>& b) {
  require_same_domain(a, b);
  long n = std::max(a.order(), b.order());
  for (long i = 0; i <= n; ++i)
    if (!a.dom.equal(a.coeff(i), b.coeff(i))) return false;
  return true;
}

template <class D>
TruncSeries<D> prefix(const TruncSeries<D>& a, long N) {
  TruncSeries<D> r(a.dom, N);
  long top = std::min(N, a.order());
  for (long i = 0; i <= top; ++i) r.at(i) = a.at(i);
  return r;
}

template <class D>
TruncSeries<D> add(const TruncSeries<D>& a, const TruncSeries<D>& b) {
  require_same_domain(a, b);
  TruncSeries<D> r(a.dom, std::max(a.order(), b.order()));
  for (long i = 0; i <= r.order(); ++i) r.at(i) = a.dom.add(a.coeff(i), b.coeff(i));
  return r;
}

template <class D>
TruncSeries<D> sub(const TruncSeries<D>& a, const TruncSeries<D>& b) {
  require_same_domain(a, b);
  TruncSeries<D> r(a.dom, std::max(a.order(), b.order()));
  for (long i = 0; i <= r.order(); ++i) r.at(i) = a.dom.sub(a.coeff(i), b.coeff(i));
  return r;
}

template <class D>
TruncSeries<D> negate(const TruncSeries<D>& a) {
  TruncSeries<D> r(a.dom, a.order());
  for (long i = 0; i <= a.order(); ++i) r.at(i) = a.dom.neg(a.at(i));
  return r;
}

template <class D>
TruncSeries<D> scale(const TruncSeries<D>& a, const typename D::value_type& v) {
  TruncSeries<D> r(a.dom, a.order());
  for (long i = 0; i <= a.order(); ++i) r.at(i) = a.dom.mul(a.at(i), v);
  return r;
}

// --- multiplication -------------------------------------------------------

template <class D>
TruncSeries<D> mul_schoolbook(const TruncSeries<D>& a, const TruncSeries<D>& b, long N) {
  require_same_domain(a, b);
  TruncSeries<D> r(a.dom, N);
  long atop = std::min(a.order(), N);
  for (long i = 0; i <= atop; ++i) {
    if (a.dom.is_zero(a.at(i))) continue;
    long btop = std::min(b.order(), N - i);
    for (long j = 0; j <= btop; ++j) a.dom.addmul(r.at(i + j), a.at(i), b.at(j));
  }
  return r;
}

// Kronecker substitution: evaluate both factors at q = 2^B, multiply once
// with GMP, and read the product coefficients back out of the bit slots.
// B is chosen so slot sums cannot overflow into a neighbour:
//   max_n sum_{i+j=n} a_i b_j  <=  (len)*maxA*maxB  <  2^B.
namespace detail {

inline size_t slot_stride_bits(size_t max_bits_a, size_t max_bits_b, size_t len) {
  size_t len_bits = 1;
  while ((size_t{1} << len_bits) < len + 1) ++len_bits;
  size_t B = max_bits_a + max_bits_b + len_bits + 1;
  return (B + 7) / 8 * 8;
}

// Nonnegative mpz coefficients packed at byte-aligned slots.
inline void kronecker_mul_nonneg(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                 size_t stride_bytes, std::vector<mpz_class>& out) {
  auto pack = [&](const std::vector<mpz_class>& v) {
    std::vector<unsigned char> buf(v.size() * stride_bytes + 16, 0);
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      size_t cnt = 0;
      mpz_export(buf.data() + i * stride_bytes, &cnt, -1, 1, 0, 0, v[i].get_mpz_t());
    }
    mpz_class packed;
    mpz_import(packed.get_mpz_t(), buf.size(), -1, 1, 0, 0, buf.data());
    return packed;
  };
  mpz_class prod = pack(a) * pack(b);
  size_t out_len = out.size();
  std::vector<unsigned char> buf((a.size() + b.size()) * stride_bytes + 16, 0);
  size_t cnt = 0;
  mpz_export(buf.data(), &cnt, -1, 1, 0, 0, prod.get_mpz_t());
  for (size_t n = 0; n < out_len; ++n)
    mpz_import(out[n].get_mpz_t(), stride_bytes, -1, 1, 0, 0, buf.data() + n * stride_bytes);
}

}  // namespace detail

inline TruncSeries<IntDomain> mul_kronecker(const TruncSeries<IntDomain>& a,
                                            const TruncSeries<IntDomain>& b, long N) {
  require_same_domain(a, b);
  long alen = std::min(a.order(), N) + 1;
  long blen = std::min(b.order(), N) + 1;
  // split into nonnegative parts: ab = (p1 - n1)(p2 - n2)
  auto split = [&](const TruncSeries<IntDomain>& s, long len, std::vector<mpz_class>& pos,
                   std::vector<mpz_class>& neg, bool& has_neg) {
    pos.assign(len, mpz_class(0));
    neg.assign(len, mpz_class(0));
    has_neg = false;
    for (long i = 0; i < len; ++i) {
      if (s.at(i) >= 0) {
        pos[i] = s.at(i);
      } else {
        neg[i] = -s.at(i);
        has_neg = true;
      }
    }
  };
  std::vector<mpz_class> ap, an, bp, bn;
  bool a_neg = false, b_neg = false;
  split(a, alen, ap, an, a_neg);
  split(b, blen, bp, bn, b_neg);

  auto measure = [&](const std::vector<mpz_class>& v) {
    size_t m = 1;
    for (const auto& x : v)
      if (x != 0) m = std::max(m, mpz_sizeinbase(x.get_mpz_t(), 2));
    return m;
  };
  size_t bits_a = std::max(measure(ap), measure(an));
  size_t bits_b = std::max(measure(bp), measure(bn));
  size_t len = static_cast<size_t>(std::max(alen, blen));
  size_t stride = detail::slot_stride_bits(bits_a, bits_b, len) / 8;

  size_t out_len = static_cast<size_t>(N) + 1;
  std::vector<mpz_class> pp(out_len), nn(out_len), pn(out_len), np(out_len);
  detail::kronecker_mul_nonneg(ap, bp, stride, pp);
  if (a_neg && b_neg) detail::kronecker_mul_nonneg(an, bn, stride, nn);
  if (b_neg) detail::kronecker_mul_nonneg(ap, bn, stride, pn);
  if (a_neg) detail::kronecker_mul_nonneg(an, bp, stride, np);

  TruncSeries<IntDomain> r(a.dom, N);
  for (size_t n = 0; n < out_len; ++n) r.c[n] = pp[n] + nn[n] - pn[n] - np[n];
  return r;
}

inline TruncSeries<ModDomain> mul_kronecker(const TruncSeries<ModDomain>& a,
                                            const TruncSeries<ModDomain>& b, long N) {
  require_same_domain(a, b);
  long alen = std::min(a.order(), N) + 1;
  long blen = std::min(b.order(), N) + 1;
  size_t len = static_cast<size_t>(std::max(alen, blen));
  u64 maxv = a.dom.mod.value - 1;
  size_t bits_v = 1;
  while ((maxv >> bits_v) != 0) ++bits_v;
  size_t stride_bits = detail::slot_stride_bits(bits_v, bits_v, len);
  if (stride_bits > 120) return mul_schoolbook(a, b, N);  // slot would not fit u128 reads
  size_t stride = stride_bits / 8;

  auto pack = [&](const TruncSeries<ModDomain>& s, long slen) {
    std::vector<unsigned char> buf(static_cast<size_t>(slen) * stride + 16, 0);
    for (long i = 0; i < slen; ++i) {
      u64 v = s.at(i);
      unsigned char* p = buf.data() + static_cast<size_t>(i) * stride;
      for (size_t by = 0; by < 8 && by < stride; ++by) p[by] = static_cast<unsigned char>(v >> (8 * by));
    }
    mpz_class packed;
    mpz_import(packed.get_mpz_t(), buf.size(), -1, 1, 0, 0, buf.data());
    return packed;
  };
  mpz_class prod = pack(a, alen) * pack(b, blen);

  size_t out_len = static_cast<size_t>(N) + 1;
  std::vector<unsigned char> buf(static_cast<size_t>(alen + blen) * stride + 32, 0);
  size_t cnt = 0;
  mpz_export(buf.data(), &cnt, -1, 1, 0, 0, prod.get_mpz_t());
  TruncSeries<ModDomain> r(a.dom, N);
  u128 slot_mask = stride_bits >= 128 ? ~u128{0} : ((u128{1} << stride_bits) - 1);
  for (size_t n = 0; n < out_len; ++n) {
    u128 acc = 0;
    const unsigned char* p = buf.data() + n * stride;
    for (size_t by = 0; by < stride; ++by) acc |= static_cast<u128>(p[by]) << (8 * by);
    r.c[n] = static_cast<u64>((acc & slot_mask) % a.dom.mod.value);
  }
  return r;
}

inline constexpr long kKroneckerThreshold = 96;

template <class D>
TruncSeries<D> mul(const TruncSeries<D>& a, const TruncSeries<D>& b, long N) {
  if constexpr (is_int_domain_v<D> || is_mod_domain_v<D>) {
    if (N >= kKroneckerThreshold) return mul_kronecker(a, b, N);
  }
  return mul_schoolbook(a, b, N);
}

// --- inversion ------------------------------------------------------------

// Reference path: the linear recurrence b_n = -a_0^{-1} sum_{j>=1} a_j b_{n-j},
// iterating only over the nonzero support of a (so a sparse a costs O(N |supp|)).
template <class D>
TruncSeries<D> inverse_naive(const TruncSeries<D>& a, long N) {
  if (!a.dom.is_unit(a.coeff(0)))
    throw non_unit_constant_term("constant term " + a.dom.str(a.coeff(0)) + " is not a unit");
  auto inv0 = a.dom.inv(a.at(0));
  std::vector<long> support;
  for (long j = 1; j <= std::min(a.order(), N); ++j)
    if (!a.dom.is_zero(a.at(j))) support.push_back(j);
  TruncSeries<D> b(a.dom, N);
  b.at(0) = inv0;
  for (long n = 1; n <= N; ++n) {
    auto acc = b.dom.zero();
    for (long j : support) {
      if (j > n) break;
      a.dom.addmul(acc, a.at(j), b.at(n - j));
    }
    b.at(n) = a.dom.neg(a.dom.mul(inv0, acc));
  }
  return b;
}

// Newton iteration with order doubling: if a*b == 1 mod q^t then
// b' = b*(2 - a*b) satisfies a*b' == 1 mod q^{2t}. Valid over any
// commutative coefficient ring once a_0 is a unit.
template <class D>
TruncSeries<D> inverse(const TruncSeries<D>& a, long N) {
  if (!a.dom.is_unit(a.coeff(0)))
    throw non_unit_constant_term("constant term " + a.dom.str(a.coeff(0)) + " is not a unit");
  TruncSeries<D> b(a.dom, 0);
  b.at(0) = a.dom.inv(a.at(0));
  long t = 1;
  while (t <= N) {
    long t2 = std::min(2 * t, N + 1);  // next precision
    TruncSeries<D> ap = prefix(a, t2 - 1);
    TruncSeries<D> e = mul(ap, b, t2 - 1);
    // two_minus_e = 2 - e
    TruncSeries<D> tme(a.dom, t2 - 1);
    tme.at(0) = a.dom.sub(a.dom.from_int(2), e.at(0));
    for (long i = 1; i <= t2 - 1; ++i) tme.at(i) = a.dom.neg(e.at(i));
    b = mul(b, tme, t2 - 1);
    t = t2;
  }
  return b;
}

// --- powers and substitutions ----------------------------------------------

template <class D>
TruncSeries<D> pow(const TruncSeries<D>& a, unsigned long long e, long N) {
  TruncSeries<D> r(a.dom, N);
  r.at(0) = a.dom.one();
  if (e == 0) return r;
  TruncSeries<D> base = prefix(a, N);
  bool started = false;
  for (int bit = 63; bit >= 0; --bit) {
    if (started) r = mul(r, r, N);
    if ((e >> bit) & 1ULL) {
      if (started)
        r = mul(r, base, N);
      else {
        r = base;
        started = true;
      }
    }
  }
  return r;
}

// q -> q^t relabeling: coefficient of q^{t n} in the result is a_n.
template <class D>
TruncSeries<D> substitute_qpower(const TruncSeries<D>& a, long t, long N) {
  if (t < 1) throw error("substitution power must be positive");
  TruncSeries<D> r(a.dom, N);
  for (long n = 0; n <= a.order() && t * n <= N; ++n) r.at(t * n) = a.at(n);
  return r;
}

// prod_{n>=1} (1 - q^n) truncated at N, expanded by the pentagonal number
// theorem: sum_{j in Z} (-1)^j q^{j(3j-1)/2}. Only O(sqrt N) nonzero terms.
template <class D>
TruncSeries<D> euler_phi(D dom, long N) {
  TruncSeries<D> r(dom, N);
  r.at(0) = dom.one();
  for (long j = 1;; ++j) {
    long g1 = j * (3 * j - 1) / 2;
    long g2 = j * (3 * j + 1) / 2;
    if (g1 > N) break;
    auto s = (j % 2 == 1) ? dom.from_int(-1) : dom.one();
    r.at(g1) = dom.add(r.at(g1), s);
    if (g2 <= N) r.at(g2) = dom.add(r.at(g2), s);
  }
  return r;
}

// Coefficientwise reduction Z -> Z/ell^m.
inline TruncSeries<ModDomain> reduce_series(const TruncSeries<IntDomain>& a, ModDomain dom) {
  TruncSeries<ModDomain> r(dom, a.order());
  for (long i = 0; i <= a.order(); ++i) r.at(i) = dom.from_mpz(a.at(i));
  return r;
}

}  // namespace pkcong
