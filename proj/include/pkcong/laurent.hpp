#pragma once

#include "series.hpp"

namespace pkcong {

// Laurent series with finite principal part: c[i] holds the coefficient of
// q^{lead + i}. Exponents below lead are exact zeros; exponents above the
// truncation order are unknown. lead may be negative. Operations track the
// achievable truncation order conservatively.
template <class D>
struct LaurentSeries {
  using domain_type = D;
  using value_type = typename D::value_type;

  D dom;
  long lead = 0;
  std::vector<value_type> c;

  LaurentSeries() = default;
  LaurentSeries(D d, long lead_, long order_)
      : dom(d), lead(lead_), c(static_cast<size_t>(order_ - lead_) + 1, d.zero()) {}

  long order() const { return lead + static_cast<long>(c.size()) - 1; }

  value_type coeff(long e) const {
    if (e < lead) return dom.zero();
    if (e > order())
      throw insufficient_precision("coefficient of q^" + std::to_string(e) +
                                   " beyond truncation order " + std::to_string(order()));
    return c[static_cast<size_t>(e - lead)];
  }

  value_type& at(long e) { return c[static_cast<size_t>(e - lead)]; }
  const value_type& at(long e) const { return c[static_cast<size_t>(e - lead)]; }
};

template <class D>
LaurentSeries<D> laurent_from_trunc(const TruncSeries<D>& a, long lead = 0) {
  LaurentSeries<D> r;
  r.dom = a.dom;
  r.lead = lead;
  r.c = a.c;
  return r;
}

template <class D>
TruncSeries<D> relative_part(const LaurentSeries<D>& a) {
  TruncSeries<D> r;
  r.dom = a.dom;
  r.c = a.c;
  return r;
}

// Drop exact leading zeros so that lead names the true leading exponent.
// Only meaningful over exact domains.
template <class D>
LaurentSeries<D> normalize(const LaurentSeries<D>& a) {
  size_t skip = 0;
  while (skip + 1 < a.c.size() && a.dom.is_zero(a.c[skip])) ++skip;
  LaurentSeries<D> r;
  r.dom = a.dom;
  r.lead = a.lead + static_cast<long>(skip);
  r.c.assign(a.c.begin() + static_cast<long>(skip), a.c.end());
  return r;
}

template <class D>
LaurentSeries<D> laurent_mul(const LaurentSeries<D>& a, const LaurentSeries<D>& b) {
  if (!a.dom.same(b.dom)) throw domain_mismatch("laurent factors over different domains");
  long lead = a.lead + b.lead;
  long ord = std::min(a.order() + b.lead, b.order() + a.lead);
  if (ord < lead) throw insufficient_precision("laurent product has no representable coefficients");
  TruncSeries<D> p = mul(relative_part(a), relative_part(b), ord - lead);
  LaurentSeries<D> r = laurent_from_trunc(p, lead);
  return r;
}

template <class D>
LaurentSeries<D> laurent_inverse(const LaurentSeries<D>& a) {
  if (a.c.empty() || !a.dom.is_unit(a.c[0]))
    throw non_unit_leading_coefficient("leading coefficient is not a unit (normalize first?)");
  long rel = static_cast<long>(a.c.size()) - 1;
  TruncSeries<D> u = inverse(relative_part(a), rel);
  return laurent_from_trunc(u, -a.lead);
}

template <class D>
LaurentSeries<D> laurent_pow(const LaurentSeries<D>& a, unsigned long long e) {
  long rel = static_cast<long>(a.c.size()) - 1;
  TruncSeries<D> p = pow(relative_part(a), e, rel);
  return laurent_from_trunc(p, a.lead * static_cast<long>(e));
}

template <class D>
LaurentSeries<D> laurent_add(const LaurentSeries<D>& a, const LaurentSeries<D>& b) {
  if (!a.dom.same(b.dom)) throw domain_mismatch("laurent terms over different domains");
  long lead = std::min(a.lead, b.lead);
  long ord = std::min(a.order(), b.order());
  if (ord < lead) throw insufficient_precision("laurent sum has no representable coefficients");
  LaurentSeries<D> r(a.dom, lead, ord);
  for (long e = lead; e <= ord; ++e) {
    auto av = e < a.lead ? a.dom.zero() : a.at(e);
    auto bv = e < b.lead ? b.dom.zero() : b.at(e);
    r.at(e) = a.dom.add(av, bv);
  }
  return r;
}

}  // namespace pkcong
