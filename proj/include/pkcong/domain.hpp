#pragma once

#include <string>
#include <type_traits>

#include <gmpxx.h>

#include "errors.hpp"
#include "modulus.hpp"

namespace pkcong {

// Coefficient domains. A domain is a small value object supplying ring
// operations on its value_type; series code is templated on the domain so
// the same kernels run over exact integers, exact rationals, and residues
// mod ell^m. Domains must compare equal ("same") for values to mix.

struct IntDomain {
  using value_type = mpz_class;
  static constexpr bool is_exact = true;
  static constexpr const char* name = "Z";

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long long v) const { return value_type(static_cast<long>(v)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  void addmul(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  void submul(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
  value_type inv(const value_type& a) const {
    if (!is_unit(a)) throw not_a_unit(a.get_str() + " is not a unit in Z");
    return a;
  }
  unsigned ell_val(const value_type& a, u64 ell) const { return ell_valuation(a, ell); }
  // a / ell^i, exact; caller guarantees divisibility.
  value_type div_ell_pow(const value_type& a, u64 ell, unsigned i) const {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), ell, i);
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return q;
  }
  bool divisible_by_ell_pow(const value_type& a, u64 ell, unsigned i) const {
    if (a == 0 || i == 0) return true;
    return ell_val(a, ell) >= i;
  }
  std::string str(const value_type& a) const { return a.get_str(); }
  bool same(const IntDomain&) const { return true; }
};

struct RatDomain {
  using value_type = mpq_class;
  static constexpr bool is_exact = true;
  static constexpr const char* name = "Q";

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long long v) const { return value_type(static_cast<long>(v)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  void addmul(value_type& acc, const value_type& a, const value_type& b) const { acc += a * b; }
  void submul(value_type& acc, const value_type& a, const value_type& b) const { acc -= a * b; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool is_unit(const value_type& a) const { return a != 0; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw not_a_unit("0 is not a unit in Q");
    return value_type(1) / a;
  }
  // v_ell(num) - v_ell(den); may be negative. kInfValuation for 0.
  int ell_val_signed(const value_type& a, u64 ell) const {
    if (a == 0) return std::numeric_limits<int>::max();
    return static_cast<int>(ell_valuation(a.get_num(), ell)) -
           static_cast<int>(ell_valuation(a.get_den(), ell));
  }
  unsigned ell_val(const value_type& a, u64 ell) const {
    int v = ell_val_signed(a, ell);
    if (v == std::numeric_limits<int>::max()) return kInfValuation;
    return v < 0 ? 0u : static_cast<unsigned>(v);
  }
  value_type div_ell_pow(const value_type& a, u64 ell, unsigned i) const {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), ell, i);
    value_type q = a / value_type(p);
    q.canonicalize();
    return q;
  }
  // valuation >= i, so i = 0 still demands an ell-free denominator
  bool divisible_by_ell_pow(const value_type& a, u64 ell, unsigned i) const {
    if (a == 0) return true;
    return ell_val_signed(a, ell) >= static_cast<int>(i);
  }
  std::string str(const value_type& a) const { return a.get_str(); }
  bool same(const RatDomain&) const { return true; }
};

struct ModDomain {
  using value_type = u64;
  static constexpr bool is_exact = false;
  static constexpr const char* name = "Z/ell^m";

  Modulus mod;

  ModDomain() = default;
  explicit ModDomain(Modulus m_) : mod(m_) {}
  ModDomain(u64 ell, unsigned m_) : mod(ell, m_) {}

  value_type zero() const { return 0; }
  value_type one() const { return 1 % mod.value; }
  value_type from_int(long long v) const { return reduce(v, mod).value; }
  value_type from_mpz(const mpz_class& v) const { return reduce(v, mod).value; }
  value_type add(value_type a, value_type b) const {
    u64 s = a + b;
    if (s >= mod.value || s < a) s -= mod.value;
    return s;
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : mod.value - (b - a);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<u64>(static_cast<u128>(a) * b % mod.value);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : mod.value - a; }
  void addmul(value_type& acc, value_type a, value_type b) const {
    acc = add(acc, mul(a, b));
  }
  void submul(value_type& acc, value_type a, value_type b) const {
    acc = sub(acc, mul(a, b));
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  bool is_unit(value_type a) const { return gcd_u64(a, mod.value) == 1; }
  value_type inv(value_type a) const { return inv_mod_u64(a, mod.value); }
  std::string str(value_type a) const { return std::to_string(a); }
  bool same(const ModDomain& o) const { return mod == o.mod; }
};

template <class D>
inline constexpr bool is_mod_domain_v = std::is_same_v<D, ModDomain>;
template <class D>
inline constexpr bool is_int_domain_v = std::is_same_v<D, IntDomain>;
template <class D>
inline constexpr bool is_rat_domain_v = std::is_same_v<D, RatDomain>;

}  // namespace pkcong
