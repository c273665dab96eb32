#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace pkcong {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Valuation sentinel for v_ell(0).
inline constexpr unsigned kInfValuation = std::numeric_limits<unsigned>::max();

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// b^e with overflow detection; throws invalid_modulus on overflow.
inline u64 checked_pow_u64(u64 b, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    u128 t = static_cast<u128>(r) * b;
    if (t > std::numeric_limits<u64>::max())
      throw invalid_modulus("prime power overflows a machine word");
    r = static_cast<u64>(t);
  }
  return r;
}

// A prime-power modulus ell^m. Residue values are canonical in [0, value).
// Products of two residues are formed in 128-bit intermediates, so any
// value that fits a 64-bit word is admissible.
struct Modulus {
  u64 ell = 0;
  unsigned m = 0;
  u64 value = 0;

  Modulus() = default;
  Modulus(u64 ell_, unsigned m_) : ell(ell_), m(m_) {
    if (m == 0) throw invalid_modulus("exponent m must be positive");
    if (!is_prime_u64(ell)) throw invalid_modulus("ell = " + std::to_string(ell_) + " is not prime");
    value = checked_pow_u64(ell, m);
  }

  bool operator==(const Modulus&) const = default;

  std::string str() const {
    if (m == 1) return std::to_string(ell);
    return std::to_string(ell) + "^" + std::to_string(m);
  }
};

// Factors v as ell^m for prime ell; throws invalid_modulus otherwise.
inline Modulus factor_prime_power(u64 v) {
  if (v < 2) throw invalid_modulus("modulus must be >= 2");
  u64 p = 0;
  for (u64 d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return Modulus(v, 1);
  unsigned m = 0;
  u64 rest = v;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw invalid_modulus(std::to_string(v) + " is not a prime power");
  return Modulus(p, m);
}

struct Residue {
  u64 value = 0;
  Modulus mod;
};

inline Residue reduce(long long x, const Modulus& M) {
  long long r = x % static_cast<long long>(M.value);
  if (r < 0) r += static_cast<long long>(M.value);
  return Residue{static_cast<u64>(r), M};
}

inline Residue reduce(const mpz_class& x, const Modulus& M) {
  mpz_class r;
  mpz_mod_ui(r.get_mpz_t(), x.get_mpz_t(), M.value);  // nonnegative remainder
  return Residue{r.get_ui(), M};
}

inline void require_same_modulus(const Residue& a, const Residue& b) {
  if (!(a.mod == b.mod))
    throw modulus_mismatch("residues live in different moduli: " + a.mod.str() + " vs " + b.mod.str());
}

inline Residue add_mod(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  u64 s = a.value + b.value;
  if (s >= a.mod.value || s < a.value) s -= a.mod.value;
  return Residue{s, a.mod};
}

inline Residue sub_mod(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  u64 s = a.value >= b.value ? a.value - b.value : a.mod.value - (b.value - a.value);
  return Residue{s, a.mod};
}

inline Residue mul_mod(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  u128 p = static_cast<u128>(a.value) * b.value;
  return Residue{static_cast<u64>(p % a.mod.value), a.mod};
}

inline u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Modular inverse by extended Euclid; requires gcd(a, n) = 1.
inline u64 inv_mod_u64(u64 a, u64 n) {
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(n), nr = static_cast<long long>(a % n);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1)
    throw not_a_unit("gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") = " + std::to_string(r));
  if (t < 0) t += static_cast<long long>(n);
  return static_cast<u64>(t);
}

inline Residue inv_mod(const Residue& a) {
  return Residue{inv_mod_u64(a.value, a.mod.value), a.mod};
}

inline Residue pow_mod(Residue a, u64 e) {
  Residue r{1 % a.mod.value, a.mod};
  while (e) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

// Largest v with ell^v | x; v_ell(0) = kInfValuation.
inline unsigned ell_valuation(u64 x, u64 ell) {
  if (ell < 2) throw invalid_modulus("valuation base must be >= 2");
  if (x == 0) return kInfValuation;
  unsigned v = 0;
  while (x % ell == 0) {
    x /= ell;
    ++v;
  }
  return v;
}

inline unsigned ell_valuation(const mpz_class& x, u64 ell) {
  if (ell < 2) throw invalid_modulus("valuation base must be >= 2");
  if (x == 0) return kInfValuation;
  mpz_class rest;
  mpz_class base(static_cast<unsigned long>(ell));
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), base.get_mpz_t()));
}

}  // namespace pkcong
