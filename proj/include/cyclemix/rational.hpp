#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <string>

namespace cyclemix {

// All exact arithmetic is GMP-backed: character values are integers and the
// identities between them are tested as exact equalities, so no floating
// point enters the exact paths.
using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructor.
inline Int to_int(long long v) {
  if (v >= LONG_MIN && v <= LONG_MAX) return Int(static_cast<long>(v));
  return Int(std::to_string(v));
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// z(z-1)...(z-k+1); zero whenever 0 <= z < k.
inline Int falling_factorial(long long z, int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) r *= to_int(z - i);
  return r;
}

inline Rat make_rat(Int num, Int den) {
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;  // canonical since base is
}

inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// "p/q" (or "p" when the value is an integer), exact.
inline std::string rat_string(const Rat& q) { return q.get_str(); }

inline double to_double(const Rat& q) { return q.get_d(); }

}  // namespace cyclemix
