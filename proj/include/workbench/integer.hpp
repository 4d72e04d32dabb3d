#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace workbench {

/// Arbitrary-precision integer used for every coefficient and matrix entry.
using Integer = mpz_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// Least non-negative residue of x modulo m (m > 0).
inline Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool fits_int64(const Integer& x) {
  return mpz_sizeinbase(x.get_mpz_t(), 2) <= 62;
}

inline std::int64_t to_int64(const Integer& x) {
  return static_cast<std::int64_t>(mpz_get_si(x.get_mpz_t()));
}

inline Integer from_int64(std::int64_t v) {
  Integer r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

bool is_prime(long p);

}  // namespace workbench
