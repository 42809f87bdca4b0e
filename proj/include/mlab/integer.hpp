#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mlab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer ipow(long base, unsigned long exp) { return ipow(Integer(base), exp); }

inline std::size_t bit_length(const Integer& x) {
  return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline std::string to_decimal(const Integer& x) { return x.get_str(10); }

/// Parses an optionally signed decimal integer; returns false on malformed input.
bool parse_decimal(const std::string& text, Integer& out);

inline std::uint64_t mod_u64(const Integer& x, std::uint64_t q) {
  // mpz_fdiv_ui returns the nonnegative residue.
  return mpz_fdiv_ui(x.get_mpz_t(), q);
}

inline bool fits_i64(const Integer& x) { return x.fits_slong_p(); }

}  // namespace mlab
