#pragma once

#include <cstddef>
#include <string>

#include <gmpxx.h>

namespace nfree {

// Exact nonnegative counts. Linear-extension numbers leave 64 bits behind
// around n = 21, so everything countable goes through GMP.
using Count = mpz_class;

// Reduced fraction with positive denominator (mpq_class canonicalizes).
using ExactFraction = mpq_class;

inline Count factorial(std::size_t n) {
  Count out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

inline Count floor_of(const ExactFraction& q) {
  Count out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline std::string to_decimal(const Count& c) { return c.get_str(10); }

// "num/den", or just "num" when the denominator is 1.
inline std::string to_decimal(const ExactFraction& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

}  // namespace nfree
