#pragma once

// Exact arithmetic used everywhere in the workbench. All quantities are
// GMP-backed rationals kept canonical (lowest terms, positive denominator),
// so equality is structural and serialization round-trips bit-exactly.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixvol {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "a/b" or "a" with optional sign; rejects zero denominators and junk.
Rat parse_rat(const std::string& text);

// "a/b", or just "a" when the denominator is 1.
std::string rat_to_string(const Rat& q);

Int int_pow(const Int& base, unsigned long exp);
Rat rat_pow(const Rat& base, long exp);  // negative exp requires base != 0

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// 2^k as a rational, k may be negative.
Rat pow2(long k);

// Floor of log2 for exact powers of two; throws if q is not a power of 2.
long exact_log2(const Rat& q);

inline bool is_nonneg(const Rat& q) { return sgn(q) >= 0; }

}  // namespace mixvol
