#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace seaweed {

// Exact arithmetic. Every scalar in the library is an arbitrary-precision
// integer or rational; there is no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Serialized as "p" or "p/q" with q > 0.
inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string int_str(const Int& z) { return z.get_str(); }

}  // namespace seaweed
