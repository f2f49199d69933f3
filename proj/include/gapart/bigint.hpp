#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace gapart {

/// Arbitrary-precision signed integer used for every count and coefficient.
using BigInt = mpz_class;

using BigVector = std::vector<BigInt>;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Nearest-below double; only used for asymptotic ratios, never for exact checks.
inline double to_double(const BigInt& v) { return v.get_d(); }

/// Number of bits needed to write |v| (0 for v == 0).
inline std::size_t bit_length(const BigInt& v) {
  return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace gapart
