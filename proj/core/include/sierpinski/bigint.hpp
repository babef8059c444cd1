#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "sierpinski/errors.hpp"

namespace sierpinski {

using BigInt = boost::multiprecision::cpp_int;

/// base^exp by binary exponentiation; int_pow(x, 0) == 1, including 0^0.
inline BigInt int_pow(BigInt base, unsigned long exp) {
  BigInt result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

/// 1 + n + n^2 + ... + n^(terms-1), accumulated without division.
/// geometric_sum(n, 0) == 0.
inline BigInt geometric_sum(long n, long terms) {
  BigInt sum = 0;
  BigInt power = 1;
  for (long i = 0; i < terms; ++i) {
    sum += power;
    power *= n;
  }
  return sum;
}

/// Exact binomial coefficient C(n, k); 0 when k < 0 or k > n.
inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) after this step
  }
  return result;
}

}  // namespace sierpinski
