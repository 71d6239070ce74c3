#pragma once

#include <numeric>
#include <vector>

#include "totalcolor/error.hpp"

namespace totalcolor {

/// Euler's totient by trial-division factorization.
constexpr int totient(int n) {
  if (n < 1) throw PreconditionError("totient: n must be positive");
  int result = n;
  int rest = n;
  for (int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

constexpr int least_prime_factor(int m) {
  if (m < 2) throw PreconditionError("least_prime_factor: m must be at least 2");
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) return p;
  }
  return m;
}

/// Reduces `value` modulo `q` into 1..q, with residue 0 mapped to q.
constexpr int wrap_to_range(long long value, int q) {
  long long r = value % q;
  if (r < 0) r += q;
  return r == 0 ? q : static_cast<int>(r);
}

constexpr int mod(long long value, int q) {
  long long r = value % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

/// Splits n = 2^k * m with m odd.
struct TwoAdic {
  int k = 0;
  int odd_part = 1;
};

constexpr TwoAdic two_adic(int n) {
  if (n < 1) throw PreconditionError("two_adic: n must be positive");
  TwoAdic out{0, n};
  while (out.odd_part % 2 == 0) {
    out.odd_part /= 2;
    ++out.k;
  }
  return out;
}

inline std::vector<int> units_mod(int n) {
  std::vector<int> units;
  for (int i = 1; i < n; ++i) {
    if (std::gcd(i, n) == 1) units.push_back(i);
  }
  return units;
}

}  // namespace totalcolor
