// Brute-force reference computations used only by tests. Nothing here
// calls into the library's arithmetic paths.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

/// Count of p with p^k | a by repeated division.
inline int valuation(std::int64_t p, mpz_class a) {
  if (a < 0) a = -a;
  int k = 0;
  while (a % p == 0) {
    a /= p;
    ++k;
  }
  return k;
}

inline mpz_class factorial(int k) {
  mpz_class r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

/// Number of partitions of n with parts <= k by the recurrence
/// p(n, k) = p(n, k - 1) + p(n - k, k).
inline std::int64_t partition_count(int n, int k) {
  std::vector<std::vector<std::int64_t>> t(n + 1, std::vector<std::int64_t>(k + 1, 0));
  for (int j = 0; j <= k; ++j) t[0][j] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= k; ++j) t[i][j] = t[i][j - 1] + (i >= j ? t[i - j][j] : 0);
  }
  return t[n][k];
}

/// All partitions by naive recursion, weakly decreasing.
inline void partitions_rec(int n, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

/// alpha(sigma) from factorials and powers.
inline mpz_class alpha(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  mpz_class v = factorial(n);
  for (int p : parts) v /= factorial(p);
  for (int p : parts) {
    mpz_class b = p + 1, e = 1;
    for (int i = 0; i < p; ++i) e *= b;
    v *= e;
  }
  return v;
}

inline mpz_class binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace oracle
