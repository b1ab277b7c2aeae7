// Exact elementary number theory: primality, prime powers, p-adic
// valuations and digits, the sequences m_i and g(n), and the seven-way
// classification of n used in the gcd identity.
#pragma once

#include "cybord/integer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cybord::numthy {

/// n = prime^exponent with exponent >= 1.
struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Deterministic trial division.
bool is_prime(std::int64_t n);

/// Primes p with 2 <= p <= bound, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// The decomposition n = p^s, or nullopt when n is not a prime power.
std::optional<PrimePower> prime_power(std::int64_t n);

/// True iff n = p^s with s >= 1 for the given prime p.
bool is_power_of(std::int64_t n, std::int64_t p);

/// Largest k with p^k | a. Throws std::domain_error for a == 0 or
/// non-prime p.
int ord(std::int64_t p, const Integer& a);

/// m_i: p when i+1 = p^s, otherwise 1. Requires i >= 1.
std::int64_t m(std::int64_t i);

/// g(n) for n >= 3: 48 at n = 3, m_{n-1} m_{n-2} for even n, twice that
/// for odd n.
std::int64_t g(std::int64_t n);

/// Base-p digits a_0..a_s of n, least significant first.
std::vector<int> p_adic_digits(std::int64_t n, std::int64_t p);

enum class ProofCase { I = 1, II, III, IV, V, VI, VII };

/// Which of the seven cases n > 3 falls into, with its witnesses.
///   I    n is neither p^s nor q^r + 1
///   II   n = p^s = q^r + 1, n even
///   III  n = p^s = q^r + 1, n odd
///   IV   n = p^s only, even
///   V    n = p^s only, odd
///   VI   n = q^r + 1 only, even
///   VII  n = q^r + 1 only, odd
struct CaseTag {
  ProofCase tag = ProofCase::I;
  std::int64_t n = 0;
  std::optional<PrimePower> power;          // n = p^s
  std::optional<PrimePower> power_plus_one; // n = q^r + 1
  bool even = false;

  /// Re-checks the defining equations of the recorded witnesses.
  bool consistent() const;
};

CaseTag classify(std::int64_t n);

std::string case_name(ProofCase c);

}  // namespace cybord::numthy
