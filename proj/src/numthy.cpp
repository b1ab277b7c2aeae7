#include "cybord/numthy.hpp"

#include <stdexcept>

namespace cybord::numthy {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= bound; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::optional<PrimePower> prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  // The smallest divisor > 1 is necessarily prime.
  std::int64_t p = n;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  int s = 0;
  while (n % p == 0) {
    n /= p;
    ++s;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, s};
}

bool is_power_of(std::int64_t n, std::int64_t p) {
  auto pp = prime_power(n);
  return pp && pp->prime == p;
}

int ord(std::int64_t p, const Integer& a) {
  if (a == 0) throw std::domain_error("ord: valuation of zero is undefined");
  if (!is_prime(p)) throw std::domain_error("ord: " + std::to_string(p) + " is not prime");
  Integer rest = abs(a);
  Integer prime = make_integer(p);
  // mpz_remove strips every factor of prime and returns the count.
  Integer stripped;
  auto k = mpz_remove(stripped.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
  return static_cast<int>(k);
}

std::int64_t m(std::int64_t i) {
  if (i < 1) throw std::domain_error("m: index must be >= 1, got " + std::to_string(i));
  auto pp = prime_power(i + 1);
  return pp ? pp->prime : 1;
}

std::int64_t g(std::int64_t n) {
  if (n < 3) throw std::domain_error("g: defined only for n >= 3, got " + std::to_string(n));
  if (n == 3) return 48;
  std::int64_t base = m(n - 1) * m(n - 2);
  return n % 2 == 1 ? 2 * base : base;
}

std::vector<int> p_adic_digits(std::int64_t n, std::int64_t p) {
  if (n < 1) throw std::domain_error("p_adic_digits: n must be positive");
  if (!is_prime(p)) throw std::domain_error("p_adic_digits: " + std::to_string(p) + " is not prime");
  std::vector<int> digits;
  while (n > 0) {
    digits.push_back(static_cast<int>(n % p));
    n /= p;
  }
  return digits;
}

bool CaseTag::consistent() const {
  auto check_power = [](const PrimePower& pp, std::int64_t target) {
    if (!is_prime(pp.prime) || pp.exponent < 1) return false;
    std::int64_t v = 1;
    for (int i = 0; i < pp.exponent; ++i) v *= pp.prime;
    return v == target;
  };
  if (power && !check_power(*power, n)) return false;
  if (power_plus_one && !check_power(*power_plus_one, n - 1)) return false;
  if (even != (n % 2 == 0)) return false;
  switch (tag) {
    case ProofCase::I: return !power && !power_plus_one;
    case ProofCase::II: return power && power_plus_one && even;
    case ProofCase::III: return power && power_plus_one && !even;
    case ProofCase::IV: return power && !power_plus_one && even;
    case ProofCase::V: return power && !power_plus_one && !even;
    case ProofCase::VI: return !power && power_plus_one && even;
    case ProofCase::VII: return !power && power_plus_one && !even;
  }
  return false;
}

CaseTag classify(std::int64_t n) {
  if (n <= 3) throw std::domain_error("classify: requires n > 3, got " + std::to_string(n));
  CaseTag t;
  t.n = n;
  t.even = n % 2 == 0;
  t.power = prime_power(n);
  t.power_plus_one = prime_power(n - 1);
  const bool a = t.power.has_value();
  const bool b = t.power_plus_one.has_value();
  if (!a && !b) {
    t.tag = ProofCase::I;
  } else if (a && b) {
    t.tag = t.even ? ProofCase::II : ProofCase::III;
  } else if (a) {
    t.tag = t.even ? ProofCase::IV : ProofCase::V;
  } else {
    t.tag = t.even ? ProofCase::VI : ProofCase::VII;
  }
  return t;
}

std::string case_name(ProofCase c) {
  switch (c) {
    case ProofCase::I: return "I";
    case ProofCase::II: return "II";
    case ProofCase::III: return "III";
    case ProofCase::IV: return "IV";
    case ProofCase::V: return "V";
    case ProofCase::VI: return "VI";
    case ProofCase::VII: return "VII";
  }
  return "?";
}

}  // namespace cybord::numthy
