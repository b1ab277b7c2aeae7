#include "cybord/partitions.hpp"

#include "cybord/numthy.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cybord {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition: no parts");
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>{})) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>{});
  }
  if (parts_.back() < 1) throw std::invalid_argument("partition: parts must be positive");
  for (int p : parts_) n_ += p;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw std::invalid_argument("partition: cannot parse '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::vector<int> Partition::increasing() const { return {parts_.rbegin(), parts_.rend()}; }

std::string Partition::to_string() const {
  std::string out;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    if (!out.empty()) out += ',';
    out += std::to_string(*it);
  }
  return out;
}

bool increasing_lex_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(a.parts().rbegin(), a.parts().rend(), b.parts().rbegin(),
                                      b.parts().rend());
}

namespace partitions {

void for_each_partition(int n, int max_part, const std::function<void(const Partition&)>& visit) {
  if (n < 1) throw std::domain_error("partitions: n must be positive, got " + std::to_string(n));
  if (max_part < 1) return;
  max_part = std::min(max_part, n);

  // Largest partition with the bound: as many max_part as fit, then the rest.
  std::vector<int> a(static_cast<std::size_t>(n / max_part), max_part);
  if (n % max_part) a.push_back(n % max_part);

  for (;;) {
    visit(Partition(a));
    // Successor in reverse-lex order: lower the rightmost part > 1 by one and
    // refill the tail greedily with parts no larger than it.
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return;
    int k = --a.back();
    int rest = ones + 1;
    while (rest > k) {
      a.push_back(k);
      rest -= k;
    }
    if (rest > 0) a.push_back(rest);
  }
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  for_each_partition(n, n, visit);
}

std::vector<Partition> enumerate_all(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<Partition> hat_P(int n) {
  if (n < 3) throw std::domain_error("hat_P: requires n >= 3, got " + std::to_string(n));
  std::vector<Partition> out;
  for_each_partition(n, n - 2, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<Partition> hat_P_increasing(int n) {
  auto out = hat_P(n);
  std::sort(out.begin(), out.end(), increasing_lex_less);
  return out;
}

bool in_hat_P(const Partition& sigma) { return sigma.n() >= 3 && sigma.max_part() <= sigma.n() - 2; }

namespace {

constexpr int kFactorialTableSize = 1001;

const std::vector<Integer>& factorial_table() {
  static const std::vector<Integer> table = [] {
    std::vector<Integer> t(kFactorialTableSize);
    t[0] = 1;
    for (int k = 1; k < kFactorialTableSize; ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  return table;
}

int legendre(std::int64_t k, std::int64_t p) {
  int v = 0;
  while (k > 0) {
    k /= p;
    v += static_cast<int>(k);
  }
  return v;
}

Integer int_power(std::int64_t p, int e) { return pow(make_integer(p), static_cast<unsigned long>(e)); }

std::int64_t checked_power(std::int64_t p, int e) {
  std::int64_t v = 1;
  for (int i = 0; i < e; ++i) v *= p;
  return v;
}

}  // namespace

const Integer& factorial(int k) {
  if (k < 0 || k >= kFactorialTableSize) {
    throw std::domain_error("factorial: argument out of range: " + std::to_string(k));
  }
  return factorial_table()[static_cast<std::size_t>(k)];
}

Integer multinomial(const Partition& sigma) {
  Integer denom = 1;
  for (int part : sigma.parts()) denom *= factorial(part);
  Integer out;
  mpz_divexact(out.get_mpz_t(), factorial(sigma.n()).get_mpz_t(), denom.get_mpz_t());
  return out;
}

Integer alpha(const Partition& sigma) {
  Integer out = multinomial(sigma);
  for (int part : sigma.parts()) out *= int_power(part + 1, part);
  return out;
}

int multinomial_valuation(const Partition& sigma, std::int64_t p) {
  if (!numthy::is_prime(p)) throw std::domain_error("multinomial_valuation: p must be prime");
  int v = legendre(sigma.n(), p);
  for (int part : sigma.parts()) v -= legendre(part, p);
  return v;
}

Partition sigma_p(int n, std::int64_t p) {
  auto digits = numthy::p_adic_digits(n, p);
  std::vector<int> parts;
  std::int64_t place = 1;
  for (int digit : digits) {
    for (int j = 0; j < digit; ++j) parts.push_back(static_cast<int>(place));
    place *= p;
  }
  return Partition(std::move(parts));
}

Partition tau_p(int n, std::int64_t p) {
  auto pp = numthy::prime_power(n);
  if (!pp || pp->prime != p) {
    throw std::domain_error("tau_p: " + std::to_string(n) + " is not a power of " + std::to_string(p));
  }
  return Partition(std::vector<int>(static_cast<std::size_t>(p),
                                    static_cast<int>(checked_power(p, pp->exponent - 1))));
}

Partition omega_q(int n, std::int64_t q) {
  auto pp = numthy::prime_power(n - 1);
  if (!pp || pp->prime != q) {
    throw std::domain_error("omega_q: " + std::to_string(n) + " - 1 is not a power of " +
                            std::to_string(q));
  }
  std::vector<int> parts(static_cast<std::size_t>(q), static_cast<int>(checked_power(q, pp->exponent - 1)));
  parts.push_back(1);
  return Partition(std::move(parts));
}

PowerReport check_power(int n) {
  if (n < 3) throw std::domain_error("check_power: requires n >= 3, got " + std::to_string(n));
  PowerReport report;
  report.n = n;
  report.passed = true;

  auto scan_restricted = [n](std::int64_t p, PowerClause& clause) {
    int min_v = -1;
    std::size_t count = 0;
    for_each_partition(n, n - 2, [&](const Partition& s) {
      int v = multinomial_valuation(s, p);
      if (min_v < 0 || v < min_v) min_v = v;
      ++count;
    });
    clause.scanned = count;
    clause.min_valuation = min_v;
  };

  for (std::int64_t p : numthy::primes_up_to(n)) {
    PowerClause clause;
    clause.prime = p;
    if (numthy::is_power_of(n, p)) {
      clause.part = 'b';
      clause.witness = tau_p(n, p);
      clause.expected_valuation = 1;
      scan_restricted(p, clause);
    } else if (numthy::is_power_of(n - 1, p)) {
      clause.part = 'c';
      clause.witness = omega_q(n, p);
      clause.expected_valuation = 1;
      scan_restricted(p, clause);
    } else {
      clause.part = 'a';
      clause.witness = sigma_p(n, p);
      clause.expected_valuation = 0;
    }
    clause.witness_valuation = numthy::ord(p, multinomial(clause.witness));
    clause.passed = clause.witness_valuation == clause.expected_valuation;
    if (clause.part != 'a') clause.passed = clause.passed && clause.min_valuation >= 1;
    report.passed = report.passed && clause.passed;
    report.clauses.push_back(std::move(clause));
  }
  return report;
}

}  // namespace partitions
}  // namespace cybord
