#include "cybord/numthy.hpp"
#include "cybord/partitions.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace cybord;
using namespace cybord::partitions;

namespace {
std::vector<std::vector<int>> as_vectors(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}
}  // namespace

TEST_CASE("partition canonical form") {
  Partition a{1, 3, 1};
  CHECK(a.parts() == std::vector<int>{3, 1, 1});
  CHECK(a.n() == 5);
  CHECK(a.to_string() == "1,1,3");
  CHECK(a == Partition{3, 1, 1});
  CHECK(Partition::parse(" 3, 1,1") == a);
  CHECK_THROWS_AS(Partition(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS((Partition{2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1,x"), std::invalid_argument);
}

TEST_CASE("canonicalization is insensitive to input order") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 12; ++n) {
    for (auto parts : oracle::partitions(n)) {
      Partition ref(parts);
      std::shuffle(parts.begin(), parts.end(), rng);
      Partition shuffled(parts);
      CHECK(shuffled == ref);
      CHECK(multinomial(shuffled) == multinomial(ref));
      CHECK(alpha(shuffled) == alpha(ref));
    }
  }
}

TEST_CASE("enumerate_all small cases") {
  CHECK(as_vectors(enumerate_all(4)) ==
        std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(as_vectors(enumerate_all(3)) == std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(enumerate_all(7).size() == static_cast<std::size_t>(oracle::partition_count(7, 7)));
  CHECK(enumerate_all(7).size() == 15);
  CHECK(as_vectors(enumerate_all(1)) == std::vector<std::vector<int>>{{1}});
  CHECK_THROWS_AS(enumerate_all(0), std::domain_error);
}

TEST_CASE("enumeration matches the naive recursion and the count recurrence") {
  for (int n = 1; n <= 25; ++n) {
    auto all = enumerate_all(n);
    CHECK(as_vectors(all) == oracle::partitions(n));
    CHECK(static_cast<std::int64_t>(all.size()) == oracle::partition_count(n, n));
    CHECK(std::is_sorted(all.begin(), all.end(), std::greater<>{}));
  }
}

TEST_CASE("hat_P small cases") {
  CHECK(as_vectors(hat_P(3)) == std::vector<std::vector<int>>{{1, 1, 1}});
  CHECK(as_vectors(hat_P(4)) == std::vector<std::vector<int>>{{2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(as_vectors(hat_P(5)) ==
        std::vector<std::vector<int>>{{3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}});
  CHECK_THROWS_AS(hat_P(2), std::domain_error);
}

TEST_CASE("hat_P double characterization") {
  for (int n = 3; n <= 30; ++n) {
    auto all = enumerate_all(n);
    std::vector<Partition> by_max, by_exclusion;
    for (const auto& p : all) {
      if (p.max_part() <= n - 2) by_max.push_back(p);
      if (!(p == Partition{n}) && !(p == Partition{n - 1, 1})) by_exclusion.push_back(p);
    }
    auto hp = hat_P(n);
    CAPTURE(n);
    CHECK(hp == by_max);
    CHECK(hp == by_exclusion);
    CHECK(static_cast<std::int64_t>(hp.size()) == oracle::partition_count(n, n - 2));
  }
}

TEST_CASE("increasing-lex order") {
  auto inc = hat_P_increasing(4);
  CHECK(as_vectors(inc) == std::vector<std::vector<int>>{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}});
  auto inc5 = hat_P_increasing(5);
  CHECK(inc5[2] == (Partition{1, 1, 3}));
  CHECK(inc5[3] == (Partition{1, 2, 2}));
}

TEST_CASE("multinomial and alpha") {
  CHECK(multinomial(Partition{2, 2}) == 6);
  CHECK(multinomial(Partition{1, 1, 3}) == oracle::factorial(5) / oracle::factorial(3));
  CHECK(multinomial(Partition{1, 1, 3}) == 20);
  CHECK(multinomial(Partition{1, 1, 1}) == 6);
  CHECK(alpha(Partition{1, 1, 1}) == 48);
  CHECK(alpha(Partition{2, 2}) == 486);
  CHECK(alpha(Partition{1, 1, 1, 1}) == 384);
  for (int n = 1; n <= 16; ++n) {
    for (const auto& parts : oracle::partitions(n)) {
      Partition p(parts);
      CHECK(alpha(p) == oracle::alpha(parts));
      CHECK(alpha(p) > 0);
    }
  }
}

TEST_CASE("Legendre valuation agrees with exact valuation of the multinomial") {
  for (int n = 1; n <= 20; ++n) {
    for (const auto& p : enumerate_all(n)) {
      Integer mult = multinomial(p);
      for (std::int64_t prime : numthy::primes_up_to(23)) {
        CHECK(multinomial_valuation(p, prime) == oracle::valuation(prime, mult));
      }
    }
  }
}

TEST_CASE("special partitions") {
  CHECK(sigma_p(6, 2) == (Partition{4, 2}));
  CHECK(sigma_p(5, 2) == (Partition{4, 1}));
  CHECK(sigma_p(9, 3) == (Partition{9}));
  CHECK(tau_p(4, 2) == (Partition{2, 2}));
  CHECK(tau_p(9, 3) == (Partition{3, 3, 3}));
  CHECK(tau_p(8, 2) == (Partition{4, 4}));
  CHECK(omega_q(5, 2) == (Partition{2, 2, 1}));
  CHECK(omega_q(10, 3) == (Partition{3, 3, 3, 1}));
  CHECK(omega_q(3, 2) == (Partition{1, 1, 1}));
  CHECK_THROWS_AS(tau_p(6, 2), std::domain_error);
  CHECK_THROWS_AS(tau_p(9, 2), std::domain_error);
  CHECK_THROWS_AS(omega_q(6, 2), std::domain_error);
}

TEST_CASE("sigma_p sums to n") {
  for (int n = 1; n <= 100; ++n) {
    for (auto p : numthy::primes_up_to(n)) CHECK(sigma_p(n, p).n() == n);
  }
}

TEST_CASE("special partitions land in hat_P") {
  for (int n = 3; n <= 60; ++n) {
    auto pp = numthy::prime_power(n);
    auto qq = numthy::prime_power(n - 1);
    CAPTURE(n);
    if (pp) CHECK(in_hat_P(tau_p(n, pp->prime)));
    if (qq) CHECK(in_hat_P(omega_q(n, qq->prime)));
    if (!pp && !qq) {
      for (auto p : numthy::primes_up_to(n)) CHECK(in_hat_P(sigma_p(n, p)));
    }
  }
}

TEST_CASE("check_power spot values") {
  CHECK(numthy::ord(3, multinomial(Partition{3, 3})) == 0);
  CHECK(multinomial(Partition{3, 3}) == 20);
  CHECK(multinomial(Partition{4, 4}) == 70);
  CHECK(numthy::ord(2, Integer(70)) == 1);
  CHECK(multinomial(Partition{2, 2, 1}) == 30);
  CHECK(numthy::ord(2, Integer(30)) == 1);

  auto r8 = check_power(8);
  CHECK(r8.passed);
  auto it = std::find_if(r8.clauses.begin(), r8.clauses.end(), [](const PowerClause& c) { return c.prime == 2; });
  REQUIRE(it != r8.clauses.end());
  CHECK(it->part == 'b');
  CHECK(it->witness == (Partition{4, 4}));
  CHECK(it->witness_valuation == 1);

  auto r6 = check_power(6);
  auto c3 = std::find_if(r6.clauses.begin(), r6.clauses.end(), [](const PowerClause& c) { return c.prime == 3; });
  CHECK(c3->part == 'a');
  CHECK(c3->witness == (Partition{3, 3}));
  CHECK(c3->witness_valuation == 0);

  auto r5 = check_power(5);
  auto c2 = std::find_if(r5.clauses.begin(), r5.clauses.end(), [](const PowerClause& c) { return c.prime == 2; });
  CHECK(c2->part == 'c');
  CHECK(c2->witness == (Partition{2, 2, 1}));
  CHECK(c2->witness_valuation == 1);
}

TEST_CASE("check_power passes up to 40") {
  for (int n = 3; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(check_power(n).passed);
  }
}
