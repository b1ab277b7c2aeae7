// Integer partitions, the restricted family of partitions with every part
// at most n - 2, multinomial coefficients, alpha(sigma), and the special
// partitions built from p-adic expansions.
#pragma once

#include "cybord/integer.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cybord {

/// An unordered partition of n, stored with parts weakly decreasing.
class Partition {
 public:
  /// Accepts parts in any order; throws std::invalid_argument on an empty
  /// list or a non-positive part.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "1,1,3" (any order, optional spaces).
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  std::vector<int> increasing() const;
  int n() const { return n_; }
  std::size_t size() const { return parts_.size(); }
  int max_part() const { return parts_.front(); }

  /// Increasing notation, "1,1,3".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Compares canonical (decreasing) forms lexicographically.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Order on increasing-sorted part tuples: (1,1,1,1) < (1,1,2) < (2,2).
bool increasing_lex_less(const Partition& a, const Partition& b);

namespace partitions {

/// Calls visit on every partition of n in reverse-lexicographic order of
/// decreasing forms, starting from (n). Only one partition is live at a
/// time.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

/// As above but restricted to parts <= max_part.
void for_each_partition(int n, int max_part, const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate_all(int n);

/// Partitions of n >= 3 with every part <= n - 2.
std::vector<Partition> hat_P(int n);

/// hat_P(n) re-sorted by increasing_lex_less.
std::vector<Partition> hat_P_increasing(int n);

bool in_hat_P(const Partition& sigma);

const Integer& factorial(int k);

Integer multinomial(const Partition& sigma);

/// multinomial(sigma) * prod (sigma_i + 1)^sigma_i.
Integer alpha(const Partition& sigma);

/// ord_p of multinomial(sigma) by Legendre's formula, without forming the
/// coefficient.
int multinomial_valuation(const Partition& sigma, std::int64_t p);

/// a_i copies of p^i for every base-p digit a_i of n.
Partition sigma_p(int n, std::int64_t p);

/// p copies of p^{s-1}; requires n = p^s.
Partition tau_p(int n, std::int64_t p);

/// q copies of q^{r-1} plus a single 1; requires n = q^r + 1.
Partition omega_q(int n, std::int64_t q);

/// One checked clause of the divisibility proposition for a single prime.
struct PowerClause {
  char part = 'a';             // 'a', 'b' or 'c'
  std::int64_t prime = 0;
  Partition witness{1};        // sigma(p), tau(p) or omega(q)
  int witness_valuation = 0;   // exact ord_p of multinomial(witness)
  int expected_valuation = 0;  // 0 for (a), 1 for (b) and (c)
  std::size_t scanned = 0;     // partitions checked for ord >= 1, (b)/(c) only
  int min_valuation = -1;      // min ord over hat_P(n), (b)/(c) only
  bool passed = false;
};

struct PowerReport {
  int n = 0;
  std::vector<PowerClause> clauses;
  bool passed = false;
};

PowerReport check_power(int n);

}  // namespace partitions
}  // namespace cybord
