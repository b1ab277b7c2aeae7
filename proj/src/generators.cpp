#include "cybord/generators.hpp"

#include "cybord/cohomology.hpp"
#include "cybord/parallel.hpp"

#include <stdexcept>

namespace cybord::generators {

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer gcd_alpha(int n) {
  if (n < 3) throw std::domain_error("gcd_alpha: requires n >= 3, got " + std::to_string(n));
  Integer acc = 0;
  partitions::for_each_partition(n, n - 2, [&](const Partition& s) { acc = gcd(acc, partitions::alpha(s)); });
  return acc;
}

GcdReport verify_gcd_identity(int n_max, unsigned jobs) {
  if (n_max < 3) throw std::domain_error("verify_gcd_identity: requires n_max >= 3");
  GcdReport report;
  report.rows.resize(static_cast<std::size_t>(n_max - 2));
  parallel_for(report.rows.size(), jobs, [&](std::size_t idx) {
    auto& row = report.rows[idx];
    row.n = static_cast<int>(idx) + 3;
    row.g = numthy::g(row.n);
    Integer acc = 0;
    partitions::for_each_partition(row.n, row.n - 2, [&](const Partition& s) {
      acc = gcd(acc, partitions::alpha(s));
      ++row.partitions;
    });
    row.gcd = acc;
    if (row.n > 3) row.tag = numthy::classify(row.n);
    row.passed = row.gcd == make_integer(row.g) && (!row.tag || row.tag->consistent());
  });
  report.passed = true;
  for (const auto& row : report.rows) {
    if (row.tag) ++report.case_counts[row.tag->tag];
    report.passed = report.passed && row.passed;
  }
  return report;
}

namespace {

/// Set of primes (by index into a prime table) dividing a value.
using Support = std::vector<bool>;

Support intersect(const Support& a, const Support& b) {
  Support out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

bool empty(const Support& s) {
  for (bool bit : s) {
    if (bit) return false;
  }
  return true;
}

// Lexicographically first k-subset of `classes` (given in order) whose
// supports have empty intersection.
bool first_cover(const std::vector<Support>& classes, std::size_t k, std::size_t start, const Support& acc,
                 std::vector<std::size_t>& chosen) {
  if (chosen.size() == k) return empty(acc);
  for (std::size_t i = start; i + (k - chosen.size()) <= classes.size(); ++i) {
    chosen.push_back(i);
    if (first_cover(classes, k, i + 1, intersect(acc, classes[i]), chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

GeneratorCertificate certificate(int n) {
  if (n < 3) throw std::domain_error("certificate: requires n >= 3, got " + std::to_string(n));
  GeneratorCertificate cert;
  cert.n = n;
  cert.target = numthy::g(n);
  const Integer target = make_integer(cert.target);

  const auto candidates = partitions::hat_P_increasing(n);
  cert.candidates = candidates.size();
  std::vector<Integer> alphas;
  alphas.reserve(candidates.size());
  Integer total_gcd = 0;
  for (const auto& s : candidates) {
    alphas.push_back(partitions::alpha(s));
    total_gcd = gcd(total_gcd, alphas.back());
  }
  if (total_gcd != target) {
    throw std::logic_error("certificate: gcd of alpha over hat_P(" + std::to_string(n) + ") is " +
                           to_decimal(total_gcd) + ", expected " + std::to_string(cert.target));
  }

  // Every prime factor of alpha(sigma) is at most n + 1, so the prime
  // support of alpha / g decides whether a subset reaches gcd g.
  const auto primes = numthy::primes_up_to(n + 1);
  std::vector<Support> classes;
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    Integer rest = alphas[i] / target;
    Support support(primes.size(), false);
    for (std::size_t j = 0; j < primes.size(); ++j) {
      Integer p = make_integer(primes[j]);
      if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        support[j] = true;
        mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      }
    }
    if (rest != 1) throw std::logic_error("certificate: alpha has a prime factor above n + 1");
    bool seen = false;
    for (const auto& c : classes) {
      if (c == support) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      classes.push_back(std::move(support));
      representative.push_back(i);
    }
  }

  std::vector<std::size_t> chosen;
  const Support all(primes.size(), true);
  for (std::size_t k = 1; k <= classes.size(); ++k) {
    chosen.clear();
    if (first_cover(classes, k, 0, all, chosen)) break;
  }
  if (chosen.empty()) throw std::logic_error("certificate: no covering support found");

  std::vector<Integer> coefficients{1};
  Integer running = alphas[representative[chosen.front()]];
  for (std::size_t c = 1; c < chosen.size(); ++c) {
    auto step = extended_gcd(running, alphas[representative[chosen[c]]]);
    for (auto& coeff : coefficients) coeff *= step.x;
    coefficients.push_back(step.y);
    running = step.gcd;
  }
  if (running != target) throw std::logic_error("certificate: Bezout combination missed g(n)");

  for (std::size_t c = 0; c < chosen.size(); ++c) {
    if (coefficients[c] == 0) continue;
    cert.entries.push_back({candidates[representative[chosen[c]]], -coefficients[c]});
  }
  cert.achieved = evaluate_via_alpha(cert);
  return cert;
}

Integer evaluate_via_alpha(const GeneratorCertificate& cert) {
  Integer sum = 0;
  for (const auto& e : cert.entries) sum -= e.coefficient * partitions::alpha(e.sigma);
  return sum;
}

Integer evaluate_via_cohomology(const GeneratorCertificate& cert) {
  Integer sum = 0;
  for (const auto& e : cert.entries) sum += e.coefficient * cohomology::s_number_hypersurface(e.sigma);
  return sum;
}

LowDimTable low_dim_table() {
  using numthy::m;
  LowDimTable table;
  table.rows.push_back({2, "g(3)", 48, numthy::g(3), certificate(3)});
  table.rows.push_back({3, "m3*m2", m(3) * m(2), numthy::g(4), certificate(4)});
  table.rows.push_back({4, "2*m4*m3", 2 * m(4) * m(3), numthy::g(5), certificate(5)});

  const std::int64_t s2_target = numthy::g(3);
  for (const Partition& sigma : {Partition{3}, Partition{1, 1, 1}}) {
    SingleRepresentative rep{sigma, cohomology::s_number_hypersurface(sigma),
                             cohomology::euler_characteristic(sigma), 0};
    if (rep.s_number == make_integer(s2_target)) rep.sign = 1;
    if (rep.s_number == make_integer(-s2_target)) rep.sign = -1;
    table.representatives.push_back(std::move(rep));
  }

  // s_3(y_3) = 3 c_3(y_3) = g(4), and chi = c_3 = 2 (h11 - h21).
  table.y3_euler = numthy::g(4) / 3;
  table.y3_hodge_difference = table.y3_euler / 2;
  return table;
}

}  // namespace cybord::generators
