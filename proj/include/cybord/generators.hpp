// The gcd identity over the restricted partitions and integral
// combinations of hypersurfaces N_sigma realizing the generators y_{n-1}.
#pragma once

#include "cybord/integer.hpp"
#include "cybord/numthy.hpp"
#include "cybord/partitions.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cybord::generators {

struct ExtendedGcd {
  Integer gcd;
  Integer x;
  Integer y;
};

/// a*x + b*y = gcd(a, b) >= 0 by the textbook iterative Euclidean algorithm.
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// gcd of alpha(sigma) over hat_P(n).
Integer gcd_alpha(int n);

struct GcdRow {
  int n = 0;
  std::int64_t g = 0;
  Integer gcd;
  std::size_t partitions = 0;
  std::optional<numthy::CaseTag> tag;  // absent for n = 3
  bool passed = false;
};

struct GcdReport {
  std::vector<GcdRow> rows;
  std::map<numthy::ProofCase, int> case_counts;
  bool passed = false;
};

GcdReport verify_gcd_identity(int n_max, unsigned jobs = 1);

struct CertificateEntry {
  Partition sigma;
  Integer coefficient;
};

/// sum coefficient * [N_sigma] with s-number exactly g(n).
struct GeneratorCertificate {
  int n = 0;
  std::int64_t target = 0;
  std::vector<CertificateEntry> entries;
  Integer achieved;
  std::size_t candidates = 0;  // |hat_P(n)|
};

/// Deterministic certificate for y_{n-1}. Support is the
/// lexicographically first smallest set of partitions (increasing-part
/// order) whose alpha values have gcd g(n); coefficients come from the
/// running extended Euclidean algorithm over that support, negated since
/// s_{n-1}(N_sigma) = -alpha(sigma).
GeneratorCertificate certificate(int n);

/// sum coefficient * (-alpha(sigma)).
Integer evaluate_via_alpha(const GeneratorCertificate& cert);

/// sum coefficient * s_{n-1}(N_sigma) computed in cohomology.
Integer evaluate_via_cohomology(const GeneratorCertificate& cert);

struct LowDimRow {
  int dim = 0;                  // i in y_i
  std::string formula;          // how the target is assembled from m
  std::int64_t from_m = 0;      // the formula's value
  std::int64_t target = 0;      // g(i + 1)
  GeneratorCertificate certificate;
};

struct SingleRepresentative {
  Partition sigma;
  Integer s_number;
  Integer euler;
  int sign = 0;  // +1 represents y_i, -1 represents -y_i, 0 neither
};

struct LowDimTable {
  std::vector<LowDimRow> rows;
  std::vector<SingleRepresentative> representatives;  // complex dimension 2
  // For a Calabi-Yau 3-fold: s_3 = 3 c_3 and chi = 2 (h11 - h21).
  std::int64_t y3_euler = 0;
  std::int64_t y3_hodge_difference = 0;
};

LowDimTable low_dim_table();

}  // namespace cybord::generators
