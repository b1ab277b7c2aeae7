// Exact computations in H^*(CP^{s_1} x ... x CP^{s_k}; Z)
//   = Z[u_1..u_k] / (u_1^{s_1+1}, ..., u_k^{s_k+1})
// and the characteristic numbers of the hypersurface N dual to c_1.
#pragma once

#include "cybord/integer.hpp"
#include "cybord/partitions.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cybord::cohomology {

/// CP^{s_1} x ... x CP^{s_k}; factor i carries generator u_i with
/// u_i^{s_i+1} = 0. Factors follow the canonical (decreasing) part order.
class ProjProductSpace {
 public:
  explicit ProjProductSpace(Partition sigma);

  const Partition& sigma() const { return sigma_; }
  const std::vector<int>& caps() const { return sigma_.parts(); }
  std::size_t factors() const { return sigma_.size(); }
  int complex_dim() const { return sigma_.n(); }

 private:
  Partition sigma_;
};

using Exponents = std::vector<int>;

/// Element of the truncated ring. Terms above a cap are dropped on
/// construction and after every product; zero coefficients are never stored.
class TruncatedPolynomial {
 public:
  explicit TruncatedPolynomial(std::vector<int> caps) : caps_(std::move(caps)) {}

  static TruncatedPolynomial constant(std::vector<int> caps, const Integer& c);
  static TruncatedPolynomial generator(std::vector<int> caps, std::size_t i);

  const std::vector<int>& caps() const { return caps_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Exponents& e) const;
  /// Adds c * u^e; ignored when e exceeds a cap.
  void add_term(const Exponents& e, const Integer& c);

  /// Terms of total degree d (cohomological degree 2d).
  TruncatedPolynomial homogeneous(int d) const;

  TruncatedPolynomial& operator+=(const TruncatedPolynomial& o);
  TruncatedPolynomial& operator-=(const TruncatedPolynomial& o);
  TruncatedPolynomial& operator*=(const Integer& c);

  friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a += b; }
  friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a -= b; }
  friend TruncatedPolynomial operator*(TruncatedPolynomial a, const Integer& c) { return a *= c; }
  friend TruncatedPolynomial operator*(const Integer& c, TruncatedPolynomial a) { return a *= c; }
  friend TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
  friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;

  TruncatedPolynomial pow(unsigned k) const;

  /// e.g. "4*u1^3 + 1".
  std::string to_string() const;

 private:
  void require_same_ring(const TruncatedPolynomial& o) const;

  std::vector<int> caps_;
  std::map<Exponents, Integer> terms_;
};

/// A total Chern class 1 + c_1 + c_2 + ...
struct ChernData {
  TruncatedPolynomial total;

  /// c_d, the degree-d piece; c_0 = 1.
  TruncatedPolynomial piece(int d) const { return total.homogeneous(d); }
};

/// <x, [V]>: the coefficient of u_1^{s_1} ... u_k^{s_k}.
Integer fundamental_pairing(const TruncatedPolynomial& x);

/// prod_i (1 + u_i)^{s_i + 1}.
ChernData chern_total(const ProjProductSpace& v);

/// sum_i (s_i + 1) u_i^j: the power sum of the divisor classes v_1..v_m.
TruncatedPolynomial divisor_power_sum(const ProjProductSpace& v, int j);

/// s_j by Newton's identity s_j = c_1 s_{j-1} - c_2 s_{j-2} + ... + (-1)^{j-1} j c_j.
TruncatedPolynomial s_class(const ChernData& c, int j);

/// s_{n-1}(N_sigma) = <(sum v_i^{n-1}) c_1 - c_1^n, [V_sigma]>, sigma a
/// partition of n >= 2.
Integer s_number_hypersurface(const Partition& sigma);

/// Chern class of N_sigma, pulled back from V: c(TV) / (1 + c_1(TV)).
ChernData hypersurface_chern(const Partition& sigma);

/// <P(c(TN)) * c_1(TV), [V]> for a class P on N of top degree n - 1.
Integer pair_on_hypersurface(const Partition& sigma, const TruncatedPolynomial& class_on_n);

/// One tangential Chern number c_omega(N); omega lists class indices,
/// e.g. (2,1) is c_1 c_2.
struct ChernNumber {
  Partition omega;
  Integer value;
};

/// All c_omega(N_sigma) with ||omega|| = n - 1, omega in reverse-lex order
/// so the top class c_{n-1} (the Euler characteristic) comes first.
std::vector<ChernNumber> chern_numbers_hypersurface(const Partition& sigma);

Integer euler_characteristic(const Partition& sigma);

/// s_{n-1}(N) from the Chern classes of N via Newton's identity; agrees
/// with s_number_hypersurface.
Integer s_number_via_hypersurface_chern(const Partition& sigma);

/// "c1^2*c2" style label.
std::string chern_monomial_name(const Partition& omega);

}  // namespace cybord::cohomology
