#include "cybord/cohomology.hpp"

#include <numeric>
#include <stdexcept>

namespace cybord::cohomology {

ProjProductSpace::ProjProductSpace(Partition sigma) : sigma_(std::move(sigma)) {}

TruncatedPolynomial TruncatedPolynomial::constant(std::vector<int> caps, const Integer& c) {
  TruncatedPolynomial p(std::move(caps));
  p.add_term(Exponents(p.caps_.size(), 0), c);
  return p;
}

TruncatedPolynomial TruncatedPolynomial::generator(std::vector<int> caps, std::size_t i) {
  if (i >= caps.size()) throw std::out_of_range("generator index out of range");
  TruncatedPolynomial p(std::move(caps));
  Exponents e(p.caps_.size(), 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

Integer TruncatedPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void TruncatedPolynomial::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != caps_.size()) throw std::invalid_argument("exponent vector has wrong length");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw std::invalid_argument("negative exponent");
    if (e[i] > caps_[i]) return;
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedPolynomial TruncatedPolynomial::homogeneous(int d) const {
  TruncatedPolynomial out(caps_);
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) == d) out.terms_.emplace(e, c);
  }
  return out;
}

void TruncatedPolynomial::require_same_ring(const TruncatedPolynomial& o) const {
  if (caps_ != o.caps_) throw std::invalid_argument("polynomials live in different rings");
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  a.require_same_ring(b);
  TruncatedPolynomial out(a.caps_);
  Exponents e(a.caps_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      bool fits = true;
      for (std::size_t i = 0; i < e.size() && fits; ++i) {
        e[i] = ea[i] + eb[i];
        fits = e[i] <= a.caps_[i];
      }
      if (fits) out.add_term(e, ca * cb);
    }
  }
  return out;
}

TruncatedPolynomial TruncatedPolynomial::pow(unsigned k) const {
  TruncatedPolynomial result = constant(caps_, 1);
  TruncatedPolynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string TruncatedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "u" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Integer mag = abs(c);
    if (mono.empty()) out += to_decimal(mag);
    else if (mag == 1) out += mono;
    else out += to_decimal(mag) + "*" + mono;
  }
  return out;
}

Integer fundamental_pairing(const TruncatedPolynomial& x) { return x.coefficient(x.caps()); }

ChernData chern_total(const ProjProductSpace& v) {
  const auto& caps = v.caps();
  auto total = TruncatedPolynomial::constant(caps, 1);
  for (std::size_t i = 0; i < caps.size(); ++i) {
    auto factor = TruncatedPolynomial::constant(caps, 1) + TruncatedPolynomial::generator(caps, i);
    total = total * factor.pow(static_cast<unsigned>(caps[i] + 1));
  }
  return {std::move(total)};
}

TruncatedPolynomial divisor_power_sum(const ProjProductSpace& v, int j) {
  const auto& caps = v.caps();
  TruncatedPolynomial out(caps);
  for (std::size_t i = 0; i < caps.size(); ++i) {
    Exponents e(caps.size(), 0);
    e[i] = j;
    out.add_term(e, caps[i] + 1);
  }
  return out;
}

TruncatedPolynomial s_class(const ChernData& c, int j) {
  if (j < 1) throw std::domain_error("s_class: degree must be >= 1");
  const auto& caps = c.total.caps();
  std::vector<TruncatedPolynomial> pieces;
  for (int d = 0; d <= j; ++d) pieces.push_back(c.piece(d));

  std::vector<TruncatedPolynomial> s;
  s.reserve(static_cast<std::size_t>(j) + 1);
  s.emplace_back(caps);  // unused s_0 slot
  for (int k = 1; k <= j; ++k) {
    TruncatedPolynomial sk(caps);
    for (int i = 1; i < k; ++i) {
      auto term = pieces[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
      if (i % 2 == 1) sk += term;
      else sk -= term;
    }
    auto last = pieces[static_cast<std::size_t>(k)] * Integer(k);
    if (k % 2 == 1) sk += last;
    else sk -= last;
    s.push_back(std::move(sk));
  }
  return s.back();
}

Integer s_number_hypersurface(const Partition& sigma) {
  const int n = sigma.n();
  if (n < 2) throw std::domain_error("s_number_hypersurface: requires n >= 2");
  ProjProductSpace v(sigma);
  auto c1 = chern_total(v).piece(1);
  auto value = divisor_power_sum(v, n - 1) * c1 - c1.pow(static_cast<unsigned>(n));
  return fundamental_pairing(value);
}

ChernData hypersurface_chern(const Partition& sigma) {
  ProjProductSpace v(sigma);
  auto c = chern_total(v);
  const auto& caps = v.caps();
  // (1 + c_1)^{-1} = sum_k (-c_1)^k, finite since the ring is nilpotent above degree n.
  auto minus_c1 = c.piece(1) * Integer(-1);
  auto inverse = TruncatedPolynomial::constant(caps, 1);
  auto power = TruncatedPolynomial::constant(caps, 1);
  for (int k = 1; k <= v.complex_dim(); ++k) {
    power = power * minus_c1;
    inverse += power;
  }
  return {c.total * inverse};
}

Integer pair_on_hypersurface(const Partition& sigma, const TruncatedPolynomial& class_on_n) {
  ProjProductSpace v(sigma);
  auto c1 = chern_total(v).piece(1);
  return fundamental_pairing(class_on_n * c1);
}

std::vector<ChernNumber> chern_numbers_hypersurface(const Partition& sigma) {
  const int n = sigma.n();
  if (n < 2) throw std::domain_error("chern_numbers_hypersurface: requires n >= 2");
  ProjProductSpace v(sigma);
  auto cn = hypersurface_chern(sigma);
  auto c1_ambient = chern_total(v).piece(1);

  std::vector<TruncatedPolynomial> pieces;
  for (int d = 0; d < n; ++d) pieces.push_back(cn.piece(d));

  std::vector<ChernNumber> out;
  partitions::for_each_partition(n - 1, [&](const Partition& omega) {
    auto product = TruncatedPolynomial::constant(v.caps(), 1);
    for (int index : omega.parts()) product = product * pieces[static_cast<std::size_t>(index)];
    out.push_back({omega, fundamental_pairing(product * c1_ambient)});
  });
  return out;
}

Integer euler_characteristic(const Partition& sigma) {
  const int n = sigma.n();
  if (n < 2) throw std::domain_error("euler_characteristic: requires n >= 2");
  return pair_on_hypersurface(sigma, hypersurface_chern(sigma).piece(n - 1));
}

Integer s_number_via_hypersurface_chern(const Partition& sigma) {
  const int n = sigma.n();
  if (n < 2) throw std::domain_error("s_number_via_hypersurface_chern: requires n >= 2");
  return pair_on_hypersurface(sigma, s_class(hypersurface_chern(sigma), n - 1));
}

std::string chern_monomial_name(const Partition& omega) {
  std::string out;
  auto inc = omega.increasing();
  for (std::size_t i = 0; i < inc.size();) {
    std::size_t j = i;
    while (j < inc.size() && inc[j] == inc[i]) ++j;
    if (!out.empty()) out += '*';
    out += "c" + std::to_string(inc[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace cybord::cohomology
