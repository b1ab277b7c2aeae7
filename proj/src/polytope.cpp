#include "cybord/polytope.hpp"

#include <stdexcept>

namespace cybord::toric {

namespace {

Rational dot(const Point& a, const Point& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

bool integral(const Point& p) {
  for (const auto& c : p) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

bool primitive(const Point& p) {
  Integer g = 0;
  for (const auto& c : p) g = gcd(g, c.get_num());
  return g == 1;
}

Point zeros(int d) { return Point(static_cast<std::size_t>(d), Rational(0)); }

}  // namespace

int rank(const std::vector<Point>& rows_in) {
  if (rows_in.empty()) return 0;
  auto rows = rows_in;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

int affine_rank(const std::vector<Point>& points) {
  if (points.size() < 2) return 0;
  std::vector<Point> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Point d = points[i];
    for (std::size_t j = 0; j < d.size(); ++j) d[j] -= points[0][j];
    diffs.push_back(std::move(d));
  }
  return rank(diffs);
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += p[i].get_str();
  }
  return out + ")";
}

ReflexivePolytope standard_simplex(int d) {
  if (d < 1) throw std::domain_error("standard_simplex: dimension must be positive");
  ReflexivePolytope s;
  s.dim = d;
  s.vertices.push_back(Point(static_cast<std::size_t>(d), Rational(-1)));
  for (int j = 0; j < d; ++j) {
    Point v(static_cast<std::size_t>(d), Rational(-1));
    v[static_cast<std::size_t>(j)] = d;
    s.vertices.push_back(std::move(v));
  }
  for (int j = 0; j < d; ++j) {
    Point a = zeros(d);
    a[static_cast<std::size_t>(j)] = 1;
    s.facets.push_back(std::move(a));
  }
  s.facets.push_back(Point(static_cast<std::size_t>(d), Rational(-1)));
  return s;
}

ReflexivePolytope product(const ReflexivePolytope& p, const ReflexivePolytope& q) {
  ReflexivePolytope r;
  r.dim = p.dim + q.dim;
  for (const auto& v : p.vertices) {
    for (const auto& w : q.vertices) {
      Point x = v;
      x.insert(x.end(), w.begin(), w.end());
      r.vertices.push_back(std::move(x));
    }
  }
  for (const auto& a : p.facets) {
    Point x = a;
    x.resize(static_cast<std::size_t>(r.dim), Rational(0));
    r.facets.push_back(std::move(x));
  }
  for (const auto& b : q.facets) {
    Point x = zeros(p.dim);
    x.insert(x.end(), b.begin(), b.end());
    r.facets.push_back(std::move(x));
  }
  return r;
}

ReflexivePolytope polytope_for(const Partition& sigma) {
  ReflexivePolytope out = standard_simplex(sigma.parts().front());
  for (std::size_t i = 1; i < sigma.size(); ++i) out = product(out, standard_simplex(sigma.parts()[i]));
  return out;
}

ReflexivePolytope polar_dual(const ReflexivePolytope& p) {
  ReflexivePolytope d;
  d.dim = p.dim;
  d.vertices = p.facets;
  for (const auto& v : p.vertices) {
    std::vector<Point> tight;
    for (const auto& a : p.facets) {
      if (dot(a, v) == -1) tight.push_back(a);
    }
    if (static_cast<int>(tight.size()) >= p.dim && affine_rank(tight) == p.dim - 1) d.facets.push_back(v);
  }
  return d;
}

ReflexivityVerdict verify_reflexive(const ReflexivePolytope& p) {
  ReflexivityVerdict verdict;
  auto fail = [&](std::string msg) { verdict.diagnostics.push_back(std::move(msg)); };

  if (p.dim < 1 || p.vertices.empty() || p.facets.empty()) {
    fail("empty or zero-dimensional data");
    return verdict;
  }
  for (const auto& v : p.vertices) {
    if (static_cast<int>(v.size()) != p.dim) {
      fail("vertex " + to_string(v) + " has wrong dimension");
      return verdict;
    }
  }
  for (const auto& a : p.facets) {
    if (static_cast<int>(a.size()) != p.dim) {
      fail("facet normal " + to_string(a) + " has wrong dimension");
      return verdict;
    }
  }

  // Facet normals must be primitive lattice vectors, which puts each facet
  // hyperplane at lattice distance one from the origin. These are also the
  // vertices of the polar dual.
  for (const auto& a : p.facets) {
    if (!integral(a)) fail("facet normal " + to_string(a) + " is not integral");
    else if (!primitive(a)) fail("facet normal " + to_string(a) + " is not primitive");
  }

  for (const auto& v : p.vertices) {
    if (!integral(v)) fail("vertex " + to_string(v) + " is not a lattice point");
    std::vector<Point> tight;
    for (const auto& a : p.facets) {
      Rational value = dot(a, v);
      if (value < -1) fail("vertex " + to_string(v) + " violates facet " + to_string(a));
      if (value == -1) tight.push_back(a);
    }
    if (rank(tight) != p.dim) fail("vertex " + to_string(v) + " is not cut out by its tight facets");
  }

  for (const auto& a : p.facets) {
    std::vector<Point> tight;
    for (const auto& v : p.vertices) {
      if (dot(a, v) == -1) tight.push_back(v);
    }
    if (affine_rank(tight) != p.dim - 1) fail("facet " + to_string(a) + " does not span a facet");
  }

  // <a, 0> = 0 > -1 holds for every facet in this normalization; the origin
  // is interior as long as the normals are full rank.
  if (rank(p.facets) != p.dim) fail("facet normals do not span; polytope is unbounded");
  if (affine_rank(p.vertices) != p.dim) fail("vertices are not full-dimensional");

  verdict.reflexive = verdict.diagnostics.empty();
  return verdict;
}

}  // namespace cybord::toric
