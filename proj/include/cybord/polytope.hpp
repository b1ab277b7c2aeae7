// Lattice polytopes in the normalization <a, x> >= -1 and the products of
// standard reflexive simplices attached to partitions.
#pragma once

#include "cybord/integer.hpp"
#include "cybord/partitions.hpp"

#include <string>
#include <vector>

namespace cybord::toric {

using Point = std::vector<Rational>;

/// Vertices and facet normals; facet a stands for <a, x> >= -1.
struct ReflexivePolytope {
  int dim = 0;
  std::vector<Point> vertices;
  std::vector<Point> facets;
};

/// {x : x_i >= -1, sum x_i <= 1}.
ReflexivePolytope standard_simplex(int d);

ReflexivePolytope product(const ReflexivePolytope& p, const ReflexivePolytope& q);

/// Product of standard simplices of dimensions sigma_1, ..., sigma_k.
ReflexivePolytope polytope_for(const Partition& sigma);

/// Vertices of the dual are the facet normals; facets of the dual are the
/// vertices that really cut out a facet (tight on an affinely spanning set
/// of normals).
ReflexivePolytope polar_dual(const ReflexivePolytope& p);

struct ReflexivityVerdict {
  bool reflexive = false;
  std::vector<std::string> diagnostics;
};

ReflexivityVerdict verify_reflexive(const ReflexivePolytope& p);

/// Rank of a set of vectors over Q.
int rank(const std::vector<Point>& rows);

/// Rank of the differences p_i - p_0.
int affine_rank(const std::vector<Point>& points);

std::string to_string(const Point& p);

}  // namespace cybord::toric
