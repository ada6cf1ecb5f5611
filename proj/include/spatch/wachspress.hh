#pragma once

#include <array>
#include <vector>

#include "spatch/simplex.hh"

namespace spatch {

using Point2 = std::array<double, 2>;

// Affine functional a*u + b*v + c with unit normal (a,b); positive inside.
struct SideLine {
  double a = 0, b = 0, c = 0;
  double operator()(const Point2 &p) const { return a * p[0] + b * p[1] + c; }
};

// Regular n-gon in the uv unit square.  Side j (0-based) runs from vertex j
// to vertex j+1, all normals point inward.
struct DomainPolygon {
  int n = 0;
  std::vector<Point2> vertices;
  std::vector<SideLine> sides;
};

// n = 4 yields exactly the unit square (0,0),(1,0),(1,1),(0,1); other n are
// placed on the circle of center (0.5,0.5) and radius 0.5, counter-clockwise.
DomainPolygon makeDomainPolygon(int n);

// Barycentric coordinates from products of side distances; throws
// NumericalError when the denominator vanishes (the singular circle).
std::vector<double> wachspressCoords(const DomainPolygon &poly, const Point2 &p);

// Symmetric multi-affine form whose diagonal gives the coordinate
// numerators; takes exactly n-2 argument points.
std::vector<double> wachspressBlossom(const DomainPolygon &poly,
                                      const std::vector<Point2> &args);

// The coordinate map as a Bezier simplex of triple (3, n-2, n): projecting
// its value by the coordinate sum reproduces wachspressCoords.
BezierSimplex buildWn(int n);

// Affine left inverse of buildWn(4); triple (4, 1, 3), points in
// barycentric form over the canonical triangle (1,0),(0,1),(0,0).
BezierSimplex buildW4inv();

} // namespace spatch
