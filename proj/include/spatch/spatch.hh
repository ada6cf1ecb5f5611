#pragma once

#include <array>
#include <string>
#include <vector>

#include "spatch/simplex.hh"
#include "spatch/wachspress.hh"

namespace spatch {

using Point3 = std::array<double, 3>;

// n-sided surface of depth d: control points labeled by L_{n,d}, evaluated
// over the regular polygon domain through Wachspress coordinates.
struct SPatch {
  int sides = 0;
  int depth = 0;
  ControlNet control; // 3D points
  DomainPolygon domain;

  void validate() const;
};

SPatch makeSPatch(int sides, int depth, ControlNet control);

Point3 evalBary(const SPatch &S, const std::vector<double> &lambda);

// Ground truth for the conversion: Wachspress coordinates of p fed into the
// Bernstein sum.  p must not be outside the domain polygon.
Point3 evalUv(const SPatch &S, const Point2 &p);

// Lifts the control net to homogenized barycentric form with weight 1:
// (x,y,z) -> (x,y,z,1-x-y-z); characteristic triple (n, d, 4).
BezierSimplex homogenize(const SPatch &S);

// Control points of boundary i (1-based), a degree-d Bezier curve running
// from the corner at vertex i to the corner at vertex i+1.
std::vector<Point3> boundaryCurve(const SPatch &S, int i);

std::string toJson(const SPatch &S);
SPatch spatchFromJson(const std::string &text);

} // namespace spatch
