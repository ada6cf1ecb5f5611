#pragma once

#include <array>
#include <string>
#include <vector>

#include "spatch/spatch.hh"

namespace spatch {

using Point4 = std::array<double, 4>;

// Rational tensor-product patch of degree (degreeU, degreeV); control points
// stored as (wx, wy, wz, w), u-major.
struct RationalTensorPatch {
  int degreeU = 0;
  int degreeV = 0;
  std::vector<std::vector<Point4>> control; // control[i][j], i along u

  const Point4 &at(int i, int j) const { return control[i][j]; }
};

struct TrimmedPatch {
  RationalTensorPatch patch;
  std::vector<Point2> trim; // closed loop, counter-clockwise, in [0,1]^2
};

// Composition selector for the quadrilateral stage; Naive is the
// benchmark baseline.
enum class CompositionAlgorithm { Efficient, Naive };

// n-sided S-patch as a quadrilateral homogeneous S-patch of triple
// (4, (n-2)d, 4): homogenize(S) composed with Wn, then with W4inv.
BezierSimplex toQuadSpatch(const SPatch &S, CompositionAlgorithm algo =
                                                CompositionAlgorithm::Efficient);

// (wx,wy,wz,w(1-x-y-z)) -> (wx,wy,wz,w): last coordinate becomes the sum.
BezierSimplex changeCoords(const BezierSimplex &H);

// Tensor-product extraction of a quadrilateral simplex with 4D points.
RationalTensorPatch toTensor(const BezierSimplex &H);

std::vector<Point2> makeTrimLoop(int n);

TrimmedPatch convert(const SPatch &S, CompositionAlgorithm algo =
                                          CompositionAlgorithm::Efficient);

Point3 evalTensor(const RationalTensorPatch &T, double u, double v);

// Weighted 4D point before projection; its last coordinate is the weight.
Point4 evalTensorHomogeneous(const RationalTensorPatch &T, double u, double v);

std::string toJson(const TrimmedPatch &T);
TrimmedPatch trimmedFromJson(const std::string &text);

} // namespace spatch
