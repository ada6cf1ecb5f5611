#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "spatch/multiindex.hh"

namespace spatch {

using Point = std::vector<double>;
using ControlNet = std::unordered_map<MultiIndex, Point, MultiIndexHash>;

// Polynomial map in Bernstein form from the barycentric coordinates of an
// (arity-1)-simplex to points of dimension `dim`.  Characterized by the
// triple (arity, degree, dim).
struct BezierSimplex {
  int arity = 0;
  int degree = 0;
  int dim = 0;
  ControlNet control;

  // Checks the control net covers every label of the right length and norm
  // and that all points have the declared dimension.
  void validate() const;
};

// Evaluation at affine barycentric coordinates (sum 1 within 1e-12).
Point eval(const BezierSimplex &F, const std::vector<double> &bary);

// Direct composition: enumerates all ordered label sums (exponential in
// F.degree; intended for testing and the benchmark baseline).
BezierSimplex composeNaive(const BezierSimplex &F, const BezierSimplex &G);

// Cached-blossom composition over non-decreasing argument multisets;
// produces the same result as composeNaive.
BezierSimplex compose(const BezierSimplex &F, const BezierSimplex &G);

std::string toJson(const BezierSimplex &F);
BezierSimplex simplexFromJson(const std::string &text);

} // namespace spatch
