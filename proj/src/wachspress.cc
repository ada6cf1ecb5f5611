#include "spatch/wachspress.hh"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "spatch/errors.hh"

namespace spatch {

namespace {

SideLine lineThrough(const Point2 &p, const Point2 &q, const Point2 &inside) {
  double dx = q[0] - p[0], dy = q[1] - p[1];
  double len = std::hypot(dx, dy);
  SideLine l;
  l.a = -dy / len;
  l.b = dx / len;
  l.c = -(l.a * p[0] + l.b * p[1]);
  if (l(inside) < 0) {
    l.a = -l.a;
    l.b = -l.b;
    l.c = -l.c;
  }
  return l;
}

} // namespace

DomainPolygon makeDomainPolygon(int n) {
  if (n < 3)
    throw ValidationError("domain polygon needs at least 3 sides");
  DomainPolygon poly;
  poly.n = n;
  if (n == 4) {
    // the quad domain is the tensor-product parameter square itself
    poly.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  } else {
    for (int i = 0; i < n; ++i) {
      double theta = 2 * std::numbers::pi * i / n + std::numbers::pi / 2 +
                     std::numbers::pi / n;
      poly.vertices.push_back(
          {0.5 + 0.5 * std::cos(theta), 0.5 + 0.5 * std::sin(theta)});
    }
  }
  Point2 center{0.5, 0.5};
  for (int j = 0; j < n; ++j)
    poly.sides.push_back(
        lineThrough(poly.vertices[j], poly.vertices[(j + 1) % n], center));
  return poly;
}

std::vector<double> wachspressCoords(const DomainPolygon &poly,
                                     const Point2 &p) {
  const int n = poly.n;
  std::vector<double> dist(n);
  for (int j = 0; j < n; ++j)
    dist[j] = poly.sides[j](p);

  std::vector<double> num(n);
  double denom = 0;
  for (int i = 0; i < n; ++i) {
    // skip the two sides meeting at vertex i
    int skipA = (i + n - 1) % n, skipB = i;
    double prod = 1;
    for (int j = 0; j < n; ++j)
      if (j != skipA && j != skipB)
        prod *= dist[j];
    num[i] = prod;
    denom += prod;
  }
  if (std::abs(denom) < 1e-14)
    throw NumericalError("wachspress: singular denominator at this point");
  for (double &v : num)
    v /= denom;
  return num;
}

std::vector<double> wachspressBlossom(const DomainPolygon &poly,
                                      const std::vector<Point2> &args) {
  const int n = poly.n;
  if (static_cast<int>(args.size()) != n - 2)
    throw ValidationError("wachspress blossom expects n-2 argument points");

  const int m = n - 2;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  double factorial = 1;
  for (int i = 2; i <= m; ++i)
    factorial *= i;

  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    int skipA = (i + n - 1) % n, skipB = i;
    std::vector<int> sideIdx;
    for (int j = 0; j < n; ++j)
      if (j != skipA && j != skipB)
        sideIdx.push_back(j);

    double sum = 0;
    std::sort(perm.begin(), perm.end());
    do {
      double prod = 1;
      for (int k = 0; k < m; ++k)
        prod *= poly.sides[sideIdx[k]](args[perm[k]]);
      sum += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out[i] = sum / factorial;
  }
  return out;
}

BezierSimplex buildWn(int n) {
  DomainPolygon poly = makeDomainPolygon(n);
  BezierSimplex W;
  W.arity = 3;
  W.degree = n - 2;
  W.dim = n;
  // canonical 2D simplex: barycentrics of (u,v) are (u, v, 1-u-v)
  const std::array<Point2, 3> simplexVerts{{{1, 0}, {0, 1}, {0, 0}}};
  for (const auto &s : enumerateLabels(3, n - 2)) {
    std::vector<Point2> args;
    for (int i = 0; i < 3; ++i)
      for (int r = 0; r < s[i]; ++r)
        args.push_back(simplexVerts[i]);
    W.control[s] = wachspressBlossom(poly, args);
  }
  return W;
}

BezierSimplex buildW4inv() {
  BezierSimplex W;
  W.arity = 4;
  W.degree = 1;
  W.dim = 3;
  // barycentric images of the square corners, in the same cyclic order as
  // makeDomainPolygon(4): (0,0), (1,0), (1,1), (0,1)
  W.control[MultiIndex({1, 0, 0, 0})] = {0, 0, 1};
  W.control[MultiIndex({0, 1, 0, 0})] = {1, 0, 0};
  W.control[MultiIndex({0, 0, 1, 0})] = {1, 1, -1};
  W.control[MultiIndex({0, 0, 0, 1})] = {0, 1, 0};
  return W;
}

} // namespace spatch
