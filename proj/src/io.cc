#include "spatch/io.hh"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "spatch/errors.hh"

namespace spatch {

using Json = nlohmann::json;

DomainMesh sampleDomain(const DomainPolygon &poly, int resolution) {
  if (resolution < 1)
    throw ValidationError("sampleDomain: resolution must be at least 1");
  const int n = poly.n, R = resolution;
  const Point2 center{0.5, 0.5};

  DomainMesh mesh;
  std::vector<int> ringStart(R + 1, 0); // ring k occupies [ringStart[k], ..)
  for (int k = 1; k <= R; ++k) {
    ringStart[k] = static_cast<int>(mesh.uv.size());
    double scale = static_cast<double>(k) / R;
    for (int s = 0; s < n; ++s) {
      const Point2 &a = poly.vertices[s];
      const Point2 &b = poly.vertices[(s + 1) % n];
      for (int t = 0; t < k; ++t) {
        double f = static_cast<double>(t) / k;
        Point2 p{a[0] + f * (b[0] - a[0]), a[1] + f * (b[1] - a[1])};
        mesh.uv.push_back({center[0] + scale * (p[0] - center[0]),
                           center[1] + scale * (p[1] - center[1])});
      }
    }
  }

  // ring k, side s, offset t in [0, k]; t == k wraps to the next corner
  auto idx = [&](int k, int s, int t) {
    int pos = s * k + t;
    return ringStart[k] + pos % (n * k);
  };

  // innermost ring: fan around its first corner
  for (int j = 1; j + 1 < n; ++j)
    mesh.faces.push_back({ringStart[1], ringStart[1] + j, ringStart[1] + j + 1});

  for (int k = 1; k < R; ++k)
    for (int s = 0; s < n; ++s) {
      // strip between k+1 inner and k+2 outer points of one side
      for (int t = 0; t < k; ++t) {
        mesh.faces.push_back({idx(k, s, t), idx(k + 1, s, t), idx(k + 1, s, t + 1)});
        mesh.faces.push_back({idx(k, s, t), idx(k + 1, s, t + 1), idx(k, s, t + 1)});
      }
      mesh.faces.push_back({idx(k, s, k), idx(k + 1, s, k), idx(k + 1, s, k + 1)});
    }
  return mesh;
}

namespace {

std::string writeObj(const std::vector<Point3> &verts,
                     const std::vector<std::array<int, 3>> &faces) {
  std::ostringstream os;
  os.precision(15);
  for (const auto &p : verts)
    os << "v " << p[0] << " " << p[1] << " " << p[2] << "\n";
  for (const auto &f : faces)
    os << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
  return os.str();
}

bool insideLoop(const std::vector<Point2> &loop, const Point2 &p, double tol) {
  // convex counter-clockwise loop, closed
  for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
    const Point2 &a = loop[i], &b = loop[i + 1];
    double cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
    double len = std::hypot(b[0] - a[0], b[1] - a[1]);
    if (cross < -tol * len)
      return false;
  }
  return true;
}

} // namespace

std::string sampleMesh(const SPatch &S, int resolution) {
  DomainMesh mesh = sampleDomain(S.domain, resolution);
  std::vector<Point3> verts;
  verts.reserve(mesh.uv.size());
  for (const auto &p : mesh.uv)
    verts.push_back(evalUv(S, p));
  return writeObj(verts, mesh.faces);
}

std::string sampleMesh(const TrimmedPatch &T, int resolution) {
  if (resolution < 1)
    throw ValidationError("sampleMesh: resolution must be at least 1");
  const int R = resolution;
  std::vector<int> remap((R + 1) * (R + 1), -1);
  std::vector<Point3> verts;
  std::vector<std::array<int, 3>> faces;

  auto gridId = [&](int i, int j) { return i * (R + 1) + j; };
  auto uvAt = [&](int i, int j) {
    return Point2{static_cast<double>(i) / R, static_cast<double>(j) / R};
  };
  auto use = [&](int i, int j) {
    int id = gridId(i, j);
    if (remap[id] < 0) {
      remap[id] = static_cast<int>(verts.size());
      auto [u, v] = uvAt(i, j);
      verts.push_back(evalTensor(T.patch, u, v));
    }
    return remap[id];
  };

  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) {
      std::array<std::pair<int, int>, 4> c{{{i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}}};
      auto in = [&](const std::pair<int, int> &g) {
        return insideLoop(T.trim, uvAt(g.first, g.second), 1e-9);
      };
      // two triangles per cell, kept only when fully inside the trim loop
      if (in(c[0]) && in(c[1]) && in(c[2]))
        faces.push_back({use(i, j), use(i + 1, j), use(i + 1, j + 1)});
      if (in(c[0]) && in(c[2]) && in(c[3]))
        faces.push_back({use(i, j), use(i + 1, j + 1), use(i, j + 1)});
    }
  return writeObj(verts, faces);
}

std::vector<Point2> interiorSamples(const DomainPolygon &poly, int count,
                                    double margin) {
  int R = 1;
  while (poly.n * R * (R + 1) / 2 + 1 < count)
    ++R;
  DomainMesh mesh = sampleDomain(poly, R);
  const double shrink = 1.0 - margin;
  std::vector<Point2> out;
  out.push_back({0.5, 0.5});
  for (const auto &p : mesh.uv)
    out.push_back({0.5 + shrink * (p[0] - 0.5), 0.5 + shrink * (p[1] - 0.5)});
  return out;
}

ConversionReport analyzeConversion(const SPatch &S, const TrimmedPatch &T,
                                   double msCompose, double msChangeCoords,
                                   double msTensor) {
  ConversionReport r;
  r.sides = S.sides;
  r.depth = S.depth;
  r.degreeU = T.patch.degreeU;
  r.degreeV = T.patch.degreeV;
  r.gridRows = T.patch.degreeU + 1;
  r.gridCols = T.patch.degreeV + 1;
  r.msCompose = msCompose;
  r.msChangeCoords = msChangeCoords;
  r.msTensor = msTensor;

  auto samples = interiorSamples(S.domain, 500);
  Point3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
  std::vector<Point3> truth;
  truth.reserve(samples.size());
  for (const auto &p : samples) {
    Point3 q = evalUv(S, p);
    truth.push_back(q);
    for (int c = 0; c < 3; ++c) {
      lo[c] = std::min(lo[c], q[c]);
      hi[c] = std::max(hi[c], q[c]);
    }
  }
  r.bboxDiagonal = std::hypot(hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2]);

  for (std::size_t i = 0; i < samples.size(); ++i) {
    Point3 q = evalTensor(T.patch, samples[i][0], samples[i][1]);
    double err = std::hypot(q[0] - truth[i][0], q[1] - truth[i][1],
                            q[2] - truth[i][2]);
    r.maxOracleError = std::max(r.maxOracleError, err);
  }

  auto weightSamples = interiorSamples(S.domain, 100);
  r.minWeight = 1e300;
  r.maxWeight = -1e300;
  for (const auto &p : weightSamples) {
    double w = evalTensorHomogeneous(T.patch, p[0], p[1])[3];
    r.minWeight = std::min(r.minWeight, w);
    r.maxWeight = std::max(r.maxWeight, w);
  }

  // spikes near the corners: projected control points far outside the
  // sampled surface box
  const double diag = r.bboxDiagonal > 0 ? r.bboxDiagonal : 1.0;
  for (const auto &row : T.patch.control)
    for (const auto &cp : row) {
      if (std::abs(cp[3]) < 1e-14) {
        ++r.outlierCount;
        continue;
      }
      Point3 q{cp[0] / cp[3], cp[1] / cp[3], cp[2] / cp[3]};
      double dist = 0;
      for (int c = 0; c < 3; ++c) {
        double d = std::max({lo[c] - q[c], q[c] - hi[c], 0.0});
        dist += d * d;
      }
      double ratio = std::sqrt(dist) / diag;
      r.worstOutlierRatio = std::max(r.worstOutlierRatio, ratio);
      if (ratio > 2.0)
        ++r.outlierCount;
    }
  return r;
}

std::string toJson(const ConversionReport &r) {
  Json j;
  j["input"] = {{"sides", r.sides}, {"depth", r.depth}};
  j["degree"] = {r.degreeU, r.degreeV};
  j["grid"] = {r.gridRows, r.gridCols};
  j["max_oracle_error"] = r.maxOracleError;
  j["bbox_diagonal"] = r.bboxDiagonal;
  j["weights"] = {{"min", r.minWeight}, {"max", r.maxWeight}};
  j["outliers"] = {{"count", r.outlierCount},
                   {"worst_offset_ratio", r.worstOutlierRatio}};
  j["timings_ms"] = {{"compose", r.msCompose},
                     {"change_coords", r.msChangeCoords},
                     {"tensor", r.msTensor}};
  return j.dump(2);
}

SPatch randomSPatch(int sides, int depth, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ControlNet net;
  for (const auto &s : enumerateLabels(sides, depth))
    net[s] = {dist(rng), dist(rng), dist(rng)};
  return makeSPatch(sides, depth, std::move(net));
}

double benchmark(int sides, int depth, CompositionAlgorithm algo,
                 std::uint32_t seed) {
  if (algo == CompositionAlgorithm::Naive && (sides - 2) * depth > 8)
    throw ValidationError(
        "benchmark: naive composition refused above total degree 8");
  SPatch S = randomSPatch(sides, depth, seed);
  auto t0 = std::chrono::steady_clock::now();
  toQuadSpatch(S, algo);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace spatch
