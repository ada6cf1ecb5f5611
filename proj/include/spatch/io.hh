#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spatch/convert.hh"

namespace spatch {

// Shared uv tessellation of a polygon: concentric rings of scaled boundary
// points, innermost ring fan-triangulated.  Resolution 1 gives just the
// polygon corners.
struct DomainMesh {
  std::vector<Point2> uv;
  std::vector<std::array<int, 3>> faces; // 0-based
};

DomainMesh sampleDomain(const DomainPolygon &poly, int resolution);

// OBJ text (1-based indices) of the sampled surface.
std::string sampleMesh(const SPatch &S, int resolution);
std::string sampleMesh(const TrimmedPatch &T, int resolution);

// Interior sample points with a relative margin from the boundary,
// distributed over concentric rings; at least `count` points.
std::vector<Point2> interiorSamples(const DomainPolygon &poly, int count,
                                    double margin = 0.01);

struct ConversionReport {
  int sides = 0;
  int depth = 0;
  int degreeU = 0, degreeV = 0;
  int gridRows = 0, gridCols = 0;
  double maxOracleError = 0;    // absolute, over interior samples
  double bboxDiagonal = 0;      // of the sampled surface
  double minWeight = 0, maxWeight = 0;
  int outlierCount = 0;         // control points far outside the surface box
  double worstOutlierRatio = 0; // distance from box over box diagonal
  double msCompose = 0, msChangeCoords = 0, msTensor = 0;
};

// Recomputes the oracle error from scratch against evalUv.
ConversionReport analyzeConversion(const SPatch &S, const TrimmedPatch &T,
                                   double msCompose = 0,
                                   double msChangeCoords = 0,
                                   double msTensor = 0);

std::string toJson(const ConversionReport &r);

// Wall-clock milliseconds of toQuadSpatch on a seeded random net.
double benchmark(int sides, int depth, CompositionAlgorithm algo,
                 std::uint32_t seed = 1);

// Seeded random S-patch with control points in [-1,1]^3.
SPatch randomSPatch(int sides, int depth, std::uint32_t seed);

} // namespace spatch
