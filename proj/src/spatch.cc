#include "spatch/spatch.hh"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "spatch/errors.hh"

namespace spatch {

using Json = nlohmann::json;

namespace {

std::string labelString(const MultiIndex &s) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < s.size(); ++i)
    os << (i ? "," : "") << s[i];
  os << "]";
  return os.str();
}

} // namespace

void SPatch::validate() const {
  if (sides < 3)
    throw ValidationError("s-patch needs at least 3 sides");
  if (depth < 1)
    throw ValidationError("s-patch depth must be at least 1");
  auto labels = enumerateLabels(sides, depth);
  for (const auto &s : labels)
    if (!control.contains(s))
      throw ValidationError("s-patch: missing control point for label " +
                            labelString(s));
  if (control.size() != labels.size())
    throw ValidationError("s-patch: unexpected extra control points");
  for (const auto &[s, p] : control)
    if (p.size() != 3)
      throw ValidationError("s-patch: control point " + labelString(s) +
                            " is not 3D");
}

SPatch makeSPatch(int sides, int depth, ControlNet control) {
  SPatch S;
  S.sides = sides;
  S.depth = depth;
  S.control = std::move(control);
  S.validate();
  S.domain = makeDomainPolygon(sides);
  return S;
}

Point3 evalBary(const SPatch &S, const std::vector<double> &lambda) {
  BezierSimplex F{S.sides, S.depth, 3, S.control};
  Point p = eval(F, lambda);
  return {p[0], p[1], p[2]};
}

Point3 evalUv(const SPatch &S, const Point2 &p) {
  for (const auto &side : S.domain.sides)
    if (side(p) < -1e-12)
      throw NumericalError("evalUv: point lies outside the domain polygon");
  return evalBary(S, wachspressCoords(S.domain, p));
}

BezierSimplex homogenize(const SPatch &S) {
  BezierSimplex F;
  F.arity = S.sides;
  F.degree = S.depth;
  F.dim = 4;
  for (const auto &[s, p] : S.control)
    F.control[s] = {p[0], p[1], p[2], 1.0 - p[0] - p[1] - p[2]};
  return F;
}

std::vector<Point3> boundaryCurve(const SPatch &S, int i) {
  if (i < 1 || i > S.sides)
    throw ValidationError("boundaryCurve: side index out of range");
  const int a = i - 1, b = i % S.sides; // 0-based vertex pair of side i
  std::vector<Point3> curve;
  for (int k = 0; k <= S.depth; ++k) {
    std::vector<int> e(S.sides, 0);
    e[a] = S.depth - k;
    e[b] = k;
    const Point &p = S.control.at(MultiIndex(std::move(e)));
    curve.push_back({p[0], p[1], p[2]});
  }
  return curve;
}

std::string toJson(const SPatch &S) {
  Json j;
  j["sides"] = S.sides;
  j["depth"] = S.depth;
  Json pts = Json::array();
  for (const auto &s : enumerateLabels(S.sides, S.depth)) {
    Json entry;
    entry["label"] = s.entries();
    entry["point"] = S.control.at(s);
    pts.push_back(std::move(entry));
  }
  j["points"] = std::move(pts);
  return j.dump(2);
}

SPatch spatchFromJson(const std::string &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception &e) {
    throw ValidationError(std::string("s-patch JSON: ") + e.what());
  }

  int sides, depth;
  ControlNet net;
  try {
    sides = j.at("sides").get<int>();
    depth = j.at("depth").get<int>();
    for (const auto &entry : j.at("points")) {
      MultiIndex s(entry.at("label").get<std::vector<int>>());
      if (s.size() != sides)
        throw ValidationError("s-patch: label " + labelString(s) +
                              " has wrong length, expected " +
                              std::to_string(sides));
      if (s.norm() != depth)
        throw ValidationError("s-patch: label " + labelString(s) +
                              " has norm " + std::to_string(s.norm()) +
                              ", expected depth " + std::to_string(depth));
      if (net.contains(s))
        throw ValidationError("s-patch: duplicate label " + labelString(s));
      net[s] = entry.at("point").get<Point>();
    }
  } catch (const Json::exception &e) {
    throw ValidationError(std::string("s-patch JSON: ") + e.what());
  }
  return makeSPatch(sides, depth, std::move(net));
}

} // namespace spatch
