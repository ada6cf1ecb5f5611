#include "spatch/convert.hh"

#include <cmath>

#include <nlohmann/json.hpp>

#include "spatch/errors.hh"

namespace spatch {

using Json = nlohmann::json;

BezierSimplex toQuadSpatch(const SPatch &S, CompositionAlgorithm algo) {
  auto comp = algo == CompositionAlgorithm::Efficient ? compose : composeNaive;
  BezierSimplex A = comp(homogenize(S), buildWn(S.sides));
  return comp(A, buildW4inv());
}

BezierSimplex changeCoords(const BezierSimplex &H) {
  if (H.dim != 4)
    throw ValidationError("changeCoords: expected 4D control points");
  BezierSimplex out = H;
  for (auto &[s, p] : out.control)
    p[3] = p[0] + p[1] + p[2] + p[3];
  return out;
}

RationalTensorPatch toTensor(const BezierSimplex &H) {
  if (H.arity != 4)
    throw ValidationError("toTensor: expected a quadrilateral simplex");
  if (H.dim != 4)
    throw ValidationError("toTensor: expected 4D (homogeneous) points");
  const int d = H.degree;
  RationalTensorPatch T;
  T.degreeU = d;
  T.degreeV = d;
  T.control.assign(d + 1, std::vector<Point4>(d + 1, Point4{0, 0, 0, 0}));
  for (const auto &[s, p] : H.control) {
    int i = s[1] + s[2];
    int j = s[2] + s[3];
    double coeff = static_cast<double>(multinomial(d, s)) /
                   (static_cast<double>(binomial(d, i)) *
                    static_cast<double>(binomial(d, j)));
    for (int c = 0; c < 4; ++c)
      T.control[i][j][c] += coeff * p[c];
  }
  return T;
}

std::vector<Point2> makeTrimLoop(int n) {
  DomainPolygon poly = makeDomainPolygon(n);
  std::vector<Point2> loop = poly.vertices;
  loop.push_back(loop.front());
  return loop;
}

TrimmedPatch convert(const SPatch &S, CompositionAlgorithm algo) {
  TrimmedPatch T;
  T.patch = toTensor(changeCoords(toQuadSpatch(S, algo)));
  T.trim = makeTrimLoop(S.sides);
  return T;
}

Point4 evalTensorHomogeneous(const RationalTensorPatch &T, double u, double v) {
  const int du = T.degreeU, dv = T.degreeV;
  std::vector<double> bu(du + 1), bv(dv + 1);
  for (int i = 0; i <= du; ++i)
    bu[i] = static_cast<double>(binomial(du, i)) * std::pow(u, i) *
            std::pow(1 - u, du - i);
  for (int j = 0; j <= dv; ++j)
    bv[j] = static_cast<double>(binomial(dv, j)) * std::pow(v, j) *
            std::pow(1 - v, dv - j);

  Point4 acc{0, 0, 0, 0};
  for (int i = 0; i <= du; ++i)
    for (int j = 0; j <= dv; ++j) {
      double w = bu[i] * bv[j];
      for (int c = 0; c < 4; ++c)
        acc[c] += w * T.control[i][j][c];
    }
  return acc;
}

Point3 evalTensor(const RationalTensorPatch &T, double u, double v) {
  Point4 acc = evalTensorHomogeneous(T, u, v);
  if (std::abs(acc[3]) < 1e-300)
    throw NumericalError("evalTensor: vanishing weight at (u,v)");
  return {acc[0] / acc[3], acc[1] / acc[3], acc[2] / acc[3]};
}

std::string toJson(const TrimmedPatch &T) {
  Json j;
  j["degree"] = {T.patch.degreeU, T.patch.degreeV};
  Json rows = Json::array();
  for (const auto &row : T.patch.control) {
    Json r = Json::array();
    for (const auto &p : row)
      r.push_back(p);
    rows.push_back(std::move(r));
  }
  j["points"] = std::move(rows);
  Json trim = Json::array();
  for (const auto &p : T.trim)
    trim.push_back(p);
  j["trim"] = std::move(trim);
  return j.dump(2);
}

TrimmedPatch trimmedFromJson(const std::string &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception &e) {
    throw ValidationError(std::string("patch JSON: ") + e.what());
  }
  TrimmedPatch T;
  try {
    auto deg = j.at("degree").get<std::vector<int>>();
    if (deg.size() != 2)
      throw ValidationError("patch JSON: degree must have two entries");
    T.patch.degreeU = deg[0];
    T.patch.degreeV = deg[1];
    for (const auto &row : j.at("points")) {
      std::vector<Point4> r;
      for (const auto &p : row)
        r.push_back(p.get<Point4>());
      if (static_cast<int>(r.size()) != T.patch.degreeV + 1)
        throw ValidationError("patch JSON: control row length mismatch");
      T.patch.control.push_back(std::move(r));
    }
    if (static_cast<int>(T.patch.control.size()) != T.patch.degreeU + 1)
      throw ValidationError("patch JSON: control row count mismatch");
    for (const auto &p : j.at("trim"))
      T.trim.push_back(p.get<Point2>());
  } catch (const Json::exception &e) {
    throw ValidationError(std::string("patch JSON: ") + e.what());
  }
  if (T.trim.size() < 4 || T.trim.front() != T.trim.back())
    throw ValidationError("patch JSON: trim loop must be closed");
  return T;
}

} // namespace spatch
