#include "spatch/simplex.hh"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <nlohmann/json.hpp>

#include "spatch/errors.hh"

namespace spatch {

using Json = nlohmann::json;

// Combinatorial factors stay exact up to 24! and beyond.
using BigInt = unsigned __int128;

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i)
    r *= static_cast<BigInt>(i);
  return r;
}

std::vector<double> powers(double x, int maxExp) {
  std::vector<double> p(maxExp + 1);
  p[0] = 1.0; // 0^0 = 1 by the limit convention
  for (int i = 1; i <= maxExp; ++i)
    p[i] = p[i - 1] * x;
  return p;
}

// The composition recursion of the control-point formula: a multilinear
// evaluation of F's net against k argument points of dimension F.arity.
Point deltaRec(const BezierSimplex &F, const MultiIndex &s, int k,
               const std::vector<const Point *> &args) {
  Point out(F.dim, 0.0);
  const Point &p = *args[k - 1];
  for (int i = 0; i < F.arity; ++i) {
    if (p[i] == 0.0)
      continue;
    if (k == 1) {
      const Point &cp = F.control.at(s.plusUnit(i));
      for (int c = 0; c < F.dim; ++c)
        out[c] += p[i] * cp[c];
    } else {
      Point sub = deltaRec(F, s.plusUnit(i), k - 1, args);
      for (int c = 0; c < F.dim; ++c)
        out[c] += p[i] * sub[c];
    }
  }
  return out;
}

} // namespace

void BezierSimplex::validate() const {
  if (arity < 1 || degree < 0 || dim < 1)
    throw ValidationError("simplex: invalid characteristic triple");
  auto labels = enumerateLabels(arity, degree);
  if (control.size() != labels.size())
    throw ValidationError("simplex: control net has " +
                          std::to_string(control.size()) + " points, expected " +
                          std::to_string(labels.size()));
  for (const auto &s : labels) {
    auto it = control.find(s);
    if (it == control.end())
      throw ValidationError("simplex: missing control point label");
    if (static_cast<int>(it->second.size()) != dim)
      throw ValidationError("simplex: control point dimension mismatch");
  }
}

Point eval(const BezierSimplex &F, const std::vector<double> &bary) {
  if (static_cast<int>(bary.size()) != F.arity)
    throw ValidationError("simplex eval: expected " + std::to_string(F.arity) +
                          " barycentric coordinates, got " +
                          std::to_string(bary.size()));
  double sum = 0.0;
  for (double b : bary)
    sum += b;
  if (std::abs(sum - 1.0) > 1e-12)
    throw ValidationError("simplex eval: barycentric coordinates must sum to 1");

  std::vector<std::vector<double>> pw(F.arity);
  for (int i = 0; i < F.arity; ++i)
    pw[i] = powers(bary[i], F.degree);

  Point out(F.dim, 0.0);
  for (const auto &[s, cp] : F.control) {
    double basis = static_cast<double>(multinomial(F.degree, s));
    for (int i = 0; i < F.arity; ++i)
      basis *= pw[i][s[i]];
    for (int c = 0; c < F.dim; ++c)
      out[c] += basis * cp[c];
  }
  return out;
}

BezierSimplex composeNaive(const BezierSimplex &F, const BezierSimplex &G) {
  if (G.dim != F.arity)
    throw ValidationError(
        "compose: G's point dimension must equal F's arity (" +
        std::to_string(G.dim) + " vs " + std::to_string(F.arity) + ")");

  BezierSimplex H;
  H.arity = G.arity;
  H.degree = F.degree * G.degree;
  H.dim = F.dim;
  for (const auto &s : enumerateLabels(H.arity, H.degree))
    H.control.emplace(s, Point(H.dim, 0.0));

  if (F.degree == 0) {
    H.control[MultiIndex::zero(H.arity)] = F.control.at(MultiIndex::zero(F.arity));
    return H;
  }

  auto gLabels = enumerateLabels(G.arity, G.degree);
  std::vector<int> pick(F.degree, 0);
  std::vector<const Point *> args(F.degree);

  // all ordered tuples (s_1 .. s_dF) of G-labels
  auto tuples = [&](auto &&self, int k) -> void {
    if (k == F.degree) {
      MultiIndex sum = MultiIndex::zero(H.arity);
      BigInt num = 1;
      for (int t = 0; t < F.degree; ++t) {
        const MultiIndex &st = gLabels[pick[t]];
        sum = sum + st;
        num *= static_cast<BigInt>(multinomial(G.degree, st));
        args[t] = &G.control.at(st);
      }
      double coeff = static_cast<double>(static_cast<long double>(num)) /
                     static_cast<double>(multinomial(H.degree, sum));
      Point d = deltaRec(F, MultiIndex::zero(F.arity), F.degree, args);
      Point &acc = H.control[sum];
      for (int c = 0; c < H.dim; ++c)
        acc[c] += coeff * d[c];
      return;
    }
    for (std::size_t i = 0; i < gLabels.size(); ++i) {
      pick[k] = static_cast<int>(i);
      self(self, k + 1);
    }
  };
  tuples(tuples, 0);
  return H;
}

BezierSimplex compose(const BezierSimplex &F, const BezierSimplex &G) {
  if (G.dim != F.arity)
    throw ValidationError(
        "compose: G's point dimension must equal F's arity (" +
        std::to_string(G.dim) + " vs " + std::to_string(F.arity) + ")");

  BezierSimplex H;
  H.arity = G.arity;
  H.degree = F.degree * G.degree;
  H.dim = F.dim;
  for (const auto &s : enumerateLabels(H.arity, H.degree))
    H.control.emplace(s, Point(H.dim, 0.0));

  const int dF = F.degree;

  // blossom tables: tables[k] holds the k-times contracted net of F,
  // defined on labels of norm dF - k
  std::vector<ControlNet> tables(dF + 1);
  tables[0] = F.control;
  std::vector<std::vector<MultiIndex>> tableLabels(dF + 1);
  for (int k = 0; k <= dF; ++k)
    tableLabels[k] = enumerateLabels(F.arity, dF - k);

  auto blossom = [&](int k, const Point &p) {
    ControlNet &dst = tables[k];
    const ControlNet &src = tables[k - 1];
    for (const auto &s : tableLabels[k]) {
      Point acc(F.dim, 0.0);
      for (int i = 0; i < F.arity; ++i) {
        if (p[i] == 0.0)
          continue;
        const Point &cp = src.at(s.plusUnit(i));
        for (int c = 0; c < F.dim; ++c)
          acc[c] += p[i] * cp[c];
      }
      dst[s] = std::move(acc);
    }
  };

  const MultiIndex zeroF = MultiIndex::zero(F.arity);

  auto rec = [&](auto &&self, int k, const MultiIndex &sMin,
                 const MultiIndex &sSum, BigInt c, int mu) -> void {
    if (k == dF) {
      const double w = static_cast<double>(static_cast<long double>(c));
      const Point &d = tables[dF].at(zeroF);
      Point &acc = H.control[sSum];
      for (int i = 0; i < H.dim; ++i)
        acc[i] += w * d[i];
      return;
    }
    std::optional<MultiIndex> s = sMin;
    int m = mu;
    while (s) {
      blossom(k + 1, G.control.at(*s));
      // division is exact: c carries dF! over the factorials of completed runs
      self(self, k + 1, *s, sSum + *s,
           c * static_cast<BigInt>(multinomial(G.degree, *s)) /
               static_cast<BigInt>(m),
           m + 1);
      m = 1;
      s = nextLabel(*s);
    }
  };

  // lexicographic minimum of the G-label set: all mass in the last slot
  MultiIndex sMin = MultiIndex::unit(G.arity, G.arity - 1, G.degree);
  rec(rec, 0, sMin, MultiIndex::zero(H.arity), factorial(dF), 1);

  for (auto &[s, cp] : H.control) {
    double denom = static_cast<double>(multinomial(H.degree, s));
    for (double &x : cp)
      x /= denom;
  }
  return H;
}

std::string toJson(const BezierSimplex &F) {
  Json j;
  j["arity"] = F.arity;
  j["degree"] = F.degree;
  j["dim"] = F.dim;
  Json pts = Json::array();
  for (const auto &s : enumerateLabels(F.arity, F.degree)) {
    Json entry;
    entry["label"] = s.entries();
    entry["point"] = F.control.at(s);
    pts.push_back(std::move(entry));
  }
  j["points"] = std::move(pts);
  return j.dump(2);
}

BezierSimplex simplexFromJson(const std::string &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception &e) {
    throw ValidationError(std::string("simplex JSON: ") + e.what());
  }
  BezierSimplex F;
  try {
    F.arity = j.at("arity").get<int>();
    F.degree = j.at("degree").get<int>();
    F.dim = j.at("dim").get<int>();
    for (const auto &entry : j.at("points")) {
      MultiIndex s(entry.at("label").get<std::vector<int>>());
      F.control[s] = entry.at("point").get<Point>();
    }
  } catch (const Json::exception &e) {
    throw ValidationError(std::string("simplex JSON: ") + e.what());
  }
  F.validate();
  return F;
}

} // namespace spatch
