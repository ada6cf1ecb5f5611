#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spatch/errors.hh"
#include "spatch/wachspress.hh"
#include "test_helpers.hh"

using namespace spatch;
using namespace testutil;

namespace {

Point2 randomInterior(const DomainPolygon &poly, std::mt19937 &g,
                      double margin = 1e-3) {
  for (;;) {
    Point2 p{uniform(g, 0.0, 1.0), uniform(g, 0.0, 1.0)};
    bool ok = true;
    for (const auto &s : poly.sides)
      ok = ok && s(p) > margin;
    if (ok)
      return p;
  }
}

std::vector<double> projectToCoords(const Point &hom) {
  double sum = 0;
  for (double x : hom)
    sum += x;
  std::vector<double> out(hom.size());
  for (std::size_t i = 0; i < hom.size(); ++i)
    out[i] = hom[i] / sum;
  return out;
}

} // namespace

TEST_CASE("polygon construction") {
  CHECK_THROWS_AS(makeDomainPolygon(2), ValidationError);

  auto square = makeDomainPolygon(4);
  REQUIRE(square.vertices.size() == 4);
  CHECK(square.vertices[0] == Point2{0, 0});
  CHECK(square.vertices[1] == Point2{1, 0});
  CHECK(square.vertices[2] == Point2{1, 1});
  CHECK(square.vertices[3] == Point2{0, 1});

  for (int n : {3, 5, 6, 8}) {
    auto poly = makeDomainPolygon(n);
    double apothem = 0.5 * std::cos(std::numbers::pi / n);
    for (int j = 0; j < n; ++j) {
      double r = std::hypot(poly.vertices[j][0] - 0.5, poly.vertices[j][1] - 0.5);
      CHECK(r == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(poly.sides[j](poly.vertices[j]) == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(poly.sides[j](poly.vertices[(j + 1) % n]) ==
            doctest::Approx(0.0).epsilon(1e-12));
      CHECK(poly.sides[j]({0.5, 0.5}) == doctest::Approx(apothem).epsilon(1e-12));
    }
  }
}

TEST_CASE("coordinates have the Lagrange property at vertices") {
  for (int n : {3, 4, 5, 7}) {
    auto poly = makeDomainPolygon(n);
    for (int i = 0; i < n; ++i) {
      auto lambda = wachspressCoords(poly, poly.vertices[i]);
      for (int k = 0; k < n; ++k)
        CHECK(lambda[k] == doctest::Approx(k == i ? 1.0 : 0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("coordinates are uniform at the center") {
  for (int n : {3, 4, 6}) {
    auto poly = makeDomainPolygon(n);
    auto lambda = wachspressCoords(poly, {0.5, 0.5});
    for (double l : lambda)
      CHECK(l == doctest::Approx(1.0 / n).epsilon(1e-12));
  }
}

TEST_CASE("triangle coordinates match signed areas") {
  auto poly = makeDomainPolygon(3);
  auto g = rng(31);
  auto area = [](const Point2 &a, const Point2 &b, const Point2 &c) {
    return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
  };
  const auto &v = poly.vertices;
  double total = area(v[0], v[1], v[2]);
  for (int i = 0; i < 30; ++i) {
    Point2 p = randomInterior(poly, g);
    auto lambda = wachspressCoords(poly, p);
    CHECK(lambda[0] == doctest::Approx(area(p, v[1], v[2]) / total).epsilon(1e-10));
    CHECK(lambda[1] == doctest::Approx(area(v[0], p, v[2]) / total).epsilon(1e-10));
    CHECK(lambda[2] == doctest::Approx(area(v[0], v[1], p) / total).epsilon(1e-10));
  }
}

TEST_CASE("partition of unity, positivity and linear precision") {
  auto g = rng(32);
  for (int n = 3; n <= 8; ++n) {
    auto poly = makeDomainPolygon(n);
    for (int i = 0; i < 100; ++i) {
      Point2 p = randomInterior(poly, g);
      auto lambda = wachspressCoords(poly, p);
      double sum = 0;
      Point2 recon{0, 0};
      for (int k = 0; k < n; ++k) {
        CHECK(lambda[k] > 0);
        sum += lambda[k];
        recon[0] += lambda[k] * poly.vertices[k][0];
        recon[1] += lambda[k] * poly.vertices[k][1];
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(recon[0] == doctest::Approx(p[0]).epsilon(1e-10));
      CHECK(recon[1] == doctest::Approx(p[1]).epsilon(1e-10));
    }
  }
}

TEST_CASE("blossom diagonal reproduces the numerators") {
  auto g = rng(33);
  for (int n : {4, 5, 6}) {
    auto poly = makeDomainPolygon(n);
    for (int rep = 0; rep < 10; ++rep) {
      Point2 p{uniform(g, 0.0, 1.0), uniform(g, 0.0, 1.0)};
      auto q = wachspressBlossom(poly, std::vector<Point2>(n - 2, p));
      for (int i = 0; i < n; ++i) {
        double prod = 1;
        for (int j = 0; j < n; ++j)
          if (j != i && j != (i + n - 1) % n)
            prod *= poly.sides[j](p);
        CHECK(q[i] == doctest::Approx(prod).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("blossom is symmetric under argument swaps") {
  auto g = rng(34);
  for (int n : {4, 5, 6}) {
    auto poly = makeDomainPolygon(n);
    std::vector<Point2> args;
    for (int k = 0; k < n - 2; ++k)
      args.push_back({uniform(g), uniform(g)});
    auto base = wachspressBlossom(poly, args);
    for (int a = 0; a < n - 2; ++a)
      for (int b = a + 1; b < n - 2; ++b) {
        auto swapped = args;
        std::swap(swapped[a], swapped[b]);
        auto q = wachspressBlossom(poly, swapped);
        for (int i = 0; i < n; ++i)
          CHECK(q[i] == doctest::Approx(base[i]).epsilon(1e-10));
      }
  }
}

TEST_CASE("blossom wrong arity is rejected") {
  auto poly = makeDomainPolygon(5);
  CHECK_THROWS_AS(wachspressBlossom(poly, {{0.1, 0.2}, {0.3, 0.4}}),
                  ValidationError);
}

TEST_CASE("quad blossom matches the hand-expanded polarization") {
  // degree-2 numerators: polarization of D_a * D_b is the symmetrized product
  auto poly = makeDomainPolygon(4);
  auto g = rng(35);
  for (int rep = 0; rep < 20; ++rep) {
    Point2 p1{uniform(g), uniform(g)}, p2{uniform(g), uniform(g)};
    auto q = wachspressBlossom(poly, {p1, p2});
    for (int i = 0; i < 4; ++i) {
      int skipA = (i + 3) % 4, skipB = i;
      std::vector<int> keep;
      for (int j = 0; j < 4; ++j)
        if (j != skipA && j != skipB)
          keep.push_back(j);
      const auto &Da = poly.sides[keep[0]];
      const auto &Db = poly.sides[keep[1]];
      double expected = 0.5 * (Da(p1) * Db(p2) + Da(p2) * Db(p1));
      CHECK(q[i] == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("blossom is multi-affine") {
  auto g = rng(36);
  for (int n : {4, 6}) {
    auto poly = makeDomainPolygon(n);
    std::vector<Point2> args;
    for (int k = 0; k < n - 2; ++k)
      args.push_back({uniform(g), uniform(g)});
    Point2 a{uniform(g), uniform(g)}, b{uniform(g), uniform(g)};
    double alpha = uniform(g), beta = 1.0 - alpha;
    for (int slot = 0; slot < n - 2; ++slot) {
      auto blended = args;
      blended[slot] = {alpha * a[0] + beta * b[0], alpha * a[1] + beta * b[1]};
      auto withA = args, withB = args;
      withA[slot] = a;
      withB[slot] = b;
      auto qBlend = wachspressBlossom(poly, blended);
      auto qA = wachspressBlossom(poly, withA);
      auto qB = wachspressBlossom(poly, withB);
      for (int i = 0; i < n; ++i)
        CHECK(qBlend[i] ==
              doctest::Approx(alpha * qA[i] + beta * qB[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("Wn shape and label counts") {
  auto W5 = buildWn(5);
  CHECK(W5.arity == 3);
  CHECK(W5.degree == 3);
  CHECK(W5.dim == 5);
  CHECK(W5.control.size() == 10);

  auto W3 = buildWn(3);
  CHECK(W3.arity == 3);
  CHECK(W3.degree == 1);
  CHECK(W3.dim == 3);
}

TEST_CASE("projected Wn evaluation reproduces wachspressCoords") {
  auto g = rng(37);
  for (int n = 3; n <= 6; ++n) {
    auto poly = makeDomainPolygon(n);
    auto W = buildWn(n);
    for (int i = 0; i < 100; ++i) {
      Point2 p = randomInterior(poly, g);
      auto lambda = wachspressCoords(poly, p);
      auto proj = projectToCoords(eval(W, {p[0], p[1], 1 - p[0] - p[1]}));
      for (int k = 0; k < n; ++k)
        CHECK(proj[k] == doctest::Approx(lambda[k]).epsilon(1e-10));
    }
  }
}

TEST_CASE("W4inv control points") {
  auto W = buildW4inv();
  CHECK(W.arity == 4);
  CHECK(W.degree == 1);
  CHECK(W.dim == 3);
  CHECK(W.control.at(MultiIndex({1, 0, 0, 0})) == Point{0, 0, 1});
  CHECK(W.control.at(MultiIndex({0, 1, 0, 0})) == Point{1, 0, 0});
  CHECK(W.control.at(MultiIndex({0, 0, 1, 0})) == Point{1, 1, -1});
  CHECK(W.control.at(MultiIndex({0, 0, 0, 1})) == Point{0, 1, 0});
}

TEST_CASE("W4inv maps square-corner coordinates to corner barycentrics") {
  auto poly = makeDomainPolygon(4);
  auto Winv = buildW4inv();
  for (int i = 0; i < 4; ++i) {
    auto lambda = wachspressCoords(poly, poly.vertices[i]);
    auto b = eval(Winv, lambda);
    const Point2 &v = poly.vertices[i];
    CHECK(b[0] == doctest::Approx(v[0]).epsilon(1e-12));
    CHECK(b[1] == doctest::Approx(v[1]).epsilon(1e-12));
    CHECK(b[2] == doctest::Approx(1 - v[0] - v[1]).epsilon(1e-12));
  }
}

TEST_CASE("W4inv at the uniform coordinates gives the center") {
  auto b = eval(buildW4inv(), {0.25, 0.25, 0.25, 0.25});
  CHECK(b[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(b[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(b[2] == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("W4inv is a left inverse of W4") {
  auto g = rng(38);
  auto W4 = buildWn(4);
  auto Winv = buildW4inv();
  for (int i = 0; i < 100; ++i) {
    double u = uniform(g, 0.0, 1.0), v = uniform(g, 0.0, 1.0);
    auto b = eval(Winv, projectToCoords(eval(W4, {u, v, 1 - u - v})));
    CHECK(b[0] == doctest::Approx(u).epsilon(1e-10));
    CHECK(b[1] == doctest::Approx(v).epsilon(1e-10));
    CHECK(b[2] == doctest::Approx(1 - u - v).epsilon(1e-10));
  }
}
