#include <gtest/gtest.h>

#include <random>

#include "msi/error.hpp"
#include "msi/regions.hpp"
#include "oracles.hpp"

using namespace msi;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// Gauge of a centrally symmetric polygon as the largest ratio over its
// supporting lines, using every edge in the first quadrant.
Rational support_gauge(const PiecewiseLinearFn& boundary, const Point& p) {
  const Rational a = abs(p[0]);
  const Rational b = abs(p[1]);
  const auto& nodes = boundary.nodes();
  Rational best = 0;
  for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
    const Rational nx = nodes[j].second - nodes[j + 1].second;
    const Rational ny = nodes[j + 1].first - nodes[j].first;
    const Rational c = nx * nodes[j].first + ny * nodes[j].second;
    best = std::max(best, Rational((nx * a + ny * b) / c));
  }
  return best;
}

// b >= m f(a / m), with f extended by 0 past its intercept.
bool in_scaled_epigraph(const PiecewiseLinearFn& f, std::int64_t m, const oracle::Vec& v) {
  const Rational x = make_rational(v[0], m);
  return Rational(static_cast<long>(v[1])) >= Rational(static_cast<long>(m)) * f(x);
}

}  // namespace

TEST(Regions, DyadicOrder) {
  const std::vector<Rational> expected{q(1, 2), q(1, 4), q(3, 4), q(1, 8), q(3, 8), q(5, 8), q(7, 8), q(1, 16)};
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(dyadic(static_cast<int>(i) + 1), expected[i]);
  EXPECT_THROW(dyadic(0), Error);
}

TEST(Regions, KinkedFunctionValues) {
  const auto f0 = build_kinked_f(0);
  EXPECT_EQ(f0(q(0)), q(2));
  EXPECT_EQ(f0(q(1, 3)), q(4, 3));
  EXPECT_EQ(f0.kinks(), (std::vector<Rational>{q(1)}));

  const auto f1 = build_kinked_f(1);
  EXPECT_EQ(f1(q(0)), q(33, 16));
  EXPECT_EQ(f1(q(1, 2)), q(1));
  EXPECT_EQ(f1(q(1)), q(0));
  EXPECT_EQ(f1(q(3)), q(0));
  EXPECT_EQ(f1.kinks(), (std::vector<Rational>{q(1, 2), q(1)}));
  EXPECT_EQ(f1.slopes(), (std::vector<Rational>{q(-17, 8), q(-2)}));
  EXPECT_EQ(f1.intercept(), q(1));
  EXPECT_THROW(f1(q(-1, 4)), Error);

  const auto f2 = build_kinked_f(2);
  EXPECT_EQ(f2(q(0)), q(133, 64));
  EXPECT_EQ(f2.kinks(), (std::vector<Rational>{q(1, 4), q(1, 2), q(1)}));
  EXPECT_THROW(build_kinked_f(-1), Error);
}

TEST(Regions, KinkedFunctionMatchesItsDefinitionOnAGrid) {
  for (int n = 0; n <= 6; ++n) {
    const auto f = build_kinked_f(n);
    for (int j = 0; j <= 64; ++j) {
      const Rational x = q(j, 64);
      Rational expected = 2 - 2 * x;
      for (int i = 1; i <= n; ++i) {
        const Rational e = dyadic(i);
        if (x < e) expected += (e - x) / q(1L << (i + 2));
      }
      EXPECT_EQ(f(x), expected) << "n=" << n << " x=" << x;
    }
    EXPECT_EQ(f.kinks().size(), static_cast<std::size_t>(n) + 1);
  }
}

TEST(Regions, LineOverTwo) {
  const auto g = build_g();
  EXPECT_EQ(g(q(0)), q(1));
  EXPECT_EQ(g(q(1)), q(1, 2));
  EXPECT_EQ(g(q(2)), q(0));
  EXPECT_EQ(g(q(5)), q(0));
}

TEST(Regions, ShapeValidation) {
  using Shape = PiecewiseLinearFn::Shape;
  EXPECT_THROW(PiecewiseLinearFn::from_nodes({{q(0), q(1)}, {q(1), q(2)}}, Shape::ConvexDecreasing), Error);
  EXPECT_THROW(PiecewiseLinearFn::from_nodes({{q(0), q(2)}, {q(1), q(0)}, {q(2), q(0)}, {q(3), q(-1)}},
                                             Shape::ConvexDecreasing),
               Error);
  EXPECT_THROW(PiecewiseLinearFn::from_nodes({{q(1), q(1)}, {q(2), q(0)}}, Shape::ConvexDecreasing), Error);
  // Concave needs decreasing slopes.
  EXPECT_THROW(PiecewiseLinearFn::from_nodes({{q(0), q(2)}, {q(1), q(0)}, {q(2), q(0)}}, Shape::ConcaveNonincreasing),
               Error);
  const auto collinear =
      PiecewiseLinearFn::from_nodes({{q(0), q(2)}, {q(1), q(1)}, {q(2), q(0)}}, Shape::ConvexDecreasing);
  EXPECT_EQ(collinear.nodes().size(), 2u);
}

TEST(Regions, EpigraphRegionOfKinkedFunction) {
  const auto p = epigraph_region(build_kinked_f(1));
  EXPECT_EQ(p.vertices(), (std::vector<Point>{{q(0), q(33, 16)}, {q(1, 2), q(1)}, {q(1), q(0)}}));
  EXPECT_EQ(p.provenance(), Region::Provenance::Epigraph);
  EXPECT_TRUE(contains_point(p, {q(1, 4), q(49, 32)}));
  EXPECT_FALSE(contains_point(p, {q(1, 4), q(49, 32) - q(1, 1000)}));
}

TEST(Regions, HalfspaceRegion) {
  const auto p = halfspace_region({Facet{{q(1), q(2)}, q(2)}, Facet{{q(2), q(1)}, q(2)}}, 2);
  EXPECT_EQ(p.vertices(), (std::vector<Point>{{q(0), q(2)}, {q(2, 3), q(2, 3)}, {q(2), q(0)}}));
}

TEST(Regions, ScaleIntersectMinkowski) {
  const auto f = epigraph_region(build_kinked_f(1));
  const auto g = epigraph_region(build_g());
  const auto both = region_intersect(f, g);
  const auto sum = region_minkowski(f, g);
  const auto twice = region_scale(g, q(2));
  EXPECT_EQ(twice.vertices(), (std::vector<Point>{{q(0), q(2)}, {q(4), q(0)}}));
  EXPECT_EQ(region_minkowski(g, g), twice);
  EXPECT_THROW(region_scale(g, q(0)), Error);

  for (int i = 0; i <= 24; ++i)
    for (int j = 0; j <= 24; ++j) {
      const Point x{q(i, 8), q(j, 8)};
      EXPECT_EQ(contains_point(both, x), contains_point(f, x) && contains_point(g, x));
    }
  for (const auto& u : f.vertices())
    for (const auto& v : g.vertices()) EXPECT_TRUE(contains_point(sum, {u[0] + v[0], u[1] + v[1]}));
  for (const auto& w : sum.vertices()) {
    bool found = false;
    for (const auto& u : f.vertices())
      for (const auto& v : g.vertices()) found = found || (w == Point{u[0] + v[0], u[1] + v[1]});
    EXPECT_TRUE(found);
  }
}

TEST(Regions, LatticeGeneratorsMatchBoxEnumeration) {
  for (int n : {0, 1, 2, 3}) {
    const auto f = build_kinked_f(n);
    const auto p = epigraph_region(f);
    for (std::int64_t m = 1; m <= 12; ++m) {
      const auto expected =
          oracle::minimal_elements(2, 3 * m, [&](const oracle::Vec& v) { return in_scaled_epigraph(f, m, v); });
      EXPECT_EQ(lattice_generators(p, m).generators(), expected) << "n=" << n << " m=" << m;
    }
  }
  EXPECT_THROW(lattice_generators(epigraph_region(build_g()), 0), Error);
}

TEST(Regions, LatticeGeneratorsInThreeVariables) {
  const auto p = halfspace_region({Facet{{q(1), q(1), q(2)}, q(3)}, Facet{{q(2), q(1), q(1)}, q(3)}}, 3);
  for (std::int64_t m = 1; m <= 4; ++m) {
    const auto scaled = region_scale(p, q(m));
    const auto expected = oracle::minimal_elements(
        3, 3 * m, [&](const oracle::Vec& v) { return contains_point(scaled, {q(v[0]), q(v[1]), q(v[2])}); });
    EXPECT_EQ(lattice_generators(p, m).generators(), expected) << "m=" << m;
  }
}

TEST(Regions, DenseKinkBoundary) {
  const auto b1 = dense_kink_boundary(1);
  EXPECT_EQ(b1(q(0)), q(1, 2));
  EXPECT_EQ(b1(q(1, 2)), q(1, 2));
  EXPECT_EQ(b1(q(3, 4)), q(1, 4));
  EXPECT_EQ(b1(q(1)), q(0));
  EXPECT_THROW(b1(q(2)), Error);
  EXPECT_THROW(dense_kink_boundary(0), Error);

  for (int n = 1; n <= 6; ++n) {
    const auto b = dense_kink_boundary(n);
    EXPECT_EQ(b.kinks().size(), static_cast<std::size_t>(n));
    for (int j = 0; j <= 64; ++j) {
      const Rational x = q(j, 64);
      Rational expected = 0;
      for (int i = 1; i <= n; ++i) {
        const Rational e = q(1, 1L << i);
        expected += std::min(e, Rational(e * (1 - x) / (1 - dyadic(i))));
      }
      EXPECT_EQ(b(x), expected);
    }
  }
}

TEST(Regions, GaugeValuesAndKinkPoints) {
  const auto body = dense_kink_body(1);
  EXPECT_EQ(gauge(body, {q(1), q(0)}), q(1));
  EXPECT_EQ(gauge(body, {q(0), q(1)}), q(2));
  EXPECT_EQ(gauge(body, {q(-3), q(0)}), q(3));
  EXPECT_EQ(gauge(body, {q(0), q(0)}), q(0));
  EXPECT_EQ(gauge(body, {q(1, 2), q(1, 2)}), q(1));
  EXPECT_EQ(body.kink_points(), (std::vector<Point>{{q(1, 2), q(1, 2)}}));
  EXPECT_EQ(dense_kink_body(5).kink_points().size(), 5u);
  EXPECT_THROW(gauge(body, {q(1)}), Error);
}

TEST(Regions, GaugeMatchesSupportLineOracle) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  for (int n : {1, 2, 3, 5}) {
    const auto body = dense_kink_body(n);
    for (int i = 0; i < 200; ++i) {
      const Point p{q(num(rng), den(rng)), q(num(rng), den(rng))};
      EXPECT_EQ(gauge(body, p), support_gauge(body.boundary(), p)) << "n=" << n;
    }
  }
}

TEST(Regions, GaugeIsAConvexNorm) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 9);
  const auto body = dense_kink_body(4);
  for (int i = 0; i < 200; ++i) {
    const Point p{q(num(rng), den(rng)), q(num(rng), den(rng))};
    const Point r{q(num(rng), den(rng)), q(num(rng), den(rng))};
    const Rational lambda = q(std::abs(num(rng)) + 1, den(rng));
    EXPECT_EQ(gauge(body, {lambda * p[0], lambda * p[1]}), lambda * gauge(body, p));
    EXPECT_EQ(gauge(body, {-p[0], p[1]}), gauge(body, p));
    EXPECT_LE(gauge(body, {p[0] + r[0], p[1] + r[1]}), gauge(body, p) + gauge(body, r));
  }
}
