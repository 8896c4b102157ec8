#include "msi/regions.hpp"

#include <algorithm>
#include <bit>

#include "msi/error.hpp"

namespace msi {

PiecewiseLinearFn PiecewiseLinearFn::from_nodes(std::vector<Node> nodes, Shape shape) {
  if (nodes.empty()) throw Error(Errc::InvalidArgument, "piecewise-linear function needs at least one node");
  if (nodes.front().first != 0) throw Error(Errc::InvalidArgument, "first node must sit at x = 0");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].second < 0) throw Error(Errc::InvalidArgument, "function values must be nonnegative");
    if (i > 0 && nodes[i].first <= nodes[i - 1].first)
      throw Error(Errc::InvalidArgument, "node abscissae must be strictly increasing");
  }
  auto slope = [&](std::size_t i) {
    return Rational((nodes[i + 1].second - nodes[i].second) / (nodes[i + 1].first - nodes[i].first));
  };
  std::vector<Node> kept{nodes.front()};
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i)
    if (slope(i - 1) != slope(i)) kept.push_back(nodes[i]);
  if (nodes.size() > 1) kept.push_back(nodes.back());

  PiecewiseLinearFn fn(std::move(kept), shape);
  auto s = fn.slopes();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > 0) throw Error(Errc::InvalidArgument, "slopes must be nonpositive");
    if (i > 0) {
      bool ok = shape == Shape::ConvexDecreasing ? s[i] > s[i - 1] : s[i] < s[i - 1];
      if (!ok)
        throw Error(Errc::InvalidArgument, shape == Shape::ConvexDecreasing ? "slopes must strictly increase (convexity)"
                                                                           : "slopes must strictly decrease (concavity)");
    }
  }
  return fn;
}

std::vector<Rational> PiecewiseLinearFn::slopes() const {
  std::vector<Rational> s;
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
    s.push_back((nodes_[i + 1].second - nodes_[i].second) / (nodes_[i + 1].first - nodes_[i].first));
  return s;
}

std::vector<Rational> PiecewiseLinearFn::kinks() const {
  std::vector<Rational> k;
  for (std::size_t i = 1; i + 1 < nodes_.size(); ++i) k.push_back(nodes_[i].first);
  if (shape_ == Shape::ConvexDecreasing && nodes_.size() >= 2 && nodes_.back().second == 0) {
    // The switch to the zero tail is a kink too.
    auto s = slopes();
    if (s.back() < 0) k.push_back(nodes_.back().first);
  }
  return k;
}

Rational PiecewiseLinearFn::operator()(const Rational& x) const {
  if (x < 0) throw Error(Errc::EvaluationOutOfDomain, "x = " + to_string(x) + " < 0");
  if (x >= nodes_.back().first) {
    if (shape_ == Shape::ConcaveNonincreasing && x > nodes_.back().first)
      throw Error(Errc::EvaluationOutOfDomain, "x = " + to_string(x) + " beyond the domain");
    return nodes_.back().second;
  }
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x,
                             [](const Rational& v, const Node& n) { return v < n.first; });
  const Node& right = *it;
  const Node& left = *(it - 1);
  return left.second + (right.second - left.second) * (x - left.first) / (right.first - left.first);
}

Rational dyadic(int i) {
  if (i < 1) throw Error(Errc::InvalidArgument, "dyadic index starts at 1");
  const unsigned u = static_cast<unsigned>(i);
  const int level = std::bit_width(u);
  const std::int64_t offset = static_cast<std::int64_t>(u) - (std::int64_t{1} << (level - 1));
  return make_rational(2 * offset + 1, std::int64_t{1} << level);
}

PiecewiseLinearFn build_kinked_f(int n_terms) {
  if (n_terms < 0) throw Error(Errc::InvalidArgument, "number of kink terms must be nonnegative");
  std::vector<Rational> eps;
  std::vector<Rational> weight;
  for (int i = 1; i <= n_terms; ++i) {
    eps.push_back(dyadic(i));
    weight.push_back(make_rational(1, std::int64_t{1} << (i + 2)));
  }
  auto value = [&](const Rational& x) {
    Rational v = 2 - 2 * x;
    for (std::size_t i = 0; i < eps.size(); ++i)
      if (x < eps[i]) v += (eps[i] - x) * weight[i];
    return v;
  };
  std::vector<Rational> xs{Rational(0)};
  xs.insert(xs.end(), eps.begin(), eps.end());
  xs.push_back(Rational(1));
  std::sort(xs.begin(), xs.end());
  std::vector<PiecewiseLinearFn::Node> nodes;
  for (const auto& x : xs) nodes.emplace_back(x, value(x));
  return PiecewiseLinearFn::from_nodes(std::move(nodes), PiecewiseLinearFn::Shape::ConvexDecreasing);
}

PiecewiseLinearFn build_g() {
  return PiecewiseLinearFn::from_nodes({{Rational(0), Rational(1)}, {Rational(2), Rational(0)}},
                                       PiecewiseLinearFn::Shape::ConvexDecreasing);
}

PiecewiseLinearFn dense_kink_boundary(int n_terms) {
  if (n_terms < 1) throw Error(Errc::InvalidArgument, "dense kink boundary needs at least one term");
  std::vector<Rational> kink, eps;
  for (int i = 1; i <= n_terms; ++i) {
    kink.push_back(dyadic(i));
    eps.push_back(make_rational(1, std::int64_t{1} << i));
  }
  auto value = [&](const Rational& x) {
    Rational v = 0;
    for (std::size_t i = 0; i < kink.size(); ++i) {
      Rational ramp = eps[i] * (1 - x) / (1 - kink[i]);
      v += std::min(eps[i], ramp);
    }
    return v;
  };
  std::vector<Rational> xs{Rational(0)};
  xs.insert(xs.end(), kink.begin(), kink.end());
  xs.push_back(Rational(1));
  std::sort(xs.begin(), xs.end());
  std::vector<PiecewiseLinearFn::Node> nodes;
  for (const auto& x : xs) nodes.emplace_back(x, value(x));
  return PiecewiseLinearFn::from_nodes(std::move(nodes), PiecewiseLinearFn::Shape::ConcaveNonincreasing);
}

std::string_view provenance_name(Region::Provenance p) {
  switch (p) {
    case Region::Provenance::Halfspaces: return "halfspaces";
    case Region::Provenance::Epigraph: return "epigraph";
    case Region::Provenance::Scaled: return "scaled";
    case Region::Provenance::Intersection: return "intersection";
    case Region::Provenance::Minkowski: return "minkowski";
    case Region::Provenance::Orthant: return "orthant";
    case Region::Provenance::Newton: return "newton";
  }
  return "region";
}

Region halfspace_region(const std::vector<Facet>& halfspaces, std::size_t dim) {
  return Region(NewtonPolyhedron::from_halfspaces(halfspaces, dim), Region::Provenance::Halfspaces);
}

Region epigraph_region(const PiecewiseLinearFn& fn) {
  if (fn.shape() != PiecewiseLinearFn::Shape::ConvexDecreasing)
    throw Error(Errc::InvalidArgument, "epigraph needs a convex decreasing function");
  std::vector<Point> pts;
  for (const auto& [x, y] : fn.nodes()) pts.push_back({x, y});
  return Region(NewtonPolyhedron::from_points(std::move(pts), 2), Region::Provenance::Epigraph);
}

Region orthant_region(std::size_t dim) { return Region(NewtonPolyhedron::orthant(dim), Region::Provenance::Orthant); }

Region region_scale(const Region& p, const Rational& t) {
  if (t <= 0) throw Error(Errc::NonpositiveScale, "scale factor " + to_string(t));
  std::vector<Point> pts;
  for (const auto& v : p.vertices()) {
    Point s = v;
    for (auto& x : s) x *= t;
    pts.push_back(std::move(s));
  }
  return Region(NewtonPolyhedron::from_points(std::move(pts), p.dim()), Region::Provenance::Scaled);
}

Region region_intersect(const Region& p, const Region& q) {
  if (p.dim() != q.dim()) throw Error(Errc::DimensionMismatch, "regions of different dimension");
  std::vector<Facet> all = p.facets();
  all.insert(all.end(), q.facets().begin(), q.facets().end());
  return Region(NewtonPolyhedron::from_halfspaces(all, p.dim()), Region::Provenance::Intersection);
}

Region region_minkowski(const Region& p, const Region& q) {
  if (p.dim() != q.dim()) throw Error(Errc::DimensionMismatch, "regions of different dimension");
  std::vector<Point> sums;
  for (const auto& u : p.vertices())
    for (const auto& v : q.vertices()) {
      Point s(u.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = u[i] + v[i];
      sums.push_back(std::move(s));
    }
  return Region(NewtonPolyhedron::from_points(std::move(sums), p.dim()), Region::Provenance::Minkowski);
}

bool contains_point(const Region& p, const Point& q) { return contains_point(p.polyhedron(), q); }

MonomialIdeal lattice_generators(const Region& p, std::int64_t m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "lattice generators need m >= 1");
  const std::size_t k = p.dim();
  const Rational scale(static_cast<long>(m));

  // Scanning the first k-1 coordinates over the box up to the largest vertex
  // coordinate suffices: clipping any lattice point of mP to that box stays in mP.
  std::vector<Exponent> bound(k, 0);
  for (const auto& v : p.vertices())
    for (std::size_t i = 0; i < k; ++i) bound[i] = std::max(bound[i], to_int64(ceil(Rational(v[i] * scale))));

  std::vector<ExponentVector> gens;
  ExponentVector prefix(k - 1, 0);
  while (true) {
    Rational lower = 0;
    bool feasible = true;
    for (const auto& f : p.facets()) {
      Rational rest = f.constant * scale;
      for (std::size_t i = 0; i + 1 < k; ++i) rest -= f.normal[i] * Rational(static_cast<long>(prefix[i]));
      const Rational& a_last = f.normal[k - 1];
      if (a_last > 0) {
        lower = std::max(lower, Rational(rest / a_last));
      } else if (rest > 0) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      ExponentVector g = prefix;
      g.push_back(to_int64(ceil(lower)));
      gens.push_back(std::move(g));
    }
    std::size_t i = 0;
    for (; i + 1 < k; ++i) {
      if (++prefix[i] <= bound[i]) break;
      prefix[i] = 0;
    }
    if (i + 1 >= k) break;
  }
  if (gens.empty()) throw Error(Errc::EmptyRegion, "no lattice points in the scan box");
  return minimalize(std::move(gens), k);
}

SymmetricBody::SymmetricBody(PiecewiseLinearFn boundary) : boundary_(std::move(boundary)) {
  if (boundary_.shape() != PiecewiseLinearFn::Shape::ConcaveNonincreasing)
    throw Error(Errc::InvalidArgument, "symmetric body needs a concave boundary");
  if (boundary_.nodes().size() < 2 || boundary_.nodes().back().second != 0 || boundary_.value_at_zero() <= 0)
    throw Error(Errc::InvalidArgument, "boundary must start above 0 and end on the x-axis");
}

std::vector<Point> SymmetricBody::kink_points() const {
  std::vector<Point> out;
  const auto& nodes = boundary_.nodes();
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i) out.push_back({nodes[i].first, nodes[i].second});
  return out;
}

SymmetricBody dense_kink_body(int n_terms) { return SymmetricBody(dense_kink_boundary(n_terms)); }

Rational gauge(const SymmetricBody& body, const Point& p) {
  if (p.size() != 2) throw Error(Errc::DimensionMismatch, "gauge takes planar points");
  const Rational a = abs(p[0]);
  const Rational b = abs(p[1]);
  if (a == 0 && b == 0) return 0;
  const auto& nodes = body.boundary().nodes();
  auto cross = [](const Rational& ux, const Rational& uy, const Rational& vx, const Rational& vy) {
    return Rational(ux * vy - uy * vx);
  };
  for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
    const auto& [x0, y0] = nodes[j];
    const auto& [x1, y1] = nodes[j + 1];
    if (cross(a, b, x0, y0) >= 0 && cross(x1, y1, a, b) >= 0) {
      // Outward normal of the edge; <normal, node> > 0 because 0 is interior.
      Rational nx = -(y1 - y0);
      Rational ny = x1 - x0;
      return (nx * a + ny * b) / (nx * x0 + ny * y0);
    }
  }
  throw Error(Errc::InvalidArgument, "ray missed the boundary");
}

}  // namespace msi
