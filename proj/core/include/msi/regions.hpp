#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "msi/monomial_ideal.hpp"
#include "msi/newton_geometry.hpp"

namespace msi {

/// Continuous piecewise-linear function on [0, last node], given by its
/// nodes (x_i, y_i) with x_0 = 0 < x_1 < ... .
///
/// ConvexDecreasing functions have strictly increasing nonpositive slopes and
/// are extended by their last value beyond the last node; their last node is
/// the x-intercept whenever the value there is 0. ConcaveNonincreasing
/// functions have strictly decreasing nonpositive slopes and are defined only
/// on [0, last node].
class PiecewiseLinearFn {
 public:
  enum class Shape { ConvexDecreasing, ConcaveNonincreasing };
  using Node = std::pair<Rational, Rational>;

  /// Validates shape; collinear interior nodes are dropped.
  static PiecewiseLinearFn from_nodes(std::vector<Node> nodes, Shape shape);

  Shape shape() const noexcept { return shape_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  /// Slope on [x_i, x_{i+1}] for each consecutive pair of nodes.
  std::vector<Rational> slopes() const;
  /// Breakpoints x > 0 where the slope changes; for a convex function this
  /// includes the intercept, where it meets its zero tail.
  std::vector<Rational> kinks() const;
  Rational value_at_zero() const { return nodes_.front().second; }
  /// Last node abscissa; the x-intercept when the last value is 0.
  Rational intercept() const { return nodes_.back().first; }

  /// Throws EvaluationOutOfDomain for x < 0 (and x beyond the domain of a concave fn).
  Rational operator()(const Rational& x) const;

 private:
  PiecewiseLinearFn(std::vector<Node> nodes, Shape shape) : nodes_(std::move(nodes)), shape_(shape) {}

  std::vector<Node> nodes_;
  Shape shape_;
};

/// i-th dyadic rational of (0,1) in the order 1/2, 1/4, 3/4, 1/8, 3/8, ... (i >= 1).
Rational dyadic(int i);

/// (2 - 2x) + sum_{i <= n_terms} max{0, (eps_i - x) / 2^{i+2}} with eps_i = dyadic(i).
PiecewiseLinearFn build_kinked_f(int n_terms);

/// 1 - x/2 on [0, 2].
PiecewiseLinearFn build_g();

/// Concave boundary sum_{i <= n_terms} min{2^-i, 2^-i (1 - x)/(1 - x_i)} on [0, 1],
/// x_i = dyadic(i).
PiecewiseLinearFn dense_kink_boundary(int n_terms);

/// Closed convex region of the orthant absorbing the orthant under addition.
class Region {
 public:
  enum class Provenance { Halfspaces, Epigraph, Scaled, Intersection, Minkowski, Orthant, Newton };

  Region(NewtonPolyhedron polyhedron, Provenance provenance)
      : poly_(std::move(polyhedron)), provenance_(provenance) {}

  const NewtonPolyhedron& polyhedron() const noexcept { return poly_; }
  std::size_t dim() const noexcept { return poly_.dim(); }
  const std::vector<Point>& vertices() const noexcept { return poly_.vertices(); }
  const std::vector<Facet>& facets() const noexcept { return poly_.facets(); }
  Provenance provenance() const noexcept { return provenance_; }

  /// Geometric equality; provenance is ignored.
  bool operator==(const Region& other) const { return poly_ == other.poly_; }

 private:
  NewtonPolyhedron poly_;
  Provenance provenance_;
};

std::string_view provenance_name(Region::Provenance p);

Region halfspace_region(const std::vector<Facet>& halfspaces, std::size_t dim);
/// The set above the graph of a convex decreasing function, inside the quadrant.
Region epigraph_region(const PiecewiseLinearFn& fn);
Region orthant_region(std::size_t dim);

Region region_scale(const Region& p, const Rational& t);
Region region_intersect(const Region& p, const Region& q);
Region region_minkowski(const Region& p, const Region& q);

bool contains_point(const Region& p, const Point& q);

/// Minimal generators of the ideal spanned by the lattice points of m*P.
MonomialIdeal lattice_generators(const Region& p, std::int64_t m);

/// Symmetric convex body obtained by reflecting the subgraph of a concave
/// nonincreasing function on [0,1] (with f(1) = 0, f(0) > 0) across both axes.
class SymmetricBody {
 public:
  explicit SymmetricBody(PiecewiseLinearFn boundary);

  const PiecewiseLinearFn& boundary() const noexcept { return boundary_; }
  /// First-quadrant boundary points where the boundary is not differentiable.
  std::vector<Point> kink_points() const;

 private:
  PiecewiseLinearFn boundary_;
};

SymmetricBody dense_kink_body(int n_terms);

/// Minkowski functional inf{ y > 0 : p / y in R }, found by intersecting the
/// ray through p with the boundary polygon.
Rational gauge(const SymmetricBody& body, const Point& p);

}  // namespace msi
