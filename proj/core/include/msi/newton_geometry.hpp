#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "msi/monomial_ideal.hpp"
#include "msi/rational.hpp"

namespace msi {

using Point = RationalVector;

/// Inequality <normal, x> >= constant. Normals are kept primitive-integral.
struct Facet {
  RationalVector normal;
  Rational constant;

  bool operator==(const Facet&) const = default;
  bool operator<(const Facet& other) const {
    if (normal != other.normal) return normal < other.normal;
    return constant < other.constant;
  }
};

/// Scales a facet so its normal is a primitive integer vector.
Facet normalized(Facet f);

/// A polyhedron conv(vertices) + R_{>=0}^k in the nonnegative orthant.
///
/// Supports k <= 3 exactly. Vertices are sorted lexicographically and facets
/// are normalized and sorted, so equal polyhedra compare equal. The facet
/// list includes the coordinate facets x_i >= min_i.
class NewtonPolyhedron {
 public:
  /// conv(points) + orthant.
  static NewtonPolyhedron from_points(std::vector<Point> points, std::size_t dim);
  /// Intersection of upward-closed halfspaces (normals >= 0) with the orthant.
  static NewtonPolyhedron from_halfspaces(const std::vector<Facet>& halfspaces, std::size_t dim);
  static NewtonPolyhedron orthant(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }

  bool operator==(const NewtonPolyhedron&) const = default;

 private:
  NewtonPolyhedron(std::size_t dim, std::vector<Point> vertices, std::vector<Facet> facets)
      : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {}

  std::size_t dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a);

bool contains_point(const NewtonPolyhedron& p, const Point& q);

/// inf { lambda >= 0 : lambda * (1,...,1) in P }
Rational diagonal_lambda(const NewtonPolyhedron& p);

/// min over P of <w, x> for w >= 0.
Rational min_weighted(const NewtonPolyhedron& p, const RationalVector& w);

bool has_bounded_complement(const NewtonPolyhedron& p);

/// Exact volume of R_{>=0}^k \ P; throws UnboundedComplement.
Rational covolume(const NewtonPolyhedron& p);

/// Exact convex hull of a finite point set in dimension <= 3.
struct Hull {
  std::vector<Point> vertices;
  /// Inward inequalities <a, x> >= c; empty for degenerate hulls.
  std::vector<Facet> facets;
  /// True when the points span less than the full dimension.
  bool degenerate = false;
};

Hull convex_hull(std::vector<Point> points, std::size_t dim);

/// `V: (p/q, ...)` vertex lines followed by `F: a1 x1 + ... >= c` facet lines.
std::string format_polyhedron(const NewtonPolyhedron& p);

std::string format_facet(const Facet& f);

namespace detail {
/// Determinant of a square rational matrix (size <= 3).
Rational determinant(const std::vector<RationalVector>& rows);
/// Rank of a list of vectors.
std::size_t rank(std::vector<RationalVector> rows);
/// 3d cross product.
RationalVector cross(const RationalVector& a, const RationalVector& b);
}  // namespace detail

}  // namespace msi
