#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "msi/rational.hpp"

namespace msi {

using IndexVector = std::vector<std::int64_t>;

class SystemExpr;

/// Closed convex cone in index space R^rho.
class ConeRep {
 public:
  /// Intersection of halfspaces <a, x> >= 0.
  struct Halfspaces {
    std::vector<RationalVector> normals;
  };
  /// Closed cone spanned by integer rays.
  struct Rays {
    std::vector<IndexVector> rays;
  };
  /// {(x, y) : y >= f(x)} with f(x) = max(0, <l_1, x>, ..., <l_m, x>).
  struct Epigraph {
    std::vector<RationalVector> forms;
  };
  using Variant = std::variant<Halfspaces, Rays, Epigraph>;

  static ConeRep halfspaces(std::size_t rank, std::vector<RationalVector> normals);
  static ConeRep rays(std::size_t rank, std::vector<IndexVector> rays);
  /// `n` is the number of x-coordinates; the cone lives in R^(n+1).
  static ConeRep epigraph(std::size_t n, std::vector<RationalVector> forms);
  /// The whole space R^rho.
  static ConeRep full_space(std::size_t rank) { return halfspaces(rank, {}); }

  std::size_t rank() const noexcept { return rank_; }
  const Variant& variant() const noexcept { return rep_; }
  bool is_epigraph() const noexcept { return std::holds_alternative<Epigraph>(rep_); }

  /// f(x) of an Epigraph cone; throws InvalidArgument for other variants.
  Rational epigraph_value(const RationalVector& x) const;

 private:
  ConeRep(std::size_t rank, Variant rep) : rank_(rank), rep_(std::move(rep)) {}

  std::size_t rank_;
  Variant rep_;
};

bool cone_contains(const ConeRep& c, const RationalVector& v);
bool cone_contains(const ConeRep& c, const IndexVector& v);

/// Lattice points v with |v|_inf <= radius where eval(sys, v) is the unit
/// ideal (nef) or nonzero (eff), in lexicographic order.
std::vector<IndexVector> nef_points(const SystemExpr& sys, std::int64_t radius);
std::vector<IndexVector> eff_points(const SystemExpr& sys, std::int64_t radius);

/// Closed convex cone spanned by integer points, rank <= 3.
struct ConeHull {
  std::size_t rank = 0;
  /// The points positively span the whole space.
  bool full_space = false;
  /// Primitive extreme rays; empty when the cone contains a line.
  std::vector<IndexVector> rays;
  /// Primitive inward facet normals <n, x> >= 0.
  std::vector<IndexVector> normals;

  ConeRep as_halfspaces() const;
};

ConeHull ray_hull(const std::vector<IndexVector>& points, std::size_t rank);

struct ConeComparison {
  std::size_t samples = 0;
  std::vector<RationalVector> disagreements;
  std::size_t lattice_points = 0;
  std::vector<IndexVector> lattice_disagreements;

  bool agree() const { return disagreements.empty() && lattice_disagreements.empty(); }
};

/// Deterministic rational directions in [-1, 1]^rank from radical inverses
/// in the first `rank` prime bases.
std::vector<RationalVector> halton_directions(std::size_t rank, std::size_t count);

/// Classifies `samples` Halton directions and, when lattice_radius > 0, every
/// lattice point of the box [-R, R]^rank under both cones.
ConeComparison cone_compare(const ConeRep& estimated, const ConeRep& expected, std::size_t samples,
                            std::int64_t lattice_radius = 0);

std::string format_cone(const ConeRep& c);

}  // namespace msi
