#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <variant>
#include <vector>

#include "msi/cones.hpp"
#include "msi/monomial_ideal.hpp"
#include "msi/regions.hpp"

namespace msi {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct SystemNode;

/// A Z^rho-graded system of monomial ideals, held as an immutable expression
/// tree and evaluated on demand at any index vector.
class SystemExpr {
 public:
  /// v -> I_1^{v_1} ... I_rho^{v_rho}, with I^n = (1) for n <= 0.
  static SystemExpr ideal_powers(std::vector<MonomialIdeal> ideals);
  /// n -> ideal of lattice points of nP for n > 0, (1) for n <= 0.
  static SystemExpr region_system(Region region);
  /// (x, y) -> base^{ceil(f(x) - y)} for an Epigraph cone {y >= f(x)}.
  static SystemExpr ceiling(ConeRep cone, MonomialIdeal base);
  /// w -> inner(phi w); phi is sigma x rho with sigma = inner rank.
  static SystemExpr pullback(IntMatrix phi, SystemExpr inner);
  static SystemExpr product(SystemExpr lhs, SystemExpr rhs);
  static SystemExpr intersect(SystemExpr lhs, SystemExpr rhs);
  /// Zero ideal outside the semigroup S, inner value on it.
  static SystemExpr truncate(SystemExpr inner, ConeRep semigroup);
  /// (m, n) -> (inner(m) : I^n), with I^n = (1) for n <= 0.
  static SystemExpr colon(SystemExpr inner, MonomialIdeal ideal);

  std::size_t rank() const noexcept;
  /// Number of variables of the ideals.
  std::size_t ideal_dim() const noexcept;
  const SystemNode& node() const noexcept { return *node_; }

  MonomialIdeal eval(const IndexVector& v) const;

 private:
  explicit SystemExpr(std::shared_ptr<const SystemNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const SystemNode> node_;
};

namespace nodes {
struct IdealPowers {
  std::vector<MonomialIdeal> ideals;
};
struct RegionSystem {
  Region region;
};
struct Ceiling {
  ConeRep cone;
  MonomialIdeal base;
};
struct Pullback {
  IntMatrix matrix;
  SystemExpr inner;
};
struct Product {
  SystemExpr lhs, rhs;
};
struct Intersect {
  SystemExpr lhs, rhs;
};
struct Truncate {
  SystemExpr inner;
  ConeRep semigroup;
};
struct Colon {
  SystemExpr inner;
  MonomialIdeal ideal;
};
}  // namespace nodes

using NodeKind = std::variant<nodes::IdealPowers, nodes::RegionSystem, nodes::Ceiling, nodes::Pullback,
                              nodes::Product, nodes::Intersect, nodes::Truncate, nodes::Colon>;

/// Bounded memo table keyed by index vector; safe for concurrent use.
class EvalCache {
 public:
  static constexpr std::size_t kDefaultCapacity = 4096;

  bool lookup(const IndexVector& v, MonomialIdeal& out) const;
  void insert(const IndexVector& v, const MonomialIdeal& value);

 private:
  mutable std::shared_mutex mutex_;
  std::map<IndexVector, MonomialIdeal> table_;
};

struct SystemNode {
  std::size_t rank;
  std::size_t dim;
  NodeKind kind;
  mutable EvalCache cache;

  SystemNode(std::size_t r, std::size_t d, NodeKind k) : rank(r), dim(d), kind(std::move(k)) {}
};

/// Globally enables or disables evaluation memoization (enabled by default).
void set_eval_cache_enabled(bool enabled);

/// n -> eval(sys, n v): the N-graded system along a direction.
class DirectionView {
 public:
  DirectionView(SystemExpr sys, IndexVector direction);

  const SystemExpr& system() const noexcept { return sys_; }
  const IndexVector& direction() const noexcept { return direction_; }
  MonomialIdeal eval(std::int64_t n) const;

 private:
  SystemExpr sys_;
  IndexVector direction_;
};

/// Throws ZeroDirection for v = 0.
DirectionView restrict_direction(const SystemExpr& sys, const IndexVector& v);

/// Closure of the limit body P(b_.) of b_n = a_{nv}.
Region limit_body(const SystemExpr& sys, const IndexVector& v);
Region limit_body(const DirectionView& view);
/// Rational directions, by positive homogeneity of the limit body.
Region limit_body(const SystemExpr& sys, const RationalVector& v);

/// Box [lo, hi] of index vectors.
struct IndexWindow {
  IndexVector lo;
  IndexVector hi;

  static IndexWindow cube(std::size_t rank, std::int64_t lo, std::int64_t hi);
  std::vector<IndexVector> points() const;
  bool contains(const IndexVector& v) const;
};

struct GradednessReport {
  std::size_t pairs_checked = 0;
  std::vector<std::pair<IndexVector, IndexVector>> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks a_v a_w ⊆ a_{v+w} for all v, w, v + w in the window.
GradednessReport verify_gradedness(const SystemExpr& sys, const IndexWindow& window);

std::string to_string(const IndexVector& v);

}  // namespace msi
