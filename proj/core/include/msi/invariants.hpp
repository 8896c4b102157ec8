#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "msi/cones.hpp"
#include "msi/graded_system.hpp"
#include "msi/regions.hpp"

namespace msi {

enum class Quantity { Ord0, Arn, Mult };

std::string_view quantity_name(Quantity q);

/// Per-ideal value of a quantity: order, Arnold multiplicity, or Samuel multiplicity.
Rational ideal_quantity(const MonomialIdeal& a, Quantity q);

/// Indices n = L! (L = 1..max) or n = 2^j (j = 0..max).
struct Schedule {
  enum class Kind { Factorial, Doubling };

  Kind kind = Kind::Factorial;
  int max = 4;

  static Schedule factorial(int max_l);
  static Schedule doubling(int max_j);
  std::vector<std::int64_t> indices() const;
};

struct InvariantBracket {
  Quantity quantity = Quantity::Ord0;
  IndexVector direction;
  /// (n, quantity(a_{nv}) / n) or / n^k for Mult.
  std::vector<std::pair<std::int64_t, Rational>> samples;
  Rational upper;
  std::optional<Rational> geometric;
  /// Samples never increase along the schedule.
  bool monotone = true;
  /// The geometric value exists and lies below every sample.
  bool certified = false;
};

/// Sequence route. The geometric value is attached when the system has a
/// closed-form limit body.
InvariantBracket sequence_invariant(const SystemExpr& sys, const IndexVector& v, Quantity q,
                                    const Schedule& schedule);

struct InvariantTriple {
  Rational ord0;
  Rational arn;
  /// Absent when the complement of the body is unbounded.
  std::optional<Rational> mult;
};

/// (min of the coordinate sum, diagonal scaling, k! covolume) of a limit body.
InvariantTriple geometric_invariants(const Region& body);

/// Geometric route along a rational direction.
InvariantTriple asymptotic_invariants(const SystemExpr& sys, const RationalVector& v);
Rational asymptotic_ord0(const SystemExpr& sys, const RationalVector& v);

/// (t, t/2, t^2) with t = max(f(x) - y, 0), for ceiling systems over (z1, z2).
InvariantTriple ceiling_closed_forms(const ConeRep& cone, const RationalVector& v);

/// Minimal coordinate sum over rP ∩ sQ for P = epigraph(kinked f), Q = epigraph(g).
struct KinkedOrd0 {
  Rational vertex_route;
  Rational formula_route;
  /// Abscissa where the boundaries r f(x/r) and max(s - x/2, 0) meet.
  Rational crossing;

  bool agree() const { return vertex_route == formula_route; }
};

KinkedOrd0 kinked_ord0(const Rational& r, const Rational& s, int n_kinks);

/// One-sided difference quotients at s0 for h = 2^-3, ..., 2^-12.
struct SlopeGap {
  Rational s0;
  Rational left;
  Rational right;
  /// right - left
  Rational gap;
  /// The quotients at the two smallest steps coincide on each side.
  bool stable = false;
};

using RationalFn = std::function<Rational(const Rational&)>;

SlopeGap diff_quotient_scan(const RationalFn& fn, const Rational& s0);

/// Breakpoints in the open interval (lo, hi) of a convex piecewise-linear
/// function, located exactly by midpoint-linearity bisection.
std::vector<Rational> find_kinks(const RationalFn& fn, const Rational& lo, const Rational& hi, int max_depth = 40);

/// Kinks of s -> ord0(sys, (r, s)) in (lo, hi) with their slope gaps.
std::vector<SlopeGap> ord0_kink_table(const SystemExpr& sys, const Rational& r, const Rational& lo,
                                      const Rational& hi);

/// Kinks of t -> gauge((t, y_k)) at every boundary kink point (x_k, y_k).
struct GaugeKink {
  Point point;
  SlopeGap slopes;
};

std::vector<GaugeKink> gauge_kink_table(const SymmetricBody& body);

}  // namespace msi
