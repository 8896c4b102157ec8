#pragma once

#include "msi/cones.hpp"
#include "msi/graded_system.hpp"
#include "msi/regions.hpp"

namespace msi {

/// {x + 2y >= 2, 2x + y >= 2} in the quadrant.
Region corner_region();

/// {y >= |x1| + |x2|}, as the epigraph of max(±x1 ± x2, 0).
ConeRep abs_value_cone();

/// {v : v_i <= 0 for all i}.
ConeRep nonpositive_orthant(std::size_t rank);

/// (m, n) -> a_m ∩ b_n with a_m from m·epigraph(kinked f) and b_n from
/// n·epigraph(g): region systems pulled back along the two projections.
SystemExpr kinked_intersection_system(int n_kinks);

/// {(r, s) : s >= eps r} for eps > 0.
ConeRep slope_semigroup(const Rational& eps);

/// Ceiling system m^{ceil(f(x) - y)} over (z1, z2) by default.
SystemExpr ceiling_system(const ConeRep& cone);

}  // namespace msi
