#include "msi/constructions.hpp"

#include "msi/error.hpp"

namespace msi {

Region corner_region() {
  return halfspace_region({Facet{{make_rational(1), make_rational(2)}, make_rational(2)},
                           Facet{{make_rational(2), make_rational(1)}, make_rational(2)}},
                          2);
}

ConeRep abs_value_cone() {
  std::vector<RationalVector> forms;
  for (int a : {1, -1})
    for (int b : {1, -1}) forms.push_back({make_rational(a), make_rational(b)});
  return ConeRep::epigraph(2, std::move(forms));
}

ConeRep nonpositive_orthant(std::size_t rank) {
  std::vector<RationalVector> normals;
  for (std::size_t i = 0; i < rank; ++i) {
    RationalVector n(rank, Rational(0));
    n[i] = -1;
    normals.push_back(std::move(n));
  }
  return ConeRep::halfspaces(rank, std::move(normals));
}

SystemExpr kinked_intersection_system(int n_kinks) {
  auto p = SystemExpr::region_system(epigraph_region(build_kinked_f(n_kinks)));
  auto q = SystemExpr::region_system(epigraph_region(build_g()));
  return SystemExpr::intersect(SystemExpr::pullback({{1, 0}}, std::move(p)),
                               SystemExpr::pullback({{0, 1}}, std::move(q)));
}

ConeRep slope_semigroup(const Rational& eps) {
  if (eps <= 0) throw Error(Errc::InvalidArgument, "slope must be positive");
  return ConeRep::halfspaces(2, {{Rational(-eps), Rational(1)}});
}

SystemExpr ceiling_system(const ConeRep& cone) { return SystemExpr::ceiling(cone, MonomialIdeal::maximal(2)); }

}  // namespace msi
