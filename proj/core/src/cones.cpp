#include "msi/cones.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "msi/error.hpp"
#include "msi/graded_system.hpp"
#include "msi/newton_geometry.hpp"
#include "msi/parallel.hpp"

namespace msi {

namespace {

void check_rank(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw Error(Errc::RankMismatch, "expected rank " + std::to_string(expected) + ", got " + std::to_string(got));
  }
}

RationalVector to_rational(const IndexVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(make_rational(x));
  return out;
}

std::int64_t idot(const IndexVector& a, const IndexVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IndexVector& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

IndexVector primitive(IndexVector v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

IndexVector negate(IndexVector v) {
  for (auto& x : v) x = -x;
  return v;
}

IndexVector icross(const IndexVector& a, const IndexVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::size_t irank(const std::vector<IndexVector>& rows) {
  if (rows.empty()) return 0;
  std::vector<RationalVector> r;
  r.reserve(rows.size());
  for (const auto& v : rows) r.push_back(to_rational(v));
  return detail::rank(std::move(r));
}

// Integer basis of the orthogonal complement of span(points) in R^rank.
std::vector<IndexVector> complement_basis(const std::vector<IndexVector>& pts, std::size_t rank,
                                          std::size_t span_rank) {
  std::vector<IndexVector> out;
  if (span_rank == rank) return out;
  if (span_rank == 0) {
    for (std::size_t i = 0; i < rank; ++i) {
      IndexVector e(rank, 0);
      e[i] = 1;
      out.push_back(e);
    }
    return out;
  }
  const IndexVector& p = pts.front();
  if (rank == 2) {
    out.push_back(primitive({-p[1], p[0]}));
    return out;
  }
  // rank 3
  if (span_rank == 2) {
    for (const auto& q : pts) {
      auto m = icross(p, q);
      if (!is_zero(m)) {
        out.push_back(primitive(m));
        return out;
      }
    }
  }
  for (std::size_t i = 0; i < 3 && out.size() < 2; ++i) {
    IndexVector e(3, 0);
    e[i] = 1;
    auto m = icross(p, e);
    if (is_zero(m)) continue;
    m = primitive(m);
    auto trial = out;
    trial.push_back(m);
    if (irank(trial) == trial.size()) out.push_back(m);
  }
  return out;
}

}  // namespace

ConeRep ConeRep::halfspaces(std::size_t rank, std::vector<RationalVector> normals) {
  if (rank == 0) throw Error(Errc::InvalidArgument, "cone rank must be positive");
  for (const auto& n : normals) check_rank(rank, n.size());
  return ConeRep(rank, Halfspaces{std::move(normals)});
}

ConeRep ConeRep::rays(std::size_t rank, std::vector<IndexVector> rays) {
  if (rank == 0) throw Error(Errc::InvalidArgument, "cone rank must be positive");
  for (const auto& r : rays) check_rank(rank, r.size());
  return ConeRep(rank, Rays{std::move(rays)});
}

ConeRep ConeRep::epigraph(std::size_t n, std::vector<RationalVector> forms) {
  for (const auto& f : forms) {
    if (f.size() != n) throw Error(Errc::DimensionMismatch, "linear form length differs from n");
  }
  return ConeRep(n + 1, Epigraph{std::move(forms)});
}

Rational ConeRep::epigraph_value(const RationalVector& x) const {
  const auto* e = std::get_if<Epigraph>(&rep_);
  if (e == nullptr) throw Error(Errc::InvalidArgument, "cone is not given as an epigraph");
  if (x.size() + 1 != rank_) throw Error(Errc::DimensionMismatch, "argument length differs from n");
  Rational best = 0;
  for (const auto& f : e->forms) {
    Rational v = dot(f, x);
    if (v > best) best = v;
  }
  return best;
}

bool cone_contains(const ConeRep& c, const RationalVector& v) {
  check_rank(c.rank(), v.size());
  const auto& rep = c.variant();
  if (const auto* h = std::get_if<ConeRep::Halfspaces>(&rep)) {
    return std::all_of(h->normals.begin(), h->normals.end(), [&](const auto& n) { return dot(n, v) >= 0; });
  }
  if (const auto* r = std::get_if<ConeRep::Rays>(&rep)) {
    return cone_contains(ray_hull(r->rays, c.rank()).as_halfspaces(), v);
  }
  RationalVector x(v.begin(), v.end() - 1);
  return v.back() >= c.epigraph_value(x);
}

bool cone_contains(const ConeRep& c, const IndexVector& v) { return cone_contains(c, to_rational(v)); }

namespace {

std::vector<IndexVector> scan_points(const SystemExpr& sys, std::int64_t radius, bool want_unit) {
  if (radius < 0) throw Error(Errc::InvalidArgument, "radius must be nonnegative");
  const auto window = IndexWindow::cube(sys.rank(), -radius, radius);
  const auto pts = window.points();
  std::vector<char> keep(pts.size(), 0);
  parallel_for(pts.size(), [&](std::size_t i) {
    const auto a = sys.eval(pts[i]);
    keep[i] = want_unit ? a.is_unit() : !a.is_zero();
  });
  std::vector<IndexVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (keep[i]) out.push_back(pts[i]);
  }
  return out;
}

}  // namespace

std::vector<IndexVector> nef_points(const SystemExpr& sys, std::int64_t radius) {
  return scan_points(sys, radius, true);
}

std::vector<IndexVector> eff_points(const SystemExpr& sys, std::int64_t radius) {
  return scan_points(sys, radius, false);
}

ConeRep ConeHull::as_halfspaces() const {
  std::vector<RationalVector> ns;
  ns.reserve(normals.size());
  for (const auto& n : normals) ns.push_back(to_rational(n));
  return ConeRep::halfspaces(rank, std::move(ns));
}

ConeHull ray_hull(const std::vector<IndexVector>& points, std::size_t rank) {
  if (rank == 0 || rank > 3) throw Error(Errc::UnsupportedDimension, "ray hulls need rank 1, 2 or 3");
  std::set<IndexVector> uniq;
  for (const auto& p : points) {
    check_rank(rank, p.size());
    if (!is_zero(p)) uniq.insert(primitive(p));
  }
  const std::vector<IndexVector> pts(uniq.begin(), uniq.end());
  const std::size_t r = irank(pts);

  ConeHull hull;
  hull.rank = rank;

  // Equalities cutting out the linear span, as pairs of opposite normals.
  const auto comp = complement_basis(pts, rank, r);
  std::set<IndexVector> equalities;
  for (const auto& m : comp) {
    equalities.insert(m);
    equalities.insert(negate(m));
  }

  std::set<IndexVector> candidates;
  auto add = [&](const IndexVector& n) {
    if (is_zero(n)) return;
    auto p = primitive(n);
    candidates.insert(p);
    candidates.insert(negate(p));
  };
  if (r == 1) {
    add(pts.front());
  } else if (r == 2 && rank == 2) {
    for (const auto& p : pts) add({-p[1], p[0]});
  } else if (r == 2 && rank == 3) {
    for (const auto& p : pts) add(icross(comp.front(), p));
  } else if (r == 3) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) add(icross(pts[i], pts[j]));
    }
  }

  std::set<IndexVector> facets;
  for (const auto& n : candidates) {
    if (equalities.count(n)) continue;
    std::vector<IndexVector> tight = comp;
    bool supporting = true;
    for (const auto& p : pts) {
      const auto d = idot(n, p);
      if (d < 0) {
        supporting = false;
        break;
      }
      if (d == 0) tight.push_back(p);
    }
    if (supporting && irank(tight) == rank - 1) facets.insert(n);
  }

  if (r == rank && facets.empty()) {
    hull.full_space = true;
    return hull;
  }
  hull.normals.assign(equalities.begin(), equalities.end());
  hull.normals.insert(hull.normals.end(), facets.begin(), facets.end());
  std::sort(hull.normals.begin(), hull.normals.end());

  if (irank(hull.normals) < rank) return hull;  // contains a line
  for (const auto& p : pts) {
    std::vector<IndexVector> tight;
    for (const auto& n : hull.normals) {
      if (idot(n, p) == 0) tight.push_back(n);
    }
    if (irank(tight) == rank - 1) hull.rays.push_back(p);
  }
  return hull;
}

std::vector<RationalVector> halton_directions(std::size_t rank, std::size_t count) {
  static constexpr std::int64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  if (rank > std::size(kPrimes)) throw Error(Errc::UnsupportedDimension, "too many Halton bases");
  std::vector<RationalVector> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    RationalVector v;
    for (std::size_t d = 0; d < rank; ++d) {
      const std::int64_t b = kPrimes[d];
      Rational u = 0;
      Rational scale = make_rational(1, b);
      for (std::size_t k = i; k > 0; k /= b) {
        u += scale * static_cast<long>(k % b);
        scale /= b;
      }
      v.emplace_back(2 * u - 1);
    }
    out.push_back(std::move(v));
  }
  return out;
}

ConeComparison cone_compare(const ConeRep& estimated, const ConeRep& expected, std::size_t samples,
                            std::int64_t lattice_radius) {
  check_rank(expected.rank(), estimated.rank());
  const std::size_t rank = expected.rank();
  // Convert ray cones once rather than per query.
  auto prepare = [&](const ConeRep& c) {
    if (const auto* r = std::get_if<ConeRep::Rays>(&c.variant())) {
      auto hull = ray_hull(r->rays, rank);
      return hull.as_halfspaces();
    }
    return c;
  };
  const ConeRep est = prepare(estimated);
  const ConeRep exp = prepare(expected);

  ConeComparison report;
  const auto dirs = halton_directions(rank, samples);
  report.samples = dirs.size();
  for (const auto& d : dirs) {
    if (cone_contains(est, d) != cone_contains(exp, d)) report.disagreements.push_back(d);
  }
  if (lattice_radius > 0) {
    const auto pts = IndexWindow::cube(rank, -lattice_radius, lattice_radius).points();
    report.lattice_points = pts.size();
    for (const auto& p : pts) {
      if (cone_contains(est, p) != cone_contains(exp, p)) report.lattice_disagreements.push_back(p);
    }
  }
  return report;
}

std::string format_cone(const ConeRep& c) {
  std::ostringstream os;
  os << "rank " << c.rank() << '\n';
  auto row = [&](const char* tag, const auto& v) {
    os << tag;
    for (const auto& x : v) {
      os << ' ';
      if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
        os << to_string(x);
      } else {
        os << x;
      }
    }
    os << '\n';
  };
  std::visit(
      [&](const auto& rep) {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, ConeRep::Halfspaces>) {
          for (const auto& n : rep.normals) row("halfspace", n);
        } else if constexpr (std::is_same_v<T, ConeRep::Rays>) {
          for (const auto& r : rep.rays) row("ray", r);
        } else {
          for (const auto& f : rep.forms) row("form", f);
        }
      },
      c.variant());
  return os.str();
}

}  // namespace msi
