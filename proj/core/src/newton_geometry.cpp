#include "msi/newton_geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "msi/error.hpp"

namespace msi {

namespace detail {

Rational determinant(const std::vector<RationalVector>& m) {
  switch (m.size()) {
    case 0: return 1;
    case 1: return m[0][0];
    case 2: return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    case 3:
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    default: throw Error(Errc::UnsupportedDimension, "determinant above 3x3");
  }
}

std::size_t rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

RationalVector cross(const RationalVector& a, const RationalVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace detail

namespace {

using detail::cross;

RationalVector sub(const Point& a, const Point& b) {
  RationalVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

RationalVector unit_vector(std::size_t dim, std::size_t i) {
  RationalVector e(dim, Rational(0));
  e[i] = 1;
  return e;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool leq(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void check_dim(std::size_t dim) {
  if (dim == 0) throw Error(Errc::InvalidArgument, "dimension must be at least 1");
  if (dim > 3) throw Error(Errc::UnsupportedDimension, "exact polyhedra need k <= 3, got " + std::to_string(dim));
}

void check_points(const std::vector<Point>& pts, std::size_t dim) {
  for (const auto& p : pts)
    if (p.size() != dim) throw Error(Errc::DimensionMismatch, "point of length " + std::to_string(p.size()));
}

// Minimal elements under the componentwise order, sorted lexicographically.
std::vector<Point> minimal_points(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Point> kept;
  for (auto& p : pts)
    if (std::none_of(kept.begin(), kept.end(), [&](const Point& q) { return leq(q, p); })) kept.push_back(std::move(p));
  return kept;
}

Rational cross2(const RationalVector& a, const RationalVector& b) { return a[0] * b[1] - a[1] * b[0]; }

// Convex hull of 2d points in counterclockwise order from the lex-smallest
// point; collinear points are dropped.
std::vector<Point> chain2d(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross2(sub(hull[k - 1], hull[k - 2]), sub(p, hull[k - 2])) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross2(sub(hull[k - 1], hull[k - 2]), sub(pts[i], hull[k - 2])) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Facet> coordinate_facets(const std::vector<Point>& vertices, std::size_t dim) {
  std::vector<Facet> out;
  for (std::size_t i = 0; i < dim; ++i) {
    Rational lo = vertices.front()[i];
    for (const auto& v : vertices) lo = std::min(lo, v[i]);
    out.push_back(Facet{unit_vector(dim, i), lo});
  }
  return out;
}

// Candidate facet normal for an upward-closed polyhedron: all entries share a sign.
bool orient_nonnegative(RationalVector& n) {
  bool pos = false, neg = false;
  for (const auto& x : n) {
    if (x > 0) pos = true;
    if (x < 0) neg = true;
  }
  if (pos && neg) return false;
  if (!pos && !neg) return false;
  if (neg)
    for (auto& x : n) x = -x;
  return true;
}

std::vector<Point> sorted_unique(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

Facet normalized(Facet f) {
  Integer den_lcm = 1;
  for (const auto& a : f.normal) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& a : f.normal) {
    Rational scaled = a * Rational(den_lcm);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_num_mpz_t());
  }
  if (num_gcd == 0) return f;
  Rational factor = Rational(den_lcm) / Rational(num_gcd);
  for (auto& a : f.normal) a *= factor;
  f.constant *= factor;
  return f;
}

NewtonPolyhedron NewtonPolyhedron::orthant(std::size_t dim) {
  check_dim(dim);
  return from_points({Point(dim, Rational(0))}, dim);
}

NewtonPolyhedron NewtonPolyhedron::from_points(std::vector<Point> points, std::size_t dim) {
  check_dim(dim);
  check_points(points, dim);
  if (points.empty()) throw Error(Errc::EmptyRegion, "no points");
  for (const auto& p : points)
    for (const auto& x : p)
      if (x < 0) throw Error(Errc::InvalidArgument, "point outside the nonnegative orthant");

  std::vector<Point> pts = minimal_points(std::move(points));
  std::vector<Point> vertices;
  std::vector<Facet> facets;

  if (dim == 1) {
    vertices = {pts.front()};
  } else if (dim == 2) {
    // Minimal points ordered by increasing x have decreasing y; keep the
    // lower-left convex chain (slopes strictly increasing).
    for (auto& p : pts) {
      while (vertices.size() >= 2) {
        const Point& a = vertices[vertices.size() - 2];
        const Point& b = vertices.back();
        if (cross2(sub(b, a), sub(p, b)) > 0) break;
        vertices.pop_back();
      }
      vertices.push_back(std::move(p));
    }
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
      const Point& a = vertices[i];
      const Point& b = vertices[i + 1];
      RationalVector n{a[1] - b[1], b[0] - a[0]};
      facets.push_back(normalized(Facet{n, dot(n, a)}));
    }
  } else {
    std::set<RationalVector> normals;
    auto consider = [&](RationalVector n) {
      if (!orient_nonnegative(n)) return;
      normals.insert(normalized(Facet{std::move(n), Rational(0)}).normal);
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        RationalVector d = sub(pts[j], pts[i]);
        for (std::size_t e = 0; e < 3; ++e) consider(cross(d, unit_vector(3, e)));
        for (std::size_t l = j + 1; l < pts.size(); ++l) consider(cross(d, sub(pts[l], pts[i])));
      }
    }
    for (const auto& n : normals) {
      std::size_t nonzero = std::count_if(n.begin(), n.end(), [](const Rational& x) { return x != 0; });
      if (nonzero < 2) continue;  // coordinate facets are added below
      Rational c = dot(n, pts.front());
      for (const auto& p : pts) c = std::min(c, dot(n, p));
      std::vector<RationalVector> span;
      const Point* base = nullptr;
      for (const auto& p : pts) {
        if (dot(n, p) != c) continue;
        if (!base) base = &p;
        else span.push_back(sub(p, *base));
      }
      for (std::size_t e = 0; e < 3; ++e)
        if (n[e] == 0) span.push_back(unit_vector(3, e));
      if (detail::rank(span) == 2) facets.push_back(Facet{n, c});
    }
    std::vector<Facet> all = facets;
    auto coords = coordinate_facets(pts, dim);
    all.insert(all.end(), coords.begin(), coords.end());
    for (const auto& p : pts) {
      std::vector<RationalVector> tight;
      for (const auto& f : all)
        if (dot(f.normal, p) == f.constant) tight.push_back(f.normal);
      if (detail::rank(tight) == 3) vertices.push_back(p);
    }
  }

  auto coords = coordinate_facets(vertices, dim);
  facets.insert(facets.end(), coords.begin(), coords.end());
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return NewtonPolyhedron(dim, sorted_unique(std::move(vertices)), std::move(facets));
}

NewtonPolyhedron NewtonPolyhedron::from_halfspaces(const std::vector<Facet>& halfspaces, std::size_t dim) {
  check_dim(dim);
  std::vector<Facet> constraints;
  for (const auto& h : halfspaces) {
    if (h.normal.size() != dim) throw Error(Errc::DimensionMismatch, "halfspace normal length");
    for (const auto& a : h.normal)
      if (a < 0) throw Error(Errc::InvalidArgument, "halfspace normal must be nonnegative to absorb the orthant");
    if (is_zero(h.normal)) {
      if (h.constant > 0) throw Error(Errc::EmptyRegion, "inconsistent halfspace 0 >= c");
      continue;
    }
    constraints.push_back(h);
  }
  for (std::size_t i = 0; i < dim; ++i) constraints.push_back(Facet{unit_vector(dim, i), Rational(0)});

  std::vector<Point> candidates;
  std::vector<std::size_t> idx(dim);
  // Enumerate dim-subsets of constraints and intersect their hyperplanes.
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
    if (depth == dim) {
      std::vector<RationalVector> rows;
      for (auto i : idx) rows.push_back(constraints[i].normal);
      Rational det = detail::determinant(rows);
      if (det == 0) return;
      Point x(dim);
      for (std::size_t col = 0; col < dim; ++col) {
        auto m = rows;
        for (std::size_t r = 0; r < dim; ++r) m[r][col] = constraints[idx[r]].constant;
        x[col] = detail::determinant(m) / det;
      }
      for (const auto& c : constraints)
        if (dot(c.normal, x) < c.constant) return;
      candidates.push_back(std::move(x));
      return;
    }
    for (std::size_t i = start; i < constraints.size(); ++i) {
      idx[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  if (candidates.empty()) throw Error(Errc::EmptyRegion, "halfspaces have no vertex");
  return from_points(std::move(candidates), dim);
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a) {
  if (a.is_zero()) throw Error(Errc::ZeroIdeal, "Newton polyhedron of the zero ideal");
  std::vector<Point> pts;
  for (const auto& g : a.generators()) {
    Point p;
    for (auto e : g) p.emplace_back(static_cast<long>(e));
    pts.push_back(std::move(p));
  }
  return NewtonPolyhedron::from_points(std::move(pts), a.dim());
}

bool contains_point(const NewtonPolyhedron& p, const Point& q) {
  if (q.size() != p.dim()) throw Error(Errc::DimensionMismatch, "point of length " + std::to_string(q.size()));
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [&](const Facet& f) { return dot(f.normal, q) >= f.constant; });
}

Rational diagonal_lambda(const NewtonPolyhedron& p) {
  Rational best = 0;
  for (const auto& f : p.facets()) {
    Rational s = 0;
    for (const auto& a : f.normal) s += a;
    if (s > 0) best = std::max(best, Rational(f.constant / s));
  }
  return best;
}

Rational min_weighted(const NewtonPolyhedron& p, const RationalVector& w) {
  if (w.size() != p.dim()) throw Error(Errc::DimensionMismatch, "weight vector length");
  for (const auto& x : w)
    if (x < 0) throw Error(Errc::NegativeWeight, "weights must be nonnegative");
  Rational best = dot(w, p.vertices().front());
  for (const auto& v : p.vertices()) best = std::min(best, dot(w, v));
  return best;
}

bool has_bounded_complement(const NewtonPolyhedron& p) {
  for (std::size_t i = 0; i < p.dim(); ++i) {
    bool on_axis = std::any_of(p.vertices().begin(), p.vertices().end(), [&](const Point& v) {
      for (std::size_t j = 0; j < v.size(); ++j)
        if (j != i && v[j] != 0) return false;
      return true;
    });
    if (!on_axis) return false;
  }
  return true;
}

Rational covolume(const NewtonPolyhedron& p) {
  if (!has_bounded_complement(p))
    throw Error(Errc::UnboundedComplement, "some coordinate axis never enters the polyhedron");
  const std::size_t k = p.dim();
  if (k == 1) return p.vertices().front()[0];

  // The complement is the union of cones from the origin over the compact
  // facets not through the origin.
  Rational total = 0;
  for (const auto& f : p.facets()) {
    if (f.constant <= 0) continue;
    std::vector<Point> face;
    for (const auto& v : p.vertices())
      if (dot(f.normal, v) == f.constant) face.push_back(v);
    if (k == 2) {
      if (face.size() != 2) throw Error(Errc::InvalidArgument, "malformed facet");
      total += abs(cross2(face[0], face[1])) / 2;
      continue;
    }
    if (f.normal[2] <= 0) throw Error(Errc::InvalidArgument, "compact facet with nonpositive normal");
    std::vector<Point> projected;
    for (const auto& v : face) projected.push_back({v[0], v[1]});
    std::vector<Point> order = chain2d(projected);
    std::vector<Point> polygon;
    for (const auto& q : order)
      for (const auto& v : face)
        if (v[0] == q[0] && v[1] == q[1]) {
          polygon.push_back(v);
          break;
        }
    for (std::size_t i = 1; i + 1 < polygon.size(); ++i)
      total += abs(detail::determinant({polygon[0], polygon[i], polygon[i + 1]})) / 6;
  }
  return total;
}

Hull convex_hull(std::vector<Point> points, std::size_t dim) {
  check_dim(dim);
  check_points(points, dim);
  if (points.empty()) throw Error(Errc::InvalidArgument, "convex hull of no points");
  points = sorted_unique(std::move(points));
  Hull hull;
  if (points.size() == 1) {
    hull.vertices = points;
    hull.degenerate = true;
    return hull;
  }
  if (dim == 1) {
    hull.vertices = {points.front(), points.back()};
    hull.facets = {Facet{{Rational(1)}, points.front()[0]}, Facet{{Rational(-1)}, -points.back()[0]}};
    return hull;
  }

  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  const std::size_t r = detail::rank(diffs);

  if (r == 1) {
    hull.vertices = {points.front(), points.back()};
    hull.degenerate = true;
    return hull;
  }

  if (dim == 2) {
    hull.vertices = chain2d(points);
    const auto& ring = hull.vertices;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Point& a = ring[i];
      const Point& b = ring[(i + 1) % ring.size()];
      RationalVector n{a[1] - b[1], b[0] - a[0]};
      hull.facets.push_back(normalized(Facet{n, dot(n, a)}));
    }
    hull.vertices = sorted_unique(hull.vertices);
    std::sort(hull.facets.begin(), hull.facets.end());
    return hull;
  }

  if (r == 2) {
    // Coplanar: hull in a coordinate plane onto which the projection is injective.
    RationalVector n;
    for (std::size_t i = 0; i < diffs.size() && n.empty(); ++i)
      for (std::size_t j = i + 1; j < diffs.size(); ++j) {
        RationalVector c = cross(diffs[i], diffs[j]);
        if (!is_zero(c)) {
          n = c;
          break;
        }
      }
    std::size_t drop = 0;
    while (n[drop] == 0) ++drop;
    std::vector<Point> projected;
    for (const auto& p : points) {
      Point q;
      for (std::size_t i = 0; i < 3; ++i)
        if (i != drop) q.push_back(p[i]);
      projected.push_back(q);
    }
    for (const auto& q : chain2d(projected))
      for (std::size_t i = 0; i < points.size(); ++i)
        if (projected[i] == q) {
          hull.vertices.push_back(points[i]);
          break;
        }
    hull.vertices = sorted_unique(hull.vertices);
    hull.degenerate = true;
    return hull;
  }

  std::set<Facet> facets;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      for (std::size_t l = j + 1; l < points.size(); ++l) {
        RationalVector n = cross(sub(points[j], points[i]), sub(points[l], points[i]));
        if (is_zero(n)) continue;
        Rational c = dot(n, points[i]);
        bool above = true, below = true;
        for (const auto& p : points) {
          Rational s = dot(n, p);
          if (s < c) above = false;
          if (s > c) below = false;
        }
        if (!above && !below) continue;
        if (!above) {
          for (auto& x : n) x = -x;
          c = -c;
        }
        facets.insert(normalized(Facet{n, c}));
      }
  hull.facets.assign(facets.begin(), facets.end());
  for (const auto& p : points) {
    std::vector<RationalVector> tight;
    for (const auto& f : hull.facets)
      if (dot(f.normal, p) == f.constant) tight.push_back(f.normal);
    if (detail::rank(tight) == 3) hull.vertices.push_back(p);
  }
  return hull;
}

std::string format_facet(const Facet& f) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < f.normal.size(); ++i) {
    const Rational& a = f.normal[i];
    if (a == 0) continue;
    if (first) out += (a < 0 ? "-" : "");
    else out += (a < 0 ? " - " : " + ");
    first = false;
    out += to_string(Rational(abs(a))) + " x" + std::to_string(i + 1);
  }
  if (first) out = "0";
  return out + " >= " + to_string(f.constant);
}

std::string format_polyhedron(const NewtonPolyhedron& p) {
  std::string out;
  for (const auto& v : p.vertices()) out += "V: " + to_string(v) + "\n";
  for (const auto& f : p.facets()) out += "F: " + format_facet(f) + "\n";
  return out;
}

}  // namespace msi
