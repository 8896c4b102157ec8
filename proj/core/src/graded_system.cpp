#include "msi/graded_system.hpp"

#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>

#include "msi/error.hpp"
#include "msi/parallel.hpp"

namespace msi {

namespace {

std::atomic<bool> g_cache_enabled{true};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_rank(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw Error(Errc::RankMismatch, "expected rank " + std::to_string(expected) + ", got " + std::to_string(got));
  }
}

void check_dim(std::size_t a, std::size_t b) {
  if (a != b) throw Error(Errc::DimensionMismatch, "ideal dimensions differ");
}

IndexVector apply(const IntMatrix& phi, const IndexVector& w) {
  IndexVector out(phi.size(), 0);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) out[i] += phi[i][j] * w[j];
  }
  return out;
}

MonomialIdeal eval_node(const SystemNode& node, const IndexVector& v) {
  return std::visit(
      Overloaded{
          [&](const nodes::IdealPowers& n) {
            auto acc = MonomialIdeal::unit(node.dim);
            for (std::size_t i = 0; i < n.ideals.size(); ++i) {
              if (v[i] > 0) acc = product(acc, power(n.ideals[i], v[i]));
            }
            return acc;
          },
          [&](const nodes::RegionSystem& n) {
            if (v[0] <= 0) return MonomialIdeal::unit(node.dim);
            return lattice_generators(n.region, v[0]);
          },
          [&](const nodes::Ceiling& n) {
            RationalVector x;
            for (std::size_t i = 0; i + 1 < v.size(); ++i) x.emplace_back(make_rational(v[i]));
            const Rational t = n.cone.epigraph_value(x) - make_rational(v.back());
            return power(n.base, to_int64(ceil(t)));
          },
          [&](const nodes::Pullback& n) { return n.inner.eval(apply(n.matrix, v)); },
          [&](const nodes::Product& n) { return product(n.lhs.eval(v), n.rhs.eval(v)); },
          [&](const nodes::Intersect& n) { return intersect(n.lhs.eval(v), n.rhs.eval(v)); },
          [&](const nodes::Truncate& n) {
            if (!cone_contains(n.semigroup, v)) return MonomialIdeal::zero(node.dim);
            return n.inner.eval(v);
          },
          [&](const nodes::Colon& n) {
            const IndexVector m(v.begin(), v.end() - 1);
            const auto inner = n.inner.eval(m);
            if (v.back() <= 0) return inner;
            return colon(inner, power(n.ideal, v.back()));
          },
      },
      node.kind);
}

}  // namespace

bool EvalCache::lookup(const IndexVector& v, MonomialIdeal& out) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(v);
  if (it == table_.end()) return false;
  out = it->second;
  return true;
}

void EvalCache::insert(const IndexVector& v, const MonomialIdeal& value) {
  std::unique_lock lock(mutex_);
  if (table_.size() >= kDefaultCapacity) table_.clear();
  table_.emplace(v, value);
}

void set_eval_cache_enabled(bool enabled) { g_cache_enabled = enabled; }

SystemExpr SystemExpr::ideal_powers(std::vector<MonomialIdeal> ideals) {
  if (ideals.empty()) throw Error(Errc::InvalidArgument, "powers node needs at least one ideal");
  const std::size_t dim = ideals.front().dim();
  for (const auto& a : ideals) check_dim(dim, a.dim());
  const std::size_t rank = ideals.size();
  return SystemExpr(std::make_shared<SystemNode>(rank, dim, nodes::IdealPowers{std::move(ideals)}));
}

SystemExpr SystemExpr::region_system(Region region) {
  const std::size_t dim = region.dim();
  return SystemExpr(std::make_shared<SystemNode>(1, dim, nodes::RegionSystem{std::move(region)}));
}

SystemExpr SystemExpr::ceiling(ConeRep cone, MonomialIdeal base) {
  if (!cone.is_epigraph()) throw Error(Errc::InvalidArgument, "ceiling systems need a cone given by linear forms");
  const std::size_t rank = cone.rank();
  const std::size_t dim = base.dim();
  return SystemExpr(std::make_shared<SystemNode>(rank, dim, nodes::Ceiling{std::move(cone), std::move(base)}));
}

SystemExpr SystemExpr::pullback(IntMatrix phi, SystemExpr inner) {
  check_rank(inner.rank(), phi.size());
  const std::size_t cols = phi.front().size();
  if (cols == 0) throw Error(Errc::InvalidArgument, "pullback matrix has no columns");
  for (const auto& row : phi) {
    if (row.size() != cols) throw Error(Errc::InvalidArgument, "pullback matrix rows differ in length");
  }
  const std::size_t dim = inner.ideal_dim();
  return SystemExpr(std::make_shared<SystemNode>(cols, dim, nodes::Pullback{std::move(phi), std::move(inner)}));
}

SystemExpr SystemExpr::product(SystemExpr lhs, SystemExpr rhs) {
  check_rank(lhs.rank(), rhs.rank());
  check_dim(lhs.ideal_dim(), rhs.ideal_dim());
  const std::size_t rank = lhs.rank(), dim = lhs.ideal_dim();
  return SystemExpr(std::make_shared<SystemNode>(rank, dim, nodes::Product{std::move(lhs), std::move(rhs)}));
}

SystemExpr SystemExpr::intersect(SystemExpr lhs, SystemExpr rhs) {
  check_rank(lhs.rank(), rhs.rank());
  check_dim(lhs.ideal_dim(), rhs.ideal_dim());
  const std::size_t rank = lhs.rank(), dim = lhs.ideal_dim();
  return SystemExpr(std::make_shared<SystemNode>(rank, dim, nodes::Intersect{std::move(lhs), std::move(rhs)}));
}

SystemExpr SystemExpr::truncate(SystemExpr inner, ConeRep semigroup) {
  check_rank(inner.rank(), semigroup.rank());
  const std::size_t rank = inner.rank(), dim = inner.ideal_dim();
  return SystemExpr(
      std::make_shared<SystemNode>(rank, dim, nodes::Truncate{std::move(inner), std::move(semigroup)}));
}

SystemExpr SystemExpr::colon(SystemExpr inner, MonomialIdeal ideal) {
  check_dim(inner.ideal_dim(), ideal.dim());
  if (ideal.is_zero()) throw Error(Errc::ZeroDivisorIdeal, "colon by the zero ideal");
  const std::size_t rank = inner.rank() + 1, dim = inner.ideal_dim();
  return SystemExpr(std::make_shared<SystemNode>(rank, dim, nodes::Colon{std::move(inner), std::move(ideal)}));
}

std::size_t SystemExpr::rank() const noexcept { return node_->rank; }
std::size_t SystemExpr::ideal_dim() const noexcept { return node_->dim; }

MonomialIdeal SystemExpr::eval(const IndexVector& v) const {
  check_rank(rank(), v.size());
  const bool cached = g_cache_enabled.load(std::memory_order_relaxed);
  if (cached) {
    MonomialIdeal hit = MonomialIdeal::zero(node_->dim);
    if (node_->cache.lookup(v, hit)) return hit;
  }
  auto value = eval_node(*node_, v);
  if (cached) node_->cache.insert(v, value);
  return value;
}

DirectionView::DirectionView(SystemExpr sys, IndexVector direction)
    : sys_(std::move(sys)), direction_(std::move(direction)) {
  check_rank(sys_.rank(), direction_.size());
  if (std::all_of(direction_.begin(), direction_.end(), [](auto x) { return x == 0; })) {
    throw Error(Errc::ZeroDirection, "direction must be nonzero");
  }
}

MonomialIdeal DirectionView::eval(std::int64_t n) const {
  IndexVector w = direction_;
  for (auto& x : w) x *= n;
  return sys_.eval(w);
}

DirectionView restrict_direction(const SystemExpr& sys, const IndexVector& v) { return DirectionView(sys, v); }

namespace {

Region ideal_body(const MonomialIdeal& a) {
  if (a.is_zero()) throw Error(Errc::ZeroIdealInDirection, "zero ideal along the direction");
  return Region(newton_polyhedron(a), Region::Provenance::Newton);
}

Region scaled_or_orthant(const Region& body, const Rational& t) {
  if (t <= 0) return orthant_region(body.dim());
  return region_scale(body, t);
}

Region body_of(const SystemExpr& sys, const IndexVector& v) {
  const auto& node = sys.node();
  return std::visit(
      Overloaded{
          [&](const nodes::IdealPowers& n) {
            auto acc = orthant_region(node.dim);
            for (std::size_t i = 0; i < n.ideals.size(); ++i) {
              if (v[i] > 0) acc = region_minkowski(acc, region_scale(ideal_body(n.ideals[i]), make_rational(v[i])));
            }
            return acc;
          },
          [&](const nodes::RegionSystem& n) { return scaled_or_orthant(n.region, make_rational(v[0])); },
          [&](const nodes::Ceiling& n) {
            RationalVector x;
            for (std::size_t i = 0; i + 1 < v.size(); ++i) x.emplace_back(make_rational(v[i]));
            const Rational t = n.cone.epigraph_value(x) - make_rational(v.back());
            if (t <= 0) return orthant_region(node.dim);
            return region_scale(ideal_body(n.base), t);
          },
          [&](const nodes::Pullback& n) { return body_of(n.inner, apply(n.matrix, v)); },
          [&](const nodes::Product& n) { return region_minkowski(body_of(n.lhs, v), body_of(n.rhs, v)); },
          [&](const nodes::Intersect& n) { return region_intersect(body_of(n.lhs, v), body_of(n.rhs, v)); },
          [&](const nodes::Truncate& n) -> Region {
            if (!cone_contains(n.semigroup, v)) {
              throw Error(Errc::ZeroIdealInDirection, "direction lies outside the truncation semigroup");
            }
            return body_of(n.inner, v);
          },
          [&](const nodes::Colon&) -> Region {
            throw Error(Errc::NotRegionExpressible, "colon systems have no closed-form limit body");
          },
      },
      node.kind);
}

}  // namespace

Region limit_body(const SystemExpr& sys, const IndexVector& v) {
  check_rank(sys.rank(), v.size());
  return body_of(sys, v);
}

Region limit_body(const DirectionView& view) { return limit_body(view.system(), view.direction()); }

Region limit_body(const SystemExpr& sys, const RationalVector& v) {
  check_rank(sys.rank(), v.size());
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
  IndexVector w;
  for (const auto& x : v) w.push_back(to_int64(Integer(Rational(x * den).get_num())));
  const Region body = body_of(sys, w);
  if (den == 1) return body;
  return region_scale(body, Rational(1) / Rational(den));
}

IndexWindow IndexWindow::cube(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  return IndexWindow{IndexVector(rank, lo), IndexVector(rank, hi)};
}

std::vector<IndexVector> IndexWindow::points() const {
  std::vector<IndexVector> out;
  if (lo.size() != hi.size()) throw Error(Errc::RankMismatch, "window bounds differ in length");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) return out;
  }
  if (lo.empty()) return out;
  IndexVector cur = lo;
  while (true) {
    out.push_back(cur);
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (++cur[i] <= hi[i]) break;
      cur[i] = lo[i];
      if (i == 0) return out;
    }
  }
}

bool IndexWindow::contains(const IndexVector& v) const {
  if (v.size() != lo.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < lo[i] || v[i] > hi[i]) return false;
  }
  return true;
}

GradednessReport verify_gradedness(const SystemExpr& sys, const IndexWindow& window) {
  check_rank(sys.rank(), window.lo.size());
  const auto pts = window.points();
  std::vector<MonomialIdeal> values(pts.size(), MonomialIdeal::zero(sys.ideal_dim()));
  parallel_for(pts.size(), [&](std::size_t i) { values[i] = sys.eval(pts[i]); });

  // Row-major offset of an in-window point.
  auto index_of = [&](const IndexVector& v) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      idx = idx * static_cast<std::size_t>(window.hi[i] - window.lo[i] + 1) +
            static_cast<std::size_t>(v[i] - window.lo[i]);
    }
    return idx;
  };

  std::vector<std::vector<std::pair<IndexVector, IndexVector>>> found(pts.size());
  std::vector<std::size_t> counts(pts.size(), 0);
  parallel_for(pts.size(), [&](std::size_t i) {
    const auto& a = values[i];
    for (std::size_t j = 0; j < pts.size(); ++j) {
      IndexVector sum = pts[i];
      for (std::size_t d = 0; d < sum.size(); ++d) sum[d] += pts[j][d];
      if (!window.contains(sum)) continue;
      ++counts[i];
      const auto& b = values[j];
      const auto& c = values[index_of(sum)];
      if (a.is_zero() || b.is_zero() || c.is_unit()) continue;
      if (!product_contained_in(a, b, c)) found[i].emplace_back(pts[i], pts[j]);
    }
  });

  GradednessReport report;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    report.pairs_checked += counts[i];
    for (auto& p : found[i]) report.violations.push_back(std::move(p));
  }
  return report;
}

std::string to_string(const IndexVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace msi
