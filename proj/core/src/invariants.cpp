#include "msi/invariants.hpp"

#include <algorithm>
#include <set>

#include "msi/error.hpp"
#include "msi/parallel.hpp"

namespace msi {

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::Ord0:
      return "ord0";
    case Quantity::Arn:
      return "arn";
    case Quantity::Mult:
      return "mult";
  }
  return "?";
}

Rational ideal_quantity(const MonomialIdeal& a, Quantity q) {
  switch (q) {
    case Quantity::Ord0:
      return order(a);
    case Quantity::Arn:
      return arn(a);
    case Quantity::Mult:
      return multiplicity(a);
  }
  throw Error(Errc::InvalidArgument, "unknown quantity");
}

Schedule Schedule::factorial(int max_l) {
  if (max_l < 1 || max_l > 7) throw Error(Errc::InvalidArgument, "factorial schedule needs 1 <= L <= 7");
  return Schedule{Kind::Factorial, max_l};
}

Schedule Schedule::doubling(int max_j) {
  if (max_j < 0 || max_j > 12) throw Error(Errc::InvalidArgument, "doubling schedule needs 0 <= J <= 12");
  return Schedule{Kind::Doubling, max_j};
}

std::vector<std::int64_t> Schedule::indices() const {
  std::vector<std::int64_t> out;
  if (kind == Kind::Factorial) {
    std::int64_t n = 1;
    for (int l = 1; l <= max; ++l) out.push_back(n *= l);
  } else {
    for (int j = 0; j <= max; ++j) out.push_back(std::int64_t{1} << j);
  }
  return out;
}

namespace {

Rational normalizer(std::int64_t n, Quantity q, std::size_t k) {
  Rational d = make_rational(n);
  if (q != Quantity::Mult) return d;
  Rational out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= d;
  return out;
}

}  // namespace

InvariantBracket sequence_invariant(const SystemExpr& sys, const IndexVector& v, Quantity q,
                                    const Schedule& schedule) {
  const auto view = restrict_direction(sys, v);
  const auto ns = schedule.indices();
  const std::size_t k = sys.ideal_dim();

  InvariantBracket out;
  out.quantity = q;
  out.direction = v;
  out.samples.resize(ns.size());
  parallel_for(ns.size(), [&](std::size_t i) {
    const auto a = view.eval(ns[i]);
    if (a.is_zero()) {
      throw Error(Errc::ZeroIdealInDirection, "zero ideal at n = " + std::to_string(ns[i]));
    }
    out.samples[i] = {ns[i], Rational(ideal_quantity(a, q) / normalizer(ns[i], q, k))};
  });
  out.upper = out.samples.back().second;
  for (std::size_t i = 1; i < out.samples.size(); ++i) {
    if (out.samples[i].second > out.samples[i - 1].second) out.monotone = false;
  }

  try {
    const auto triple = geometric_invariants(limit_body(view));
    switch (q) {
      case Quantity::Ord0:
        out.geometric = triple.ord0;
        break;
      case Quantity::Arn:
        out.geometric = triple.arn;
        break;
      case Quantity::Mult:
        out.geometric = triple.mult;
        break;
    }
  } catch (const Error& e) {
    if (e.code() != Errc::NotRegionExpressible) throw;
  }
  if (out.geometric) {
    out.certified = std::all_of(out.samples.begin(), out.samples.end(),
                                [&](const auto& s) { return *out.geometric <= s.second; });
  }
  return out;
}

InvariantTriple geometric_invariants(const Region& body) {
  const auto& poly = body.polyhedron();
  const std::size_t k = body.dim();
  InvariantTriple out;
  out.ord0 = min_weighted(poly, RationalVector(k, Rational(1)));
  out.arn = diagonal_lambda(poly);
  if (has_bounded_complement(poly)) {
    Rational fact = 1;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<unsigned long>(i);
    out.mult = fact * covolume(poly);
  }
  return out;
}

InvariantTriple asymptotic_invariants(const SystemExpr& sys, const RationalVector& v) {
  return geometric_invariants(limit_body(sys, v));
}

Rational asymptotic_ord0(const SystemExpr& sys, const RationalVector& v) {
  const auto body = limit_body(sys, v);
  return min_weighted(body.polyhedron(), RationalVector(body.dim(), Rational(1)));
}

InvariantTriple ceiling_closed_forms(const ConeRep& cone, const RationalVector& v) {
  if (v.size() != cone.rank()) throw Error(Errc::RankMismatch, "direction length differs from cone rank");
  const RationalVector x(v.begin(), v.end() - 1);
  Rational t = cone.epigraph_value(x) - v.back();
  if (t < 0) t = 0;
  return InvariantTriple{t, Rational(t / 2), Rational(t * t)};
}

KinkedOrd0 kinked_ord0(const Rational& r, const Rational& s, int n_kinks) {
  if (r <= 0 || s <= 0) throw Error(Errc::InvalidArgument, "r and s must be positive");
  const auto f = build_kinked_f(n_kinks);
  const auto g = build_g();

  KinkedOrd0 out;
  const Region body = region_intersect(region_scale(epigraph_region(f), r), region_scale(epigraph_region(g), s));
  out.vertex_route = min_weighted(body.polyhedron(), {Rational(1), Rational(1)});

  // D(x) = r f(x/r) - max(s - x/2, 0) is linear between consecutive breakpoints.
  auto upper = [&](const Rational& x) { return Rational(r * f(Rational(x / r))); };
  auto lower = [&](const Rational& x) {
    Rational y = s - x / 2;
    return y > 0 ? y : Rational(0);
  };
  auto d = [&](const Rational& x) { return Rational(upper(x) - lower(x)); };

  std::set<Rational> breaks;
  for (const auto& node : f.nodes()) breaks.insert(Rational(r * node.first));
  breaks.insert(Rational(2 * s));

  Rational prev = 0;
  Rational d_prev = d(prev);
  Rational x = 0;
  if (d_prev > 0) {
    for (const auto& b : breaks) {
      if (b <= prev) continue;
      const Rational d_b = d(b);
      if (d_b <= 0) {
        x = prev + d_prev * (b - prev) / (d_prev - d_b);
        break;
      }
      prev = b;
      d_prev = d_b;
    }
  }
  out.crossing = x;
  out.formula_route = x + lower(x);
  return out;
}

SlopeGap diff_quotient_scan(const RationalFn& fn, const Rational& s0) {
  const Rational f0 = fn(s0);
  SlopeGap out;
  out.s0 = s0;
  Rational prev_left, prev_right;
  Rational h = make_rational(1, 8);
  for (int j = 3; j <= 12; ++j, h /= 2) {
    const Rational left = (f0 - fn(Rational(s0 - h))) / h;
    const Rational right = (fn(Rational(s0 + h)) - f0) / h;
    if (j == 12) out.stable = left == prev_left && right == prev_right;
    prev_left = left;
    prev_right = right;
  }
  out.left = prev_left;
  out.right = prev_right;
  out.gap = out.right - out.left;
  return out;
}

namespace {

struct KinkSearch {
  const RationalFn& fn;
  int max_depth;
  std::set<Rational> found;

  struct Span {
    Rational slope_at_a;
    Rational slope_at_b;
  };

  Rational slope(const Rational& a, const Rational& b) { return (fn(b) - fn(a)) / (b - a); }

  // Affine on [a, b] iff the midpoint value is the chord average, by convexity.
  Span search(const Rational& a, const Rational& fa, const Rational& b, const Rational& fb, int depth) {
    const Rational m = (a + b) / 2;
    const Rational fm = fn(m);
    if (fm == (fa + fb) / 2) {
      const Rational sl = (fb - fa) / (b - a);
      return {sl, sl};
    }
    if (depth >= max_depth) {
      // Intersect the affine pieces just outside [a, b].
      const Rational w = b - a;
      const Rational sl = slope(Rational(a - w), a);
      const Rational sr = slope(b, Rational(b + w));
      if (sl != sr) {
        const Rational x = (fb - fa + sl * a - sr * b) / (sl - sr);
        if (x >= a && x <= b) found.insert(x);
      }
      return {sl, sr};
    }
    const Span left = search(a, fa, m, fm, depth + 1);
    const Span right = search(m, fm, b, fb, depth + 1);
    if (left.slope_at_b != right.slope_at_a) found.insert(m);
    return {left.slope_at_a, right.slope_at_b};
  }
};

}  // namespace

std::vector<Rational> find_kinks(const RationalFn& fn, const Rational& lo, const Rational& hi, int max_depth) {
  if (!(lo < hi)) throw Error(Errc::InvalidArgument, "empty scan interval");
  KinkSearch search{fn, max_depth, {}};
  search.search(lo, fn(lo), hi, fn(hi), 0);
  std::vector<Rational> out;
  for (const auto& x : search.found) {
    if (x > lo && x < hi) out.push_back(x);
  }
  return out;
}

std::vector<SlopeGap> ord0_kink_table(const SystemExpr& sys, const Rational& r, const Rational& lo,
                                      const Rational& hi) {
  if (sys.rank() != 2) throw Error(Errc::RankMismatch, "kink tables need a rank-2 system");
  const RationalFn fn = [&](const Rational& s) { return asymptotic_ord0(sys, {r, s}); };
  std::vector<SlopeGap> out;
  for (const auto& s0 : find_kinks(fn, lo, hi)) out.push_back(diff_quotient_scan(fn, s0));
  return out;
}

std::vector<GaugeKink> gauge_kink_table(const SymmetricBody& body) {
  std::vector<GaugeKink> out;
  for (const auto& p : body.kink_points()) {
    const Rational y = p[1];
    const RationalFn fn = [&](const Rational& t) { return gauge(body, {t, y}); };
    out.push_back(GaugeKink{p, diff_quotient_scan(fn, p[0])});
  }
  return out;
}

}  // namespace msi
