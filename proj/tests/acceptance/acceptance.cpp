// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "msi/constructions.hpp"
#include "msi/invariants.hpp"
#include "msi/parallel.hpp"
#include "msi_cli/cli.hpp"
#include "oracles.hpp"

using namespace msi;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> body;
};

Rational lcm_of_denominators(const Point& p) {
  Integer d = 1;
  for (const auto& x : p) d = lcm(d, Integer(x.get_den()));
  return Rational(d);
}

// ---------------------------------------------------------------------------

Outcome single_ideal() {
  Outcome o;
  const auto a = minimalize({{2, 0}, {0, 3}}, 2);
  o.require(order(a) == 2, "ord0 " + to_string(order(a)));
  o.require(arn(a) == q(6, 5), "arn " + to_string(arn(a)));
  o.require(multiplicity(a) == 6, "mult " + to_string(multiplicity(a)));
  const std::int64_t n = 16;
  const auto an = power(a, n);
  // Box enumeration, independent of the staircase colength routine.
  const std::int64_t len = oracle::colength(an.generators(), 2, 3 * n);
  o.require(len == colength(an), "colength routines disagree");
  const double approx = 2.0 * static_cast<double>(len) / static_cast<double>(n * n);
  o.require(std::abs(approx - 6.0) <= 0.15 * 6.0, "colength estimate " + std::to_string(approx));
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("2!*colength/n^2 at n=16: ") + std::to_string(approx);
  return o;
}

Outcome corner_two_routes() {
  Outcome o;
  // Vertex (2/3, 2/3) gives ord0 = 4/3 and arn = 2/3; the complement is the
  // quadrilateral (0,0), (2,0), (2/3,2/3), (0,2).
  const Rational area = oracle::shoelace({{q(0), q(0)}, {q(2), q(0)}, {q(2, 3), q(2, 3)}, {q(0), q(2)}});
  const Rational want_ord0 = q(2, 3) + q(2, 3);
  const Rational want_arn = q(2, 3);
  const Rational want_mult = 2 * area;
  o.require(want_mult == q(8, 3), "shoelace derivation");

  const auto sys = SystemExpr::region_system(corner_region());
  const auto triple = geometric_invariants(limit_body(sys, IndexVector{1}));
  o.require(triple.ord0 == want_ord0, "geometric ord0 " + to_string(triple.ord0));
  o.require(triple.arn == want_arn, "geometric arn " + to_string(triple.arn));
  o.require(triple.mult && *triple.mult == want_mult, "geometric mult");

  const std::vector<std::pair<Quantity, Rational>> checks{
      {Quantity::Ord0, want_ord0}, {Quantity::Arn, want_arn}, {Quantity::Mult, want_mult}};
  for (const auto& [quantity, want] : checks) {
    const auto b = sequence_invariant(sys, {1}, quantity, Schedule::factorial(6));
    const std::string name(quantity_name(quantity));
    o.require(b.monotone, name + " samples not monotone");
    o.require(b.certified, name + " not certified");
    for (const auto& [n, sample] : b.samples) {
      o.require(sample >= want, name + " sample below geometric value at n=" + std::to_string(n));
      if (n % 3 == 0) o.require(sample == want, name + " inexact at n=" + std::to_string(n));
    }
    o.require(b.samples.back().second - want <= q(1, 6), name + " final sample off by more than 1/6");
  }
  return o;
}

Outcome product_inequalities() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_ideal(rng, 6, 5, true);
    const auto b = oracle::random_ideal(rng, 6, 5, true);
    const auto ab = product(a, b);
    const std::string tag = " at pair " + std::to_string(i);
    o.require(order(ab) <= order(a) + order(b), "ord0" + tag);
    o.require(arn(ab) <= arn(a) + arn(b), "arn" + tag);
    // sqrt e(ab) <= sqrt e(a) + sqrt e(b)  <=>  D <= 0 or D^2 <= 4 e(a) e(b), D = e(ab) - e(a) - e(b).
    const Rational ea = multiplicity(a), eb = multiplicity(b), eab = multiplicity(ab);
    const Rational d = eab - ea - eb;
    o.require(d <= 0 || d * d <= 4 * ea * eb, "mult" + tag);
    ++checked;
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checked) + " pairs, exact squared mult form";
  return o;
}

Outcome region_round_trip() {
  Outcome o;
  const auto f = build_kinked_f(2);
  const Region p = epigraph_region(f);
  const auto sys = SystemExpr::region_system(p);
  const auto report = verify_gradedness(sys, IndexWindow::cube(1, 0, 10));
  o.require(report.ok(), std::to_string(report.violations.size()) + " gradedness violations");

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> den(1, 6);
  auto random_x = [&](long max_num_over_den) {
    const long d = den(rng);
    std::uniform_int_distribution<long> num(0, max_num_over_den * d);
    return q(num(rng), d);
  };

  // Interior: strictly above the graph. Membership is predicted at n = lcm of denominators.
  int interior_ok = 0;
  for (int i = 0; i < 25; ++i) {
    const Rational x = random_x(1);
    const long d = den(rng);
    std::uniform_int_distribution<long> lift(1, 2 * d);
    const Rational y = f(x) + q(lift(rng), d);
    const Point pt{x, y};
    const Rational n = lcm_of_denominators(pt);
    const std::int64_t nn = to_int64(Integer(n.get_num()));
    const auto a = sys.eval({nn});
    if (contains_point(newton_polyhedron(a), {x * n, y * n})) ++interior_ok;
  }
  o.require(interior_ok == 25, std::to_string(interior_ok) + " of 25 interior points reached");

  // Exterior: strictly below the graph, x < 1 so f(x) > 0.
  int exterior_ok = 0;
  for (int i = 0; i < 25; ++i) {
    const long d = den(rng) + 1;
    std::uniform_int_distribution<long> num(0, d - 1);
    const Rational x = q(num(rng), d);
    std::uniform_int_distribution<long> frac(0, 9);
    const Rational y = f(x) * q(frac(rng), 10);
    bool reached = false;
    for (std::int64_t n = 1; n <= 60 && !reached; ++n) {
      const Rational rn(static_cast<long>(n));
      reached = contains_point(newton_polyhedron(sys.eval({n})), {x * rn, y * rn});
    }
    if (!reached) ++exterior_ok;
  }
  o.require(exterior_ok == 25, std::to_string(exterior_ok) + " of 25 exterior points stayed out");
  return o;
}

Outcome ceiling_nef_cone() {
  Outcome o;
  const auto cone = abs_value_cone();
  const auto sys = ceiling_system(cone);
  const std::int64_t radius = 5;
  const auto nef = nef_points(sys, radius);
  const auto box = IndexWindow::cube(3, -radius, radius).points();
  std::set<IndexVector> nef_set(nef.begin(), nef.end());
  std::size_t bad = 0;
  for (const auto& v : box) {
    const bool in_c = v[2] >= std::abs(v[0]) + std::abs(v[1]);
    if (in_c != (nef_set.count(v) > 0)) ++bad;
  }
  o.require(box.size() == 1331, "box size");
  o.require(bad == 0, std::to_string(bad) + " nef disagreements");

  // 20 integral directions with t > 0 from a seeded draw.
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> coord(-3, 3);
  int directions = 0, mismatches = 0;
  while (directions < 20) {
    const IndexVector v{coord(rng), coord(rng), coord(rng)};
    const RationalVector rv{q(v[0]), q(v[1]), q(v[2])};
    const auto closed = ceiling_closed_forms(cone, rv);
    if (closed.ord0 <= 0) continue;
    ++directions;
    const std::vector<std::pair<Quantity, Rational>> want{
        {Quantity::Ord0, closed.ord0}, {Quantity::Arn, closed.arn}, {Quantity::Mult, *closed.mult}};
    for (const auto& [quantity, value] : want) {
      const auto b = sequence_invariant(sys, v, quantity, Schedule::factorial(4));
      for (const auto& [n, sample] : b.samples) {
        if (sample != value) ++mismatches;
      }
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " closed-form mismatches");
  return o;
}

std::vector<SlopeGap> kink_table(const SystemExpr& sys) { return ord0_kink_table(sys, q(1), q(3, 4), q(3, 2)); }

Outcome kinked_system() {
  Outcome o;
  const auto sys = kinked_intersection_system(1);
  int cells = 0, agree = 0;
  for (int i = 0; i <= 12; ++i)
    for (int j = 0; j <= 12; ++j) {
      const Rational r = q(3, 4) + q(i, 16);
      const Rational s = q(3, 4) + q(j, 16);
      const auto k = kinked_ord0(r, s, 1);
      const Rational system_route = asymptotic_ord0(sys, {r, s});
      // The crossing lies left of 2s on this grid, so the formula reads s + x/2.
      const Rational formula = s + k.crossing / 2;
      ++cells;
      if (k.vertex_route == system_route && k.formula_route == system_route && formula == system_route) ++agree;
    }
  o.require(agree == cells, std::to_string(agree) + " of " + std::to_string(cells) + " grid cells agree");

  // Slopes from the segments around x = 1/2 at r = 1: 2 - 2x = s - x/2 gives
  // ord0 = (2s + 2)/3, and 33/16 - 17x/8 = s - x/2 gives ord0 = (36s + 33)/52.
  const Rational left = q(2, 3), right = q(36, 52);
  const auto table = kink_table(sys);
  o.require(table.size() == 1, std::to_string(table.size()) + " kinks at r = 1");
  if (!table.empty()) {
    const auto& k = table.front();
    o.require(k.s0 == q(5, 4), "kink at " + to_string(k.s0));
    o.require(k.left == left && k.right == right, "one-sided slopes " + to_string(k.left) + ", " + to_string(k.right));
    o.require(k.left - k.right == q(-1, 39), "left minus right slope " + to_string(k.left - k.right));
    o.require(k.gap == q(1, 39), "gap " + to_string(k.gap));
  }

  const auto nef = nef_points(sys, 6);
  std::size_t bad = 0;
  std::set<IndexVector> nef_set(nef.begin(), nef.end());
  for (const auto& v : IndexWindow::cube(2, -6, 6).points()) {
    if ((v[0] <= 0 && v[1] <= 0) != (nef_set.count(v) > 0)) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " nef disagreements with the third quadrant");

  const auto four = ord0_kink_table(kinked_intersection_system(4), q(1), q(1, 2), q(2));
  std::set<Rational> xs;
  for (const auto& k : four)
    if (k.gap != 0) xs.insert(k.s0);
  o.require(xs.size() >= 4, std::to_string(xs.size()) + " kinks with nonzero gap for N = 4");
  o.detail += (o.detail.empty() ? "" : "; ") +
              std::string("slope left 2/3, right 9/13: left - right = -1/39, right - left = +1/39; N=4 kinks ") +
              std::to_string(xs.size());
  return o;
}

Outcome truncation() {
  Outcome o;
  const auto semigroup = slope_semigroup(q(1, 8));
  const auto base = kinked_intersection_system(1);
  const auto truncated = SystemExpr::truncate(base, semigroup);
  const auto before = kink_table(base);
  const auto after = kink_table(truncated);
  bool same = before.size() == after.size();
  for (std::size_t i = 0; same && i < before.size(); ++i) {
    same = before[i].s0 == after[i].s0 && before[i].left == after[i].left && before[i].right == after[i].right;
  }
  o.require(same, "kink table changed under truncation");
  const auto eff = eff_points(truncated, 8);
  std::size_t outside = 0;
  for (const auto& v : eff)
    if (!cone_contains(semigroup, v)) ++outside;
  o.require(outside == 0, std::to_string(outside) + " effective points outside S");
  o.require(!eff.empty(), "no effective points");
  return o;
}

Outcome dense_kink_gauge() {
  Outcome o;
  const auto body = dense_kink_body(1);
  o.require(gauge(body, {q(1), q(0)}) == 1, "gauge(1,0)");
  o.require(gauge(body, {q(0), q(1)}) == 2, "gauge(0,1)");

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  std::uniform_int_distribution<long> pos(1, 40);
  int hom = 0, conv = 0;
  for (int i = 0; i < 50; ++i) {
    const Point p{q(num(rng), den(rng)), q(num(rng), den(rng))};
    const Rational lambda = q(pos(rng), den(rng));
    if (gauge(body, {lambda * p[0], lambda * p[1]}) == lambda * gauge(body, p)) ++hom;
  }
  for (int i = 0; i < 50; ++i) {
    const Point p{q(num(rng), den(rng)), q(num(rng), den(rng))};
    const Point r{q(num(rng), den(rng)), q(num(rng), den(rng))};
    const Point mid{(p[0] + r[0]) / 2, (p[1] + r[1]) / 2};
    if (gauge(body, mid) <= (gauge(body, p) + gauge(body, r)) / 2) ++conv;
  }
  o.require(hom == 50, std::to_string(hom) + " of 50 homogeneity samples");
  o.require(conv == 50, std::to_string(conv) + " of 50 convexity pairs");

  // Along y = 1/2 the gauge is 1 left of the kink (top edge) and t + 1/2 right of it (edge x + y = 1).
  const auto table = gauge_kink_table(body);
  o.require(table.size() == 1, "kink count for N = 1");
  if (!table.empty()) {
    o.require(table[0].slopes.left == 0 && table[0].slopes.right == 1, "one-sided slopes at the kink");
    o.require(table[0].slopes.gap == 1, "gap " + to_string(table[0].slopes.gap));
  }
  const auto five = gauge_kink_table(dense_kink_body(5));
  std::size_t nonzero = 0;
  for (const auto& k : five)
    if (k.slopes.gap != 0) ++nonzero;
  o.require(five.size() == 5 && nonzero == 5, std::to_string(nonzero) + " of " + std::to_string(five.size()) +
                                                  " kink rays with nonzero gap for N = 5");
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome determinism() {
  Outcome o;
  const std::string data = MSI_DATA_DIR;
  const auto dir = std::filesystem::temp_directory_path() / "msi_acceptance";
  std::filesystem::create_directories(dir);
  const std::vector<std::vector<std::string>> commands{
      {"ideal", "info", data + "/ideals/x2y3.ideal"},
      {"system", "invariants", data + "/systems/corner.sys", "--direction", "1", "--method", "both", "--max", "6"},
      {"system", "verify", data + "/systems/kinked2.sys", "--window", "0", "6"},
      {"system", "cones", data + "/systems/ceiling_abs.sys", "--radius", "3", "--out", (dir / "cones.csv").string()},
      {"repro", "thm1", "--radius", "5", "--out", (dir / "thm1.csv").string()},
      {"repro", "thm2", "--kinks", "1", "--out", (dir / "thm2.csv").string()},
      {"repro", "thm2", "--kinks", "4", "--scan", "1", "1/2", "2"},
      {"repro", "thm2", "--kinks", "1", "--truncate", "1/8", "--radius", "8"},
      {"repro", "appendix", "--kinks", "5", "--out", (dir / "appendix.csv").string()},
  };
  for (const auto& cmd : commands) {
    std::string first;
    std::vector<std::string> files;
    for (int rep = 0; rep < 3; ++rep) {
      auto args = cmd;
      if (rep == 1) args.insert(args.begin(), "--single-thread");
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      set_thread_count(0);
      std::string blob = std::to_string(code) + "\n" + out.str();
      for (const auto& a : args)
        if (a.size() > 4 && a.substr(a.size() - 4) == ".csv") {
          blob += slurp(a);
          const auto kinks = std::filesystem::path(a).parent_path() /
                             (std::filesystem::path(a).stem().string() + "_kinks.csv");
          if (std::filesystem::exists(kinks)) blob += slurp(kinks);
        }
      if (rep == 0) {
        first = blob;
        if (code == cli::kInputError) o.require(false, cmd[0] + " " + cmd[1] + " failed: " + err.str());
      } else if (blob != first) {
        o.require(false, "output of '" + cmd[0] + " " + cmd[1] + "' changed on repeat " + std::to_string(rep));
      }
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(commands.size()) + " commands x 3 runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "single-ideal suite", 1.0, single_ideal},
      {2, "two-route agreement on the corner region", 10.0, corner_two_routes},
      {3, "product inequalities on 200 random pairs", 5.0, product_inequalities},
      {4, "region round trip for the kinked epigraph", 5.0, region_round_trip},
      {5, "ceiling system nef cone and closed forms", 10.0, ceiling_nef_cone},
      {6, "kinked intersection system", 30.0, kinked_system},
      {7, "truncation keeps the kink table", 5.0, truncation},
      {8, "dense-kink gauge", 5.0, dense_kink_gauge},
      {9, "determinism", 120.0, determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) o.require(false, "over the time limit");
    all = all && o.ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", secs, c.limit_s);
    std::cout << "criterion " << c.id << " " << (o.ok ? "PASS" : "FAIL") << " " << c.name << " (" << timing << ")";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
