#include "msi_cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "msi/cones.hpp"
#include "msi/constructions.hpp"
#include "msi/error.hpp"
#include "msi/graded_system.hpp"
#include "msi/invariants.hpp"
#include "msi/monomial_ideal.hpp"
#include "msi/newton_geometry.hpp"
#include "msi/parallel.hpp"
#include "msi/regions.hpp"
#include "msi/text_format.hpp"

namespace msi::cli {

namespace {

std::string qd(const Rational& q) { return to_string(q) + " (" + to_decimal(q) + ")"; }

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Appends the exact value and its decimal echo as two columns.
  static void put(std::vector<std::string>& row, const Rational& q) {
    row.push_back(to_string(q));
    row.push_back(to_decimal(q));
  }
};

void write_csv(const std::filesystem::path& path, const Csv& csv) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(Errc::InvalidArgument, "cannot write " + tmp.string());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
      os << '\n';
    };
    line(csv.header);
    for (const auto& r : csv.rows) line(r);
    if (!os) throw Error(Errc::InvalidArgument, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::filesystem::path sibling(const std::string& out, const std::string& suffix) {
  std::filesystem::path p(out);
  auto stem = p.stem().string();
  return p.parent_path() / (stem + suffix + p.extension().string());
}

void rational_columns(std::vector<std::string>& header, const std::string& name) {
  header.push_back(name);
  header.push_back(name + "_decimal");
}

std::string join(const std::vector<IndexVector>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + to_string(pts[i]);
  return s;
}

RationalVector to_rational(const IndexVector& v) {
  RationalVector out;
  for (auto x : v) out.push_back(make_rational(x));
  return out;
}

void print_hull(std::ostream& out, const std::string& label, const std::vector<IndexVector>& pts, std::size_t rank) {
  if (rank > 3) {
    out << label << " hull: rank above 3, not computed\n";
    return;
  }
  if (pts.empty()) {
    out << label << " hull: empty\n";
    return;
  }
  const auto hull = ray_hull(pts, rank);
  if (hull.full_space) {
    out << label << " hull: full space\n";
    return;
  }
  if (hull.rays.empty()) {
    out << label << " hull: contains a line\n";
  } else {
    out << label << " hull rays: " << join(hull.rays) << '\n';
  }
  out << label << " hull normals: " << join(hull.normals) << '\n';
}

// ---------------------------------------------------------------- ideal info

int cmd_ideal_info(const std::string& path, std::ostream& out) {
  const auto a = load_ideal(path);
  out << "ideal " << to_string(a) << '\n';
  out << "k " << a.dim() << '\n';
  out << "generators " << a.generators().size() << '\n';
  if (a.is_zero()) {
    out << "zero ideal: invariants undefined\n";
    return kSuccess;
  }
  out << "ord0 " << qd(order(a)) << '\n';
  out << "arn " << qd(arn(a)) << '\n';
  if (auto l = lct(a)) {
    out << "lct " << qd(*l) << '\n';
  } else {
    out << "lct inf\n";
  }
  if (is_cofinite(a)) {
    out << "mult " << qd(multiplicity(a)) << '\n';
    out << "colength " << colength(a) << '\n';
  } else {
    out << "mult not-cofinite\n";
    out << "colength inf\n";
  }
  out << "newton polyhedron\n";
  std::istringstream lines(format_polyhedron(newton_polyhedron(a)));
  for (std::string l; std::getline(lines, l);) out << "  " << l << '\n';
  return kSuccess;
}

// ------------------------------------------------------------------ system

int cmd_system_eval(const std::string& path, const std::string& direction, std::ostream& out) {
  const auto sys = load_system(path);
  const auto v = parse_index_vector(direction);
  const auto a = sys.eval(v);
  out << "a" << to_string(v) << " = " << to_string(a) << '\n';
  out << "generators " << a.generators().size() << '\n';
  return kSuccess;
}

struct InvariantOptions {
  std::string direction;
  std::string method = "both";
  std::string schedule = "factorial";
  int max = -1;
  std::string quantity = "all";
  std::string out;
};

Schedule make_schedule(const std::string& kind, int max) {
  if (kind == "factorial") return Schedule::factorial(max < 0 ? 6 : max);
  if (kind == "doubling") return Schedule::doubling(max < 0 ? 10 : max);
  throw Error(Errc::InvalidArgument, "unknown schedule '" + kind + "'");
}

std::vector<Quantity> make_quantities(const std::string& q) {
  if (q == "all") return {Quantity::Ord0, Quantity::Arn, Quantity::Mult};
  if (q == "ord0") return {Quantity::Ord0};
  if (q == "arn") return {Quantity::Arn};
  if (q == "mult") return {Quantity::Mult};
  throw Error(Errc::InvalidArgument, "unknown quantity '" + q + "'");
}

int cmd_system_invariants(const std::string& path, const InvariantOptions& opt, std::ostream& out) {
  const auto sys = load_system(path);
  const auto v = parse_index_vector(opt.direction);
  if (opt.method != "sequence" && opt.method != "geometric" && opt.method != "both") {
    throw Error(Errc::InvalidArgument, "method must be sequence, geometric or both");
  }
  const auto schedule = make_schedule(opt.schedule, opt.max);
  const auto quantities = make_quantities(opt.quantity);
  bool ok = true;

  Csv csv;
  csv.header = {"quantity", "n"};
  rational_columns(csv.header, "value");

  out << "direction " << to_string(v) << '\n';
  if (opt.method == "geometric") {
    const auto t = asymptotic_invariants(sys, to_rational(v));
    for (auto q : quantities) {
      std::optional<Rational> value = q == Quantity::Ord0 ? t.ord0 : q == Quantity::Arn ? t.arn : t.mult;
      out << quantity_name(q) << " geometric " << (value ? qd(*value) : std::string("unbounded-complement")) << '\n';
      if (value) {
        std::vector<std::string> row{std::string(quantity_name(q)), "inf"};
        Csv::put(row, *value);
        csv.rows.push_back(std::move(row));
      }
    }
  } else {
    out << "schedule " << opt.schedule << " max " << schedule.max << '\n';
    for (auto q : quantities) {
      InvariantBracket b;
      try {
        b = sequence_invariant(sys, v, q, schedule);
      } catch (const Error& e) {
        if (q == Quantity::Mult && e.code() == Errc::NotCofinite) {
          out << "mult not-cofinite\n";
          continue;
        }
        throw;
      }
      out << quantity_name(q) << '\n';
      for (const auto& [n, value] : b.samples) {
        out << "  n=" << n << " " << qd(value) << '\n';
        std::vector<std::string> row{std::string(quantity_name(q)), std::to_string(n)};
        Csv::put(row, value);
        csv.rows.push_back(std::move(row));
      }
      out << "  monotone " << (b.monotone ? "yes" : "no") << '\n';
      if (!b.monotone) ok = false;
      if (opt.method == "both") {
        if (b.geometric) {
          out << "  geometric " << qd(*b.geometric) << '\n';
          out << "  certified " << (b.certified ? "yes" : "no") << '\n';
          if (!b.certified) ok = false;
        } else {
          out << "  geometric unavailable\n";
        }
      }
    }
  }
  if (!opt.out.empty()) write_csv(opt.out, csv);
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_system_cones(const std::string& path, std::int64_t radius, const std::string& expect, const std::string& csv_out,
                     std::ostream& out) {
  if (radius < 1) throw Error(Errc::InvalidArgument, "radius must be at least 1");
  const auto sys = load_system(path);
  const auto nef = nef_points(sys, radius);
  const auto eff = eff_points(sys, radius);
  const std::size_t rank = sys.rank();
  out << "rank " << rank << " radius " << radius << '\n';
  out << "nef points " << nef.size() << '\n';
  print_hull(out, "nef", nef, rank);
  out << "eff points " << eff.size() << '\n';
  print_hull(out, "eff", eff, rank);

  bool ok = true;
  if (!expect.empty()) {
    const auto cone = load_cone(expect);
    if (cone.rank() != rank) throw Error(Errc::RankMismatch, "expected cone rank differs from system rank");
    std::size_t disagreements = 0;
    const auto box = IndexWindow::cube(rank, -radius, radius).points();
    std::size_t j = 0;
    for (const auto& p : box) {
      const bool is_nef = j < nef.size() && nef[j] == p;
      if (is_nef) ++j;
      if (is_nef != cone_contains(cone, p)) ++disagreements;
    }
    out << "nef vs expected: " << box.size() << " lattice points, " << disagreements << " disagreements\n";
    if (disagreements != 0) ok = false;
  }

  if (!csv_out.empty()) {
    Csv csv;
    csv.header = {"set"};
    for (std::size_t i = 0; i < rank; ++i) csv.header.push_back("v" + std::to_string(i + 1));
    for (const auto& [name, pts] : {std::pair{"nef", &nef}, std::pair{"eff", &eff}}) {
      for (const auto& p : *pts) {
        std::vector<std::string> row{name};
        for (auto x : p) row.push_back(std::to_string(x));
        csv.rows.push_back(std::move(row));
      }
    }
    write_csv(csv_out, csv);
  }
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_system_verify(const std::string& path, const std::vector<std::int64_t>& window, std::int64_t radius,
                      std::ostream& out) {
  const auto sys = load_system(path);
  IndexWindow w;
  if (!window.empty()) {
    if (window.size() != 2 || window[0] > window[1]) throw Error(Errc::InvalidArgument, "window needs LO <= HI");
    w = IndexWindow::cube(sys.rank(), window[0], window[1]);
  } else {
    w = IndexWindow::cube(sys.rank(), -radius, radius);
  }
  const auto report = verify_gradedness(sys, w);
  out << "window " << to_string(w.lo) << " .. " << to_string(w.hi) << '\n';
  out << "pairs checked " << report.pairs_checked << '\n';
  out << "violations " << report.violations.size() << '\n';
  for (std::size_t i = 0; i < std::min<std::size_t>(report.violations.size(), 20); ++i) {
    out << "  " << to_string(report.violations[i].first) << " + " << to_string(report.violations[i].second) << '\n';
  }
  return report.ok() ? kSuccess : kVerificationFailure;
}

// ------------------------------------------------------------------- repro

int cmd_repro_thm1(const std::string& cone_path, std::int64_t radius, int max_l, const std::string& csv_out,
                   std::ostream& out) {
  const ConeRep cone = cone_path.empty() ? abs_value_cone() : load_cone(cone_path);
  if (!cone.is_epigraph()) throw Error(Errc::InvalidArgument, "ceiling systems need a cone given by forms");
  if (radius < 1) throw Error(Errc::InvalidArgument, "radius must be at least 1");
  const auto sys = ceiling_system(cone);
  const std::size_t rank = sys.rank();
  bool ok = true;

  out << "ceiling system over\n";
  std::istringstream lines(format_cone(cone));
  for (std::string l; std::getline(lines, l);) out << "  " << l << '\n';

  const auto nef = nef_points(sys, radius);
  const auto box = IndexWindow::cube(rank, -radius, radius).points();
  std::size_t disagreements = 0, j = 0;
  for (const auto& p : box) {
    const bool is_nef = j < nef.size() && nef[j] == p;
    if (is_nef) ++j;
    if (is_nef != cone_contains(cone, p)) ++disagreements;
  }
  out << "nef lattice agreement radius " << radius << ": " << box.size() << " points, " << disagreements
      << " disagreements\n";
  if (disagreements != 0) ok = false;
  if (rank <= 3 && !nef.empty()) {
    print_hull(out, "nef", nef, rank);
    const auto hull = ray_hull(nef, rank);
    const auto cmp = cone_compare(hull.as_halfspaces(), cone, 256, radius);
    out << "nef hull vs cone: " << cmp.disagreements.size() << " of " << cmp.samples << " sample directions, "
        << cmp.lattice_disagreements.size() << " of " << cmp.lattice_points << " lattice points disagree\n";
  }

  const auto schedule = Schedule::factorial(max_l);
  std::vector<IndexVector> dirs;
  for (const auto& p : IndexWindow::cube(rank, -2, 2).points()) {
    if (std::any_of(p.begin(), p.end(), [](auto x) { return x != 0; })) dirs.push_back(p);
  }
  struct Row {
    InvariantTriple seq, closed;
    bool match = false;
  };
  std::vector<Row> rows(dirs.size());
  parallel_for(dirs.size(), [&](std::size_t i) {
    Row& r = rows[i];
    r.closed = ceiling_closed_forms(cone, to_rational(dirs[i]));
    r.seq.ord0 = sequence_invariant(sys, dirs[i], Quantity::Ord0, schedule).samples.back().second;
    r.seq.arn = sequence_invariant(sys, dirs[i], Quantity::Arn, schedule).samples.back().second;
    r.seq.mult = sequence_invariant(sys, dirs[i], Quantity::Mult, schedule).samples.back().second;
    r.match = r.seq.ord0 == r.closed.ord0 && r.seq.arn == r.closed.arn && r.seq.mult == r.closed.mult;
  });
  const auto mismatches = std::count_if(rows.begin(), rows.end(), [](const Row& r) { return !r.match; });
  out << "closed forms vs sequence (factorial L<=" << max_l << ") at " << dirs.size() << " directions: " << mismatches
      << " mismatches\n";
  if (mismatches != 0) ok = false;
  if (rank == 3) {
    const IndexVector probe{1, 2, 0};
    const auto t = ceiling_closed_forms(cone, to_rational(probe));
    out << "at " << to_string(probe) << ": ord0 " << qd(t.ord0) << ", arn " << qd(t.arn) << ", mult " << qd(*t.mult)
        << '\n';
  }

  if (!csv_out.empty()) {
    Csv csv;
    for (std::size_t i = 0; i + 1 < rank; ++i) csv.header.push_back("x" + std::to_string(i + 1));
    csv.header.push_back("y");
    for (const char* name : {"ord0", "arn", "mult", "closed_ord0", "closed_arn", "closed_mult"}) {
      rational_columns(csv.header, name);
    }
    csv.header.push_back("match");
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      std::vector<std::string> row;
      for (auto x : dirs[i]) row.push_back(std::to_string(x));
      for (const auto* t : {&rows[i].seq, &rows[i].closed}) {
        Csv::put(row, t->ord0);
        Csv::put(row, t->arn);
        Csv::put(row, *t->mult);
      }
      row.push_back(rows[i].match ? "1" : "0");
      csv.rows.push_back(std::move(row));
    }
    write_csv(csv_out, csv);
  }
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kSuccess : kVerificationFailure;
}

struct KinkedReproOptions {
  int kinks = 1;
  std::vector<std::string> grid{"3/4", "3/2", "3/4", "3/2", "12"};
  std::vector<std::string> scan{"1", "1/2", "2"};
  std::int64_t radius = 6;
  std::string truncate;
  std::string out;
};

std::vector<Rational> steps_between(const Rational& lo, const Rational& hi, std::int64_t steps) {
  if (steps < 1) throw Error(Errc::InvalidArgument, "grid steps must be positive");
  if (hi < lo) throw Error(Errc::InvalidArgument, "grid bounds out of order");
  std::vector<Rational> out;
  for (std::int64_t i = 0; i <= steps; ++i) out.push_back(lo + (hi - lo) * make_rational(i, steps));
  return out;
}

int cmd_repro_thm2(const KinkedReproOptions& opt, std::ostream& out) {
  if (opt.kinks < 0) throw Error(Errc::InvalidArgument, "kink count must be nonnegative");
  if (opt.grid.size() != 5) throw Error(Errc::InvalidArgument, "--grid takes rmin rmax smin smax steps");
  if (opt.scan.size() != 3) throw Error(Errc::InvalidArgument, "--scan takes r smin smax");
  const Rational rmin = parse_rational(opt.grid[0]), rmax = parse_rational(opt.grid[1]);
  const Rational smin = parse_rational(opt.grid[2]), smax = parse_rational(opt.grid[3]);
  const std::int64_t steps = std::stoll(opt.grid[4]);
  if (rmin <= 0 || smin <= 0) throw Error(Errc::InvalidArgument, "grid must lie in r, s > 0");
  const Rational scan_r = parse_rational(opt.scan[0]);
  const Rational scan_lo = parse_rational(opt.scan[1]), scan_hi = parse_rational(opt.scan[2]);
  if (scan_r <= 0 || scan_lo <= 0 || !(scan_lo < scan_hi)) throw Error(Errc::InvalidArgument, "bad scan interval");

  SystemExpr sys = kinked_intersection_system(opt.kinks);
  std::optional<ConeRep> semigroup;
  if (!opt.truncate.empty()) {
    semigroup = slope_semigroup(parse_rational(opt.truncate));
    sys = SystemExpr::truncate(sys, *semigroup);
  }
  bool ok = true;
  out << "kinked intersection system, kinks " << opt.kinks << '\n';
  if (semigroup) out << "truncated to s >= " << opt.truncate << " r\n";

  // ord0 grid by three routes.
  const auto rs = steps_between(rmin, rmax, steps);
  const auto ss = steps_between(smin, smax, steps);
  struct Cell {
    Rational r, s;
    KinkedOrd0 k;
    std::optional<Rational> system_route;
    bool agree = false;
  };
  std::vector<Cell> cells;
  for (const auto& r : rs)
    for (const auto& s : ss) cells.push_back(Cell{r, s, {}, std::nullopt, false});
  parallel_for(cells.size(), [&](std::size_t i) {
    Cell& c = cells[i];
    c.k = kinked_ord0(c.r, c.s, opt.kinks);
    if (!semigroup || cone_contains(*semigroup, RationalVector{c.r, c.s})) {
      c.system_route = asymptotic_ord0(sys, {c.r, c.s});
    }
    c.agree = c.k.agree() && (!c.system_route || *c.system_route == c.k.vertex_route);
  });
  const auto agree = std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.agree; });
  out << "ord0 grid " << rs.size() << "x" << ss.size() << ": routes agree at " << agree << " of " << cells.size()
      << " cells\n";
  if (static_cast<std::size_t>(agree) != cells.size()) ok = false;

  // Kink scan.
  const auto kinks = ord0_kink_table(sys, scan_r, scan_lo, scan_hi);
  out << "kink scan r=" << to_string(scan_r) << ", s in (" << to_string(scan_lo) << ", " << to_string(scan_hi)
      << "): " << kinks.size() << " kink(s)\n";
  for (const auto& k : kinks) {
    out << "  s0=" << qd(k.s0) << " left=" << to_string(k.left) << " right=" << to_string(k.right)
        << " gap=" << qd(k.gap) << (k.stable ? "" : " unstable") << '\n';
    if (k.gap == 0 || !k.stable) ok = false;
  }

  // Cone estimates.
  const auto nef = nef_points(sys, opt.radius);
  ConeRep expected_nef = nonpositive_orthant(2);
  std::size_t nef_bad = 0, j = 0;
  const auto box = IndexWindow::cube(2, -opt.radius, opt.radius).points();
  for (const auto& p : box) {
    const bool is_nef = j < nef.size() && nef[j] == p;
    if (is_nef) ++j;
    bool expect = cone_contains(expected_nef, p);
    if (semigroup) expect = expect && cone_contains(*semigroup, p);
    if (is_nef != expect) ++nef_bad;
  }
  out << "nef radius " << opt.radius << ": " << nef.size() << " points, " << nef_bad << " disagreements with "
      << (semigroup ? "the nonpositive quadrant within S" : "the nonpositive quadrant") << '\n';
  if (nef_bad != 0) ok = false;
  if (semigroup) {
    const auto eff = eff_points(sys, opt.radius);
    const auto outside =
        std::count_if(eff.begin(), eff.end(), [&](const IndexVector& p) { return !cone_contains(*semigroup, p); });
    out << "eff radius " << opt.radius << ": " << eff.size() << " points, " << outside << " outside S\n";
    if (outside != 0) ok = false;
  }

  if (!opt.out.empty()) {
    Csv grid;
    for (const char* name : {"r", "s", "ord0", "formula", "crossing"}) rational_columns(grid.header, name);
    grid.header.push_back("agree");
    for (const auto& c : cells) {
      std::vector<std::string> row;
      Csv::put(row, c.r);
      Csv::put(row, c.s);
      Csv::put(row, c.k.vertex_route);
      Csv::put(row, c.k.formula_route);
      Csv::put(row, c.k.crossing);
      row.push_back(c.agree ? "1" : "0");
      grid.rows.push_back(std::move(row));
    }
    Csv table;
    for (const char* name : {"s0", "left", "right", "gap"}) rational_columns(table.header, name);
    for (const auto& k : kinks) {
      std::vector<std::string> row;
      Csv::put(row, k.s0);
      Csv::put(row, k.left);
      Csv::put(row, k.right);
      Csv::put(row, k.gap);
      table.rows.push_back(std::move(row));
    }
    write_csv(opt.out, grid);
    write_csv(sibling(opt.out, "_kinks"), table);
  }
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_repro_appendix(int kinks, int samples, const std::string& csv_out, std::ostream& out) {
  if (kinks < 1) throw Error(Errc::InvalidArgument, "kink count must be at least 1");
  if (samples < 1) throw Error(Errc::InvalidArgument, "sample count must be at least 1");
  const auto body = dense_kink_body(kinks);
  bool ok = true;
  out << "dense-kink body, terms " << kinks << '\n';
  out << "gauge(1, 0) = " << qd(gauge(body, {Rational(1), Rational(0)})) << '\n';
  out << "gauge(0, 1) = " << qd(gauge(body, {Rational(0), Rational(1)})) << '\n';

  const auto hom = halton_directions(3, static_cast<std::size_t>(samples));
  std::size_t hom_ok = 0;
  for (const auto& h : hom) {
    const Point p{h[0], h[1]};
    const Rational lambda = (h[2] + 1) * 2;
    const Point lp{Rational(lambda * p[0]), Rational(lambda * p[1])};
    if (gauge(body, lp) == lambda * gauge(body, p)) ++hom_ok;
  }
  out << "positive homogeneity exact at " << hom_ok << " of " << hom.size() << " samples\n";
  if (hom_ok != hom.size()) ok = false;

  const auto pairs = halton_directions(4, static_cast<std::size_t>(samples));
  std::size_t conv_ok = 0;
  for (const auto& h : pairs) {
    const Point p{h[0], h[1]}, q{h[2], h[3]};
    const Point mid{Rational((p[0] + q[0]) / 2), Rational((p[1] + q[1]) / 2)};
    if (2 * gauge(body, mid) <= gauge(body, p) + gauge(body, q)) ++conv_ok;
  }
  out << "midpoint convexity exact at " << conv_ok << " of " << pairs.size() << " pairs\n";
  if (conv_ok != pairs.size()) ok = false;

  const auto table = gauge_kink_table(body);
  out << "kink points " << table.size() << '\n';
  for (const auto& k : table) {
    out << "  " << to_string(k.point) << " left=" << to_string(k.slopes.left) << " right=" << to_string(k.slopes.right)
        << " gap=" << qd(k.slopes.gap) << (k.slopes.stable ? "" : " unstable") << '\n';
    if (k.slopes.gap == 0 || !k.slopes.stable) ok = false;
  }
  if (table.size() != static_cast<std::size_t>(kinks)) ok = false;

  if (!csv_out.empty()) {
    Csv csv;
    for (const char* name : {"x", "y", "left", "right", "gap"}) rational_columns(csv.header, name);
    for (const auto& k : table) {
      std::vector<std::string> row;
      Csv::put(row, k.point[0]);
      Csv::put(row, k.point[1]);
      Csv::put(row, k.slopes.left);
      Csv::put(row, k.slopes.right);
      Csv::put(row, k.slopes.gap);
      csv.rows.push_back(std::move(row));
    }
    write_csv(csv_out, csv);
  }
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of multigraded systems of monomial ideals", "msi"};
  app.require_subcommand(1);
  bool single_thread = false;
  app.add_flag("--single-thread", single_thread, "Evaluate on one thread");

  std::function<int()> action;

  auto* ideal = app.add_subcommand("ideal", "Single monomial ideals")->require_subcommand(1);
  std::string ideal_path;
  auto* info = ideal->add_subcommand("info", "Invariants and Newton polyhedron of an ideal file");
  info->add_option("path", ideal_path, "Ideal file")->required();
  info->callback([&] { action = [&] { return cmd_ideal_info(ideal_path, out); }; });

  auto* system = app.add_subcommand("system", "Graded systems given by expression files")->require_subcommand(1);
  std::string sys_path, direction, expect, csv_out;
  std::int64_t radius = 3;
  std::vector<std::int64_t> window;
  InvariantOptions inv;

  auto* eval = system->add_subcommand("eval", "Evaluate the system at an index vector");
  eval->add_option("path", sys_path, "System file")->required();
  eval->add_option("--direction,direction", direction, "Index vector, e.g. 2,2")->required();
  eval->callback([&] { action = [&] { return cmd_system_eval(sys_path, direction, out); }; });

  auto* invariants = system->add_subcommand("invariants", "Asymptotic invariants along a direction");
  invariants->add_option("path", sys_path, "System file")->required();
  invariants->add_option("--direction", inv.direction, "Direction, e.g. 1,1")->required();
  invariants->add_option("--method", inv.method, "sequence, geometric or both")->capture_default_str();
  invariants->add_option("--schedule", inv.schedule, "factorial or doubling")->capture_default_str();
  invariants->add_option("--max", inv.max, "Largest L (factorial) or J (doubling)");
  invariants->add_option("--quantity", inv.quantity, "ord0, arn, mult or all")->capture_default_str();
  invariants->add_option("--out", inv.out, "CSV output path");
  invariants->callback([&] { action = [&] { return cmd_system_invariants(sys_path, inv, out); }; });

  auto* cones = system->add_subcommand("cones", "Nef and effective lattice points within a radius");
  cones->add_option("path", sys_path, "System file")->required();
  cones->add_option("--radius,radius", radius, "Box radius")->capture_default_str();
  cones->add_option("--expect", expect, "Cone file the nef points should match");
  cones->add_option("--out", csv_out, "CSV output path");
  cones->callback([&] { action = [&] { return cmd_system_cones(sys_path, radius, expect, csv_out, out); }; });

  auto* verify = system->add_subcommand("verify", "Check gradedness on a window");
  verify->add_option("path", sys_path, "System file")->required();
  verify->add_option("--window", window, "LO HI bounds of a cube window")->expected(2);
  verify->add_option("--radius", radius, "Cube window [-R, R] when --window is absent")->capture_default_str();
  verify->callback([&] { action = [&] { return cmd_system_verify(sys_path, window, radius, out); }; });

  auto* repro = app.add_subcommand("repro", "Check the constructions with prescribed nef cones and kinked invariants")->require_subcommand(1);
  std::string cone_path;
  int max_l = 3;
  std::int64_t thm1_radius = 4;
  auto* thm1 = repro->add_subcommand("thm1", "Ceiling system whose nef cone is a prescribed cone");
  thm1->add_option("--cone", cone_path, "Cone file with form lines (default {y >= |x1| + |x2|})");
  thm1->add_option("--radius", thm1_radius, "Lattice box radius")->capture_default_str();
  thm1->add_option("--max", max_l, "Largest L of the factorial schedule")->capture_default_str();
  thm1->add_option("--out", csv_out, "CSV output path");
  thm1->callback([&] { action = [&] { return cmd_repro_thm1(cone_path, thm1_radius, max_l, csv_out, out); }; });

  KinkedReproOptions t2;
  auto* thm2 = repro->add_subcommand("thm2", "Kinked intersection system with non-differentiable ord0");
  thm2->add_option("--kinks", t2.kinks, "Number of kink terms")->capture_default_str();
  thm2->add_option("--grid", t2.grid, "rmin rmax smin smax steps")->expected(5);
  thm2->add_option("--scan", t2.scan, "r smin smax of the kink scan")->expected(3);
  thm2->add_option("--radius", t2.radius, "Lattice box radius for cone estimates")->capture_default_str();
  thm2->add_option("--truncate", t2.truncate, "Truncate to s >= eps r");
  thm2->add_option("--out", t2.out, "CSV output path; kinks go to <stem>_kinks.csv");
  thm2->callback([&] { action = [&] { return cmd_repro_thm2(t2, out); }; });

  int app_kinks = 1, app_samples = 50;
  auto* appendix = repro->add_subcommand("appendix", "Convex gauge with a dense set of kinks");
  appendix->add_option("--kinks", app_kinks, "Number of boundary terms")->capture_default_str();
  appendix->add_option("--samples", app_samples, "Homogeneity and convexity samples")->capture_default_str();
  appendix->add_option("--out", csv_out, "CSV output path");
  appendix->callback([&] { action = [&] { return cmd_repro_appendix(app_kinks, app_samples, csv_out, out); }; });

  std::vector<const char*> argv{"msi"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  set_thread_count(single_thread ? 1 : 0);
  try {
    return action ? action() : kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace msi::cli
