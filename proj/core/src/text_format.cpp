#include "msi/text_format.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "msi/error.hpp"

namespace msi {

namespace {

struct Line {
  int number;
  std::size_t indent;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t indent = 0;
    while (indent < raw.size() && (raw[indent] == ' ' || raw[indent] == '\t')) ++indent;
    std::istringstream is{std::string(raw)};
    Line line{number, indent, {}};
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

std::int64_t parse_int(const std::string& tok, int line) {
  std::int64_t v = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

Rational parse_q(const std::string& tok, int line) {
  try {
    return parse_rational(tok);
  } catch (const Error&) {
    fail(line, "expected a rational, got '" + tok + "'");
  }
}

// `k=<int>` or `k = <int>`.
std::optional<std::size_t> parse_k(const Line& line) {
  std::string joined;
  for (const auto& t : line.tokens) joined += t;
  if (joined.rfind("k=", 0) != 0) return std::nullopt;
  const auto k = parse_int(joined.substr(2), line.number);
  if (k < 1) fail(line.number, "k must be positive");
  return static_cast<std::size_t>(k);
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail(1, "empty ideal file");
  const auto k = parse_k(lines.front());
  if (!k) fail(lines.front().number, "expected k=<int>");
  bool zero = false;
  std::vector<ExponentVector> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() == 1 && line.tokens[0] == "zero") {
      zero = true;
      continue;
    }
    if (line.tokens.size() != *k) {
      throw Error(Errc::DimensionMismatch, "line " + std::to_string(line.number) + ": expected " +
                                               std::to_string(*k) + " exponents");
    }
    ExponentVector g;
    for (const auto& t : line.tokens) {
      const auto e = parse_int(t, line.number);
      if (e < 0) fail(line.number, "exponents must be nonnegative");
      g.push_back(e);
    }
    gens.push_back(std::move(g));
  }
  if (zero && !gens.empty()) fail(lines.front().number, "zero ideal cannot list generators");
  return minimalize(std::move(gens), *k);
}

Region parse_region(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail(1, "empty region file");
  std::size_t i = 0;
  std::optional<std::size_t> k = parse_k(lines.front());
  if (k) ++i;
  if (i >= lines.size()) fail(lines.back().number, "region has no body");

  const auto& head = lines[i];
  if (head.tokens[0] == "kinked" || head.tokens[0] == "appendix") {
    if (head.tokens.size() != 2) fail(head.number, head.tokens[0] + " takes one integer");
    const auto n = parse_int(head.tokens[1], head.number);
    if (k && *k != 2) throw Error(Errc::DimensionMismatch, "shorthand regions live in k=2");
    if (i + 1 != lines.size()) fail(lines[i + 1].number, "unexpected content after shorthand");
    if (head.tokens[0] == "appendix") {
      throw Error(Errc::InvalidArgument, "a symmetric gauge body is not an absorbing region");
    }
    if (n < 0) fail(head.number, "kink count must be nonnegative");
    return epigraph_region(build_kinked_f(static_cast<int>(n)));
  }
  if (!k) fail(head.number, "expected k=<int>");

  if (head.tokens[0] == "epigraph") {
    if (*k != 2) throw Error(Errc::DimensionMismatch, "epigraph regions live in k=2");
    std::vector<PiecewiseLinearFn::Node> nodes;
    std::vector<Rational> slopes;
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& line = lines[j];
      if (line.tokens.size() != 4 || line.tokens[0] != "breakpoint") fail(line.number, "expected breakpoint x y slope");
      nodes.emplace_back(parse_q(line.tokens[1], line.number), parse_q(line.tokens[2], line.number));
      slopes.push_back(parse_q(line.tokens[3], line.number));
      if (nodes.size() >= 2) {
        const auto& [x0, y0] = nodes[nodes.size() - 2];
        const auto& [x1, y1] = nodes.back();
        if (x1 <= x0) fail(line.number, "breakpoints must increase in x");
        if ((y1 - y0) / (x1 - x0) != slopes[slopes.size() - 2]) fail(line.number, "slope disagrees with breakpoints");
      }
    }
    if (nodes.empty()) fail(head.number, "epigraph needs breakpoints");
    const Rational last = slopes.back();
    if (last > 0) fail(lines.back().number, "final slope must be nonpositive");
    if (last < 0) {
      const auto [x, y] = nodes.back();
      nodes.emplace_back(Rational(x - y / last), Rational(0));
    }
    try {
      return epigraph_region(PiecewiseLinearFn::from_nodes(std::move(nodes), PiecewiseLinearFn::Shape::ConvexDecreasing));
    } catch (const Error& e) {
      fail(head.number, e.what());
    }
  }

  std::vector<Facet> facets;
  for (std::size_t j = i; j < lines.size(); ++j) {
    const auto& line = lines[j];
    const auto& t = line.tokens;
    if (t[0] != "halfspace" || t.size() != *k + 3 || t[*k + 1] != ">=") {
      fail(line.number, "expected halfspace a1 .. ak >= c");
    }
    Facet f;
    for (std::size_t c = 0; c < *k; ++c) f.normal.push_back(parse_q(t[c + 1], line.number));
    f.constant = parse_q(t[*k + 2], line.number);
    facets.push_back(std::move(f));
  }
  return halfspace_region(facets, *k);
}

ConeRep parse_cone(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "rank") fail(1, "expected rank <int>");
  const auto rank = parse_int(lines[0].tokens[1], lines[0].number);
  if (rank < 1) fail(lines[0].number, "rank must be positive");
  const auto r = static_cast<std::size_t>(rank);

  std::string kind;
  std::vector<RationalVector> normals, forms;
  std::vector<IndexVector> rays;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& t = line.tokens;
    if (!kind.empty() && t[0] != kind) fail(line.number, "cannot mix '" + kind + "' and '" + t[0] + "' lines");
    kind = t[0];
    if (kind == "halfspace") {
      if (t.size() != r + 1) throw Error(Errc::RankMismatch, "line " + std::to_string(line.number));
      RationalVector n;
      for (std::size_t c = 1; c < t.size(); ++c) n.push_back(parse_q(t[c], line.number));
      normals.push_back(std::move(n));
    } else if (kind == "ray") {
      if (t.size() != r + 1) throw Error(Errc::RankMismatch, "line " + std::to_string(line.number));
      IndexVector v;
      for (std::size_t c = 1; c < t.size(); ++c) v.push_back(parse_int(t[c], line.number));
      rays.push_back(std::move(v));
    } else if (kind == "form") {
      if (t.size() != r) throw Error(Errc::RankMismatch, "line " + std::to_string(line.number));
      RationalVector f;
      for (std::size_t c = 1; c < t.size(); ++c) f.push_back(parse_q(t[c], line.number));
      forms.push_back(std::move(f));
    } else {
      fail(line.number, "unknown cone line '" + kind + "'");
    }
  }
  if (kind == "ray") return ConeRep::rays(r, std::move(rays));
  if (kind == "form") return ConeRep::epigraph(r - 1, std::move(forms));
  return ConeRep::halfspaces(r, std::move(normals));
}

namespace {

class SystemParser {
 public:
  SystemParser(std::vector<Line> lines, std::filesystem::path base) : lines_(std::move(lines)), base_(std::move(base)) {}

  SystemExpr parse_root() {
    if (lines_.empty()) fail(1, "empty system file");
    pos_ = 0;
    auto sys = parse_node();
    if (pos_ != lines_.size()) fail(lines_[pos_].number, "unexpected trailing node");
    return sys;
  }

 private:
  std::vector<SystemExpr> children(const Line& parent, std::size_t count) {
    std::vector<SystemExpr> out;
    std::optional<std::size_t> child_indent;
    while (pos_ < lines_.size() && lines_[pos_].indent > parent.indent) {
      if (child_indent && lines_[pos_].indent != *child_indent) fail(lines_[pos_].number, "inconsistent indentation");
      child_indent = lines_[pos_].indent;
      out.push_back(parse_node());
    }
    if (out.size() != count) {
      fail(parent.number, "'" + parent.tokens[0] + "' expects " + std::to_string(count) + " child node(s), got " +
                              std::to_string(out.size()));
    }
    return out;
  }

  std::filesystem::path resolve(const std::string& p) const {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base_ / path;
  }

  SystemExpr parse_node() {
    const Line& line = lines_[pos_++];
    const auto& t = line.tokens;
    const std::string& head = t[0];
    auto args = [&](std::size_t lo, std::size_t hi) {
      if (t.size() - 1 < lo || t.size() - 1 > hi) fail(line.number, "wrong number of arguments to '" + head + "'");
    };
    if (head == "powers") {
      if (t.size() < 2) fail(line.number, "powers needs at least one ideal file");
      std::vector<MonomialIdeal> ideals;
      for (std::size_t i = 1; i < t.size(); ++i) ideals.push_back(load_ideal(resolve(t[i])));
      children(line, 0);
      return SystemExpr::ideal_powers(std::move(ideals));
    }
    if (head == "region") {
      args(1, 1);
      children(line, 0);
      return SystemExpr::region_system(load_region(resolve(t[1])));
    }
    if (head == "ceiling") {
      if (t.size() != 2 && !(t.size() == 4 && t[2] == "base")) fail(line.number, "expected ceiling <cone> [base <ideal>]");
      auto cone = load_cone(resolve(t[1]));
      auto base = t.size() == 4 ? load_ideal(resolve(t[3])) : MonomialIdeal::maximal(2);
      children(line, 0);
      return SystemExpr::ceiling(std::move(cone), std::move(base));
    }
    if (head == "pullback") {
      std::string joined;
      for (std::size_t i = 1; i < t.size(); ++i) joined += t[i] + " ";
      IntMatrix phi;
      std::istringstream rows(joined);
      for (std::string row; std::getline(rows, row, ';');) {
        std::istringstream is(row);
        std::vector<std::int64_t> r;
        for (std::string tok; is >> tok;) r.push_back(parse_int(tok, line.number));
        if (r.empty()) fail(line.number, "empty matrix row");
        phi.push_back(std::move(r));
      }
      if (phi.empty()) fail(line.number, "pullback needs a matrix");
      auto kids = children(line, 1);
      return SystemExpr::pullback(std::move(phi), std::move(kids[0]));
    }
    if (head == "product" || head == "intersect") {
      args(0, 0);
      auto kids = children(line, 2);
      return head == "product" ? SystemExpr::product(std::move(kids[0]), std::move(kids[1]))
                               : SystemExpr::intersect(std::move(kids[0]), std::move(kids[1]));
    }
    if (head == "truncate") {
      if (t.size() < 2) fail(line.number, "truncate needs a cone");
      ConeRep cone = ConeRep::full_space(1);
      if (t[1] == "halfspace" || t[1] == "ray" || t[1] == "form") {
        // Inline cone: lines separated by ';', rank taken from the first one.
        std::string joined;
        for (std::size_t i = 1; i < t.size(); ++i) joined += t[i] + " ";
        std::string body;
        std::size_t rank = 0;
        std::istringstream rows(joined);
        for (std::string row; std::getline(rows, row, ';');) {
          std::istringstream is(row);
          std::vector<std::string> toks;
          for (std::string tok; is >> tok;) toks.push_back(tok);
          if (toks.empty()) continue;
          if (rank == 0) rank = toks[0] == "form" ? toks.size() : toks.size() - 1;
          body += row + "\n";
        }
        cone = parse_cone("rank " + std::to_string(rank) + "\n" + body);
      } else {
        args(1, 1);
        cone = load_cone(resolve(t[1]));
      }
      auto kids = children(line, 1);
      return SystemExpr::truncate(std::move(kids[0]), std::move(cone));
    }
    if (head == "colon") {
      args(1, 1);
      auto ideal = load_ideal(resolve(t[1]));
      auto kids = children(line, 1);
      return SystemExpr::colon(std::move(kids[0]), std::move(ideal));
    }
    fail(line.number, "unknown node '" + head + "'");
  }

  std::vector<Line> lines_;
  std::filesystem::path base_;
  std::size_t pos_ = 0;
};

}  // namespace

SystemExpr parse_system(std::string_view text, const std::filesystem::path& base_dir) {
  return SystemParser(split_lines(text), base_dir).parse_root();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

template <class T, class F>
T load_with(const std::filesystem::path& path, F&& parse) {
  const auto text = read_file(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    const std::string what = e.what();
    const std::size_t skip = errc_name(e.code()).size() + 2;
    throw Error(e.code(), path.string() + ": " + what.substr(std::min(skip, what.size())));
  }
}

}  // namespace

MonomialIdeal load_ideal(const std::filesystem::path& path) {
  return load_with<MonomialIdeal>(path, [](const std::string& s) { return parse_ideal(s); });
}

Region load_region(const std::filesystem::path& path) {
  return load_with<Region>(path, [](const std::string& s) { return parse_region(s); });
}

ConeRep load_cone(const std::filesystem::path& path) {
  return load_with<ConeRep>(path, [](const std::string& s) { return parse_cone(s); });
}

SystemExpr load_system(const std::filesystem::path& path) {
  const auto base = path.parent_path();
  return load_with<SystemExpr>(path, [&](const std::string& s) { return parse_system(s, base); });
}

IndexVector parse_index_vector(std::string_view text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == ',' || c == '(' || c == ')') ? ' ' : c;
  std::istringstream is(cleaned);
  IndexVector out;
  for (std::string tok; is >> tok;) out.push_back(parse_int(tok, 1));
  if (out.empty()) throw Error(Errc::Parse, "empty index vector");
  return out;
}

}  // namespace msi
