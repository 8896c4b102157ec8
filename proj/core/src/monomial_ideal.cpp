#include "msi/monomial_ideal.hpp"

#include <algorithm>
#include <limits>

#include "msi/error.hpp"
#include "msi/newton_geometry.hpp"

namespace msi {

namespace {

void check_same_dim(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim())
    throw Error(Errc::DimensionMismatch,
                "ideals in " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) + " variables");
}

bool dominates(const ExponentVector& v, const ExponentVector& g) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < g[i]) return false;
  return true;
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(std::size_t dim) { return MonomialIdeal(dim, {}); }

MonomialIdeal MonomialIdeal::unit(std::size_t dim) {
  return MonomialIdeal(dim, {ExponentVector(dim, 0)});
}

MonomialIdeal MonomialIdeal::maximal(std::size_t dim) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    ExponentVector e(dim, 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return minimalize(std::move(gens), dim);
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(), [](Exponent e) { return e == 0; });
}

MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t dim) {
  if (dim == 0) throw Error(Errc::InvalidArgument, "ideal dimension must be at least 1");
  for (const auto& g : gens) {
    if (g.size() != dim)
      throw Error(Errc::DimensionMismatch,
                  "exponent vector of length " + std::to_string(g.size()) + " in dimension " + std::to_string(dim));
    for (Exponent e : g)
      if (e < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // A dominating generator is lexicographically smaller, so one forward pass suffices.
  std::vector<ExponentVector> kept;
  if (dim == 2) {
    Exponent min_y = std::numeric_limits<Exponent>::max();
    for (auto& g : gens) {
      if (g[1] < min_y) {
        min_y = g[1];
        kept.push_back(std::move(g));
      }
    }
  } else {
    for (auto& g : gens) {
      bool dominated = std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& h) { return dominates(g, h); });
      if (!dominated) kept.push_back(std::move(g));
    }
  }
  return MonomialIdeal(dim, std::move(kept));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.dim());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<ExponentVector> sums;
  sums.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) {
      ExponentVector s(u.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = u[i] + v[i];
      sums.push_back(std::move(s));
    }
  return minimalize(std::move(sums), a.dim());
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.dim());
  std::vector<ExponentVector> maxima;
  maxima.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) {
      ExponentVector m(u.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(u[i], v[i]);
      maxima.push_back(std::move(m));
    }
  return minimalize(std::move(maxima), a.dim());
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a, b);
  if (b.is_zero()) throw Error(Errc::ZeroDivisorIdeal, "colon by the zero ideal");
  if (a.is_zero()) return a;
  MonomialIdeal result = MonomialIdeal::unit(a.dim());
  for (const auto& w : b.generators()) {
    std::vector<ExponentVector> shifted;
    shifted.reserve(a.generators().size());
    for (const auto& v : a.generators()) {
      ExponentVector s(v.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::max<Exponent>(v[i] - w[i], 0);
      shifted.push_back(std::move(s));
    }
    result = intersect(result, minimalize(std::move(shifted), a.dim()));
  }
  return result;
}

MonomialIdeal power(const MonomialIdeal& a, std::int64_t n) {
  if (n <= 0) return MonomialIdeal::unit(a.dim());
  if (a.is_zero() || a.is_unit()) return a;
  if (a == MonomialIdeal::maximal(a.dim())) {
    // All monomials of degree n.
    std::vector<ExponentVector> gens;
    ExponentVector e(a.dim(), 0);
    auto fill = [&](auto&& self, std::size_t i, Exponent left) -> void {
      if (i + 1 == e.size()) {
        e[i] = left;
        gens.push_back(e);
        return;
      }
      for (Exponent x = 0; x <= left; ++x) {
        e[i] = x;
        self(self, i + 1, left - x);
      }
    };
    fill(fill, 0, n);
    return minimalize(std::move(gens), a.dim());
  }
  MonomialIdeal result = MonomialIdeal::unit(a.dim());
  MonomialIdeal base = a;
  while (n > 0) {
    if (n & 1) result = product(result, base);
    n >>= 1;
    if (n > 0) base = product(base, base);
  }
  return result;
}

bool contains_monomial(const MonomialIdeal& a, const ExponentVector& v) {
  if (v.size() != a.dim())
    throw Error(Errc::DimensionMismatch, "monomial of length " + std::to_string(v.size()));
  return std::any_of(a.generators().begin(), a.generators().end(),
                     [&](const ExponentVector& g) { return dominates(v, g); });
}

bool contains(const MonomialIdeal& b, const MonomialIdeal& a) {
  check_same_dim(a, b);
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const ExponentVector& g) { return contains_monomial(b, g); });
}

bool product_contained_in(const MonomialIdeal& a, const MonomialIdeal& b, const MonomialIdeal& c) {
  check_same_dim(a, b);
  check_same_dim(a, c);
  ExponentVector s(a.dim());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) {
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = u[i] + v[i];
      if (!contains_monomial(c, s)) return false;
    }
  return true;
}

namespace {

// Smallest pure power exponent on each axis, or -1 when the axis has none.
std::vector<Exponent> axis_powers(const MonomialIdeal& a) {
  std::vector<Exponent> m(a.dim(), -1);
  for (const auto& g : a.generators()) {
    std::size_t nonzero = 0, axis = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] != 0) {
        ++nonzero;
        axis = i;
      }
    if (nonzero == 0) std::fill(m.begin(), m.end(), 0);
    if (nonzero == 1 && (m[axis] < 0 || g[axis] < m[axis])) m[axis] = g[axis];
  }
  return m;
}

}  // namespace

bool is_cofinite(const MonomialIdeal& a) {
  if (a.is_zero()) return false;
  auto m = axis_powers(a);
  return std::all_of(m.begin(), m.end(), [](Exponent e) { return e >= 0; });
}

std::int64_t colength(const MonomialIdeal& a) {
  if (a.is_zero()) throw Error(Errc::NotCofinite, "zero ideal has infinite colength");
  if (!is_cofinite(a)) throw Error(Errc::NotCofinite, "some axis carries no pure power in " + to_string(a));
  if (a.is_unit()) return 0;
  const auto bounds = axis_powers(a);
  const std::size_t k = a.dim();

  // Enumerate the staircase box over the first k-1 coordinates; along the last
  // coordinate the monomials outside `a` form an initial segment.
  std::int64_t count = 0;
  ExponentVector prefix(k - 1, 0);
  while (true) {
    Exponent last = bounds[k - 1];
    for (const auto& g : a.generators()) {
      bool below = true;
      for (std::size_t i = 0; i + 1 < k; ++i)
        if (g[i] > prefix[i]) {
          below = false;
          break;
        }
      if (below) last = std::min(last, g[k - 1]);
    }
    count += last;
    std::size_t i = 0;
    for (; i + 1 < k; ++i) {
      if (++prefix[i] < bounds[i]) break;
      prefix[i] = 0;
    }
    if (i + 1 >= k) break;
  }
  return count;
}

Rational weighted_order(const MonomialIdeal& a, const RationalVector& w) {
  if (a.is_zero()) throw Error(Errc::ZeroIdeal, "order of the zero ideal");
  if (w.size() != a.dim()) throw Error(Errc::DimensionMismatch, "weight vector length");
  for (const auto& wi : w)
    if (wi < 0) throw Error(Errc::NegativeWeight, "weights must be nonnegative");
  Rational best;
  bool first = true;
  for (const auto& g : a.generators()) {
    Rational s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) s += w[i] * Rational(static_cast<long>(g[i]));
    if (first || s < best) best = s;
    first = false;
  }
  return best;
}

Rational order(const MonomialIdeal& a) { return weighted_order(a, RationalVector(a.dim(), Rational(1))); }

Rational arn(const MonomialIdeal& a) {
  if (a.is_zero()) throw Error(Errc::ZeroIdeal, "Arn of the zero ideal");
  return diagonal_lambda(newton_polyhedron(a));
}

std::optional<Rational> lct(const MonomialIdeal& a) {
  Rational v = arn(a);
  if (v == 0) return std::nullopt;
  return Rational(1 / v);
}

Rational multiplicity(const MonomialIdeal& a) {
  if (a.is_zero()) throw Error(Errc::ZeroIdeal, "multiplicity of the zero ideal");
  if (!is_cofinite(a)) throw Error(Errc::NotCofinite, "multiplicity needs a cofinite ideal: " + to_string(a));
  Rational factorial = 1;
  for (std::size_t i = 2; i <= a.dim(); ++i) factorial *= static_cast<long>(i);
  return factorial * covolume(newton_polyhedron(a));
}

std::string to_string(const MonomialIdeal& a) {
  if (a.is_zero()) return "(0)";
  if (a.is_unit()) return "(1)";
  static const char* names[] = {"x", "y", "z"};
  std::string out = "(";
  bool first_gen = true;
  for (const auto& g : a.generators()) {
    if (!first_gen) out += ", ";
    first_gen = false;
    bool first_var = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      if (!first_var) out += "*";
      first_var = false;
      out += a.dim() <= 3 ? std::string(names[i]) : "x" + std::to_string(i + 1);
      if (g[i] > 1) out += "^" + std::to_string(g[i]);
    }
  }
  return out + ")";
}

}  // namespace msi
