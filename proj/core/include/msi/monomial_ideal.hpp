#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msi/rational.hpp"

namespace msi {

using Exponent = std::int64_t;
/// Exponent vector v of the monomial x^v; entries are nonnegative.
using ExponentVector = std::vector<Exponent>;

/// A monomial ideal in k variables, stored by its minimal generators.
///
/// The generator list is a lexicographically sorted antichain, so two ideals
/// are equal iff their generator lists are equal. The zero ideal has no
/// generators; the unit ideal is generated by the zero vector.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(std::size_t dim);
  static MonomialIdeal unit(std::size_t dim);
  /// (x_1, ..., x_k)
  static MonomialIdeal maximal(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  friend MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t dim);
  MonomialIdeal(std::size_t dim, std::vector<ExponentVector> gens) : dim_(dim), gens_(std::move(gens)) {}

  std::size_t dim_;
  std::vector<ExponentVector> gens_;
};

/// Canonical ideal generated by `gens`; an empty list gives the zero ideal.
MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t dim);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// (a : b); throws ZeroDivisorIdeal when b is zero.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
/// a^n, with a^n = (1) for n <= 0.
MonomialIdeal power(const MonomialIdeal& a, std::int64_t n);

bool contains_monomial(const MonomialIdeal& a, const ExponentVector& v);
/// a ⊆ b
bool contains(const MonomialIdeal& b, const MonomialIdeal& a);
/// a·b ⊆ c, checked on generator sums without forming the product.
bool product_contained_in(const MonomialIdeal& a, const MonomialIdeal& b, const MonomialIdeal& c);

/// True when every axis carries a pure-power generator.
bool is_cofinite(const MonomialIdeal& a);
/// dim_k R/a; throws NotCofinite when infinite.
std::int64_t colength(const MonomialIdeal& a);

/// min over generators of <w, v>; w must be nonnegative.
Rational weighted_order(const MonomialIdeal& a, const RationalVector& w);
/// ord at the origin, i.e. weighted_order with w = (1, ..., 1).
Rational order(const MonomialIdeal& a);
/// Arnold multiplicity 1/lct, read off the Newton polyhedron diagonal.
Rational arn(const MonomialIdeal& a);
/// Log-canonical threshold; nullopt stands for +infinity (unit ideal).
std::optional<Rational> lct(const MonomialIdeal& a);
/// Samuel multiplicity k! * covolume of the Newton polyhedron.
Rational multiplicity(const MonomialIdeal& a);

std::string to_string(const MonomialIdeal& a);

}  // namespace msi
