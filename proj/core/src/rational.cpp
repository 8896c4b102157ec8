#include "msi/rational.hpp"

#include <cctype>
#include <sstream>

#include "msi/error.hpp"

namespace msi {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ZeroDivisorIdeal: return "ZeroDivisorIdeal";
    case Errc::ZeroIdeal: return "ZeroIdeal";
    case Errc::NotCofinite: return "NotCofinite";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::UnboundedComplement: return "UnboundedComplement";
    case Errc::NonpositiveScale: return "NonpositiveScale";
    case Errc::EmptyRegion: return "EmptyRegion";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::NotRegionExpressible: return "NotRegionExpressible";
    case Errc::ZeroIdealInDirection: return "ZeroIdealInDirection";
    case Errc::EvaluationOutOfDomain: return "EvaluationOutOfDomain";
    case Errc::Parse: return "ParseError";
  }
  return "Error";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  Rational q{Integer(std::to_string(num)), Integer(std::to_string(den))};
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

Integer ceil(const Rational& q) {
  Integer z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(Errc::InvalidArgument, "integer out of range: " + z.get_str());
  return z.get_si();
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_decimal(const Rational& q, int digits) {
  if (q == 0) return "0";
  std::string sign = q < 0 ? "-" : "";
  Rational a = abs(q);

  // Find e with 10^(digits-1) <= a * 10^(-e) < 10^digits.
  Integer ten = 10;
  Integer lo, hi;
  mpz_pow_ui(lo.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(digits - 1));
  mpz_pow_ui(hi.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(digits));

  long e = 0;
  {
    // Estimate from digit counts, then correct.
    long num_digits = static_cast<long>(a.get_num().get_str().size());
    long den_digits = static_cast<long>(a.get_den().get_str().size());
    e = num_digits - den_digits - digits + 1;
  }
  auto scaled = [&](long exp10) {
    Rational s = a;
    Integer p;
    if (exp10 >= 0) {
      mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(exp10));
      s /= Rational(p);
    } else {
      mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-exp10));
      s *= Rational(p);
    }
    return s;
  };
  Rational s = scaled(e);
  while (s >= Rational(hi)) s = scaled(++e);
  while (s < Rational(lo)) s = scaled(--e);

  // Round half to even.
  Integer m = floor(s);
  Rational frac = s - Rational(m);
  Rational half = make_rational(1, 2);
  if (frac > half || (frac == half && mpz_odd_p(m.get_mpz_t()))) m += 1;
  if (m == hi) {
    m = lo;
    ++e;
  }

  std::string mant = m.get_str();  // exactly `digits` characters
  long point = static_cast<long>(mant.size()) + e;  // position of decimal point
  std::string out;
  if (point > digits || point < -4) {
    std::string frac_part = mant.substr(1);
    while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
    out = mant.substr(0, 1);
    if (!frac_part.empty()) out += "." + frac_part;
    long exp10 = point - 1;
    std::ostringstream os;
    os << out << 'e' << (exp10 < 0 ? '-' : '+') << (std::labs(exp10) < 10 ? "0" : "")
       << std::labs(exp10);
    return sign + os.str();
  }
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + mant;
  } else {
    out = mant.substr(0, static_cast<std::size_t>(point));
    if (static_cast<std::size_t>(point) < mant.size()) out += "." + mant.substr(static_cast<std::size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sign + out;
}

Rational parse_rational(std::string_view text) {
  std::string t(text);
  auto bad = [&]() { return Error(Errc::Parse, "not a rational number: '" + t + "'"); };
  if (t.empty()) throw bad();
  std::size_t slash = t.find('/');
  std::size_t dot = t.find('.');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  if (slash != std::string::npos) {
    std::string n = t.substr(0, slash), d = t.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d)) throw bad();
    Integer den(strip_plus(d));
    if (den == 0) throw bad();
    Rational q(Integer(strip_plus(n)), den);
    q.canonicalize();
    return q;
  }
  if (dot != std::string::npos) {
    std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    std::string digits = (ip == "-" || ip == "+" || ip.empty()) ? "0" : ip;
    if (!valid_int(digits) || fp.empty() || !valid_int(fp) || fp[0] == '-' || fp[0] == '+') throw bad();
    Integer whole(strip_plus(digits));
    Integer f(fp);
    Integer scale;
    Integer ten = 10;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), fp.size());
    Integer magnitude = abs(whole) * scale + f;
    Rational q(neg ? Integer(-magnitude) : magnitude, scale);
    q.canonicalize();
    return q;
  }
  if (!valid_int(t)) throw bad();
  return Rational(Integer(strip_plus(t)));
}

std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace msi
