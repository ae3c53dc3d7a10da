#include "geom/rational.hpp"

#include <cctype>

namespace acs {

const char* err_name(Err code) {
  switch (code) {
    case Err::Parse: return "Parse";
    case Err::DivideByZero: return "DivideByZero";
    case Err::Degenerate: return "Degenerate";
    case Err::SelfIntersecting: return "SelfIntersecting";
    case Err::NotClosed: return "NotClosed";
    case Err::NotConvex: return "NotConvex";
    case Err::NotRectangle: return "NotRectangle";
    case Err::SingularMatrix: return "SingularMatrix";
    case Err::SingularAffine: return "SingularAffine";
    case Err::NotInjective: return "NotInjective";
    case Err::BoundaryMismatch: return "BoundaryMismatch";
    case Err::ApexOutside: return "ApexOutside";
    case Err::NotSimplePolygon: return "NotSimplePolygon";
    case Err::EpsilonTooLarge: return "EpsilonTooLarge";
    case Err::MarginTooSmall: return "MarginTooSmall";
    case Err::NotCollinear: return "NotCollinear";
    case Err::PointOutsideDomain: return "PointOutsideDomain";
    case Err::NotInjectiveOnDomain: return "NotInjectiveOnDomain";
    case Err::InvalidRegion: return "InvalidRegion";
    case Err::ViolationFound: return "ViolationFound";
    case Err::UnknownId: return "UnknownId";
    case Err::Io: return "Io";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

Rat rat(long num, long den) {
  if (den == 0) fail(Err::DivideByZero, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_of(const Int& num, const Int& den) {
  if (sgn(den) == 0) fail(Err::DivideByZero, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_from_string(const std::string& text) {
  std::size_t i = 0, n = text.size();
  auto bad = [&]() -> void { fail(Err::Parse, "bad rational literal: '" + text + "'"); };
  // Base 10 always; the mpz string constructor would read a leading zero as
  // an octal prefix.
  auto int10 = [&](const std::string& digits) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), digits.c_str(), 10) != 0) bad();
    return v;
  };
  if (n == 0) bad();
  std::string sign;
  if (text[i] == '+' || text[i] == '-') {
    if (text[i] == '-') sign = "-";
    ++i;
  }
  std::size_t digits_start = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits_start) bad();
  std::string whole = text.substr(digits_start, i - digits_start);
  if (i == n) {
    Rat q(int10(sign + whole));
    return q;
  }
  if (text[i] == '/') {
    std::size_t den_start = ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i != n || i == den_start) bad();
    Int den = int10(text.substr(den_start));
    if (sgn(den) == 0) fail(Err::DivideByZero, "zero denominator in '" + text + "'");
    Rat q(int10(sign + whole), den);
    q.canonicalize();
    return q;
  }
  if (text[i] == '.') {
    std::size_t frac_start = ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i != n || i == frac_start) bad();
    std::string frac = text.substr(frac_start);
    Int num = int10(whole + frac);
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    if (!sign.empty()) num = -num;
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  bad();
  std::abort();  // unreachable: bad() throws
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rat> rat_sqrt_exact(const Rat& q) {
  int s = sgn(q);
  if (s < 0) return std::nullopt;
  if (s == 0) return Rat(0);
  const Int num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return rat_of(rn, rd);
}

std::string rat_to_decimal(const Rat& q, int sig) {
  if (sig < 1) sig = 1;
  if (sgn(q) == 0) return "0";
  std::string sign = sgn(q) < 0 ? "-" : "";
  Int n = abs(q.get_num()), d = q.get_den();
  // Find E with 10^E <= n/d < 10^(E+1).
  long e_guess = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
                 static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10));
  auto pow10 = [](long k) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return p;
  };
  auto cmp_pow = [&](long e) {
    // sign of n/d - 10^e
    if (e >= 0) return cmp(n, d * pow10(e));
    return cmp(n * pow10(-e), d);
  };
  long E = e_guess - 2;
  while (cmp_pow(E + 1) >= 0) ++E;
  // Scale to sig digits and round half away from zero.
  long p = sig - 1 - E;
  Int num = n, den = d;
  if (p >= 0) num *= pow10(p); else den *= pow10(-p);
  Int scaled = (2 * num + den) / (2 * den);
  std::string digits = scaled.get_str();
  if (static_cast<long>(digits.size()) > sig) {  // rounding carried into a new digit
    ++E;
    digits.resize(sig);
  }
  // Place the decimal point: value == 0.digits * 10^(E+1).
  std::string out;
  long point = E + 1;  // number of digits before the decimal point
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + digits;
  } else if (point >= static_cast<long>(digits.size())) {
    out = digits + std::string(static_cast<std::size_t>(point - digits.size()), '0');
  } else {
    out = digits.substr(0, point) + "." + digits.substr(point);
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sign + out;
}

Rat rat_abs(const Rat& q) { return sgn(q) < 0 ? Rat(-q) : q; }
Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace acs
