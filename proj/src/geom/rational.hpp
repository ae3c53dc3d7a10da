#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace acs {

// Error codes surfaced by the library.  Constructors and operations that
// receive invalid geometry throw Error; anything tagged Internal is a bug.
enum class Err {
  Parse,
  DivideByZero,
  Degenerate,
  SelfIntersecting,
  NotClosed,
  NotConvex,
  NotRectangle,
  SingularMatrix,
  SingularAffine,
  NotInjective,
  BoundaryMismatch,
  ApexOutside,
  NotSimplePolygon,
  EpsilonTooLarge,
  MarginTooSmall,
  NotCollinear,
  PointOutsideDomain,
  NotInjectiveOnDomain,
  InvalidRegion,
  ViolationFound,
  UnknownId,
  Io,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

const char* err_name(Err code);

// Exact arithmetic backend.  Rat is always kept canonical: positive
// denominator, gcd(num, den) == 1 (GMP maintains this for arithmetic on
// canonical operands; every constructor here canonicalizes).
using Int = mpz_class;
using Rat = mpq_class;

Rat rat(long num, long den = 1);
Rat rat_of(const Int& num, const Int& den);

// Accepts "p/q", an integer, or a decimal string; always exact.
Rat rat_from_string(const std::string& text);
std::string rat_to_string(const Rat& q);

// sqrt(q) when q is the square of a rational, otherwise nullopt.
std::optional<Rat> rat_sqrt_exact(const Rat& q);

// Exact decimal rendering with round-half-away-from-zero at the given number
// of significant digits.  Used only for output (SVG); never fed back in.
std::string rat_to_decimal(const Rat& q, int significant_digits);

inline int sgn(const Rat& q) { return static_cast<int>(mpq_sgn(q.get_mpq_t())); }
inline int sgn(const Int& z) { return static_cast<int>(mpz_sgn(z.get_mpz_t())); }

Rat rat_abs(const Rat& q);
Rat rat_min(const Rat& a, const Rat& b);
Rat rat_max(const Rat& a, const Rat& b);

}  // namespace acs
