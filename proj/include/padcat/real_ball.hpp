#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace padcat {

using BigInt = mpz_class;
using BigRat = mpq_class;
using Prec = mpfr_prec_t;

// Default working precision of the pipeline, in decimal digits.
inline constexpr long kDefaultDigits = 300;
inline constexpr Prec kMinPrec = 64;

Prec digits_to_bits(long digits);

// Raised when a strict comparison or domain condition cannot be decided at
// the current working precision. Callers may escalate and retry.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Cmp { Less, Greater, Undecided };

// Exact decimal literal ("1.70e44", "-0.0375413", "12") as a rational.
BigRat rational_from_decimal(const std::string& s);

// A certified enclosure of a real number: a closed interval [lo, hi] whose
// endpoints are MPFR numbers rounded outward at a stated working precision.
// Exposed as midpoint/radius for reporting. All arithmetic is containment
// preserving: the result interval contains every exact value reachable from
// exact values in the operand intervals.
class RealBall {
 public:
  RealBall();  // exact zero at kMinPrec
  explicit RealBall(long value, Prec prec = kMinPrec);
  RealBall(const RealBall& other);
  RealBall(RealBall&& other) noexcept;
  RealBall& operator=(const RealBall& other);
  RealBall& operator=(RealBall&& other) noexcept;
  ~RealBall();

  static RealBall exact(const BigInt& n, Prec prec);
  static RealBall of_rational(const BigRat& r, Prec prec);
  static RealBall of_decimal(const std::string& s, Prec prec);
  // Interval hull of two exact rational endpoints.
  static RealBall of_endpoints(const BigRat& lo, const BigRat& hi, Prec prec);

  Prec precision() const { return prec_; }
  bool is_exact() const;

  BigRat lo_rational() const;
  BigRat hi_rational() const;
  // Midpoint and radius of the stored interval, outward-safe.
  std::string midpoint_string(long digits = 30) const;
  std::string radius_string() const;
  std::string to_string(long digits = 30) const;
  double midpoint_double() const;

  bool contains(const BigRat& x) const;
  bool contains_zero() const;

  // Certified comparisons: a definite answer only when the intervals (or the
  // interval and the exact rational) are disjoint.
  Cmp compare(const RealBall& other) const;
  bool certainly_less(const RealBall& other) const;
  bool certainly_greater(const RealBall& other) const;
  bool certainly_le(const RealBall& other) const;   // hi <= other.lo
  bool certainly_ge(const RealBall& other) const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool certainly_gt(const BigRat& x) const;
  bool certainly_lt(const BigRat& x) const;
  bool certainly_ge(const BigRat& x) const;
  bool certainly_le(const BigRat& x) const;

  bool overlaps(const RealBall& other) const;

  // Certified floor: defined only when every point of the interval has the
  // same floor.
  std::optional<BigInt> unique_floor() const;
  BigInt floor_of_lower() const;
  BigInt ceil_of_upper() const;

  friend RealBall operator+(const RealBall& a, const RealBall& b);
  friend RealBall operator-(const RealBall& a, const RealBall& b);
  friend RealBall operator*(const RealBall& a, const RealBall& b);
  friend RealBall operator/(const RealBall& a, const RealBall& b);
  friend RealBall operator-(const RealBall& a);

  friend RealBall abs(const RealBall& a);
  friend RealBall sqrt(const RealBall& a);
  friend RealBall root(const RealBall& a, unsigned long k);
  friend RealBall log(const RealBall& a);
  friend RealBall exp(const RealBall& a);
  friend RealBall pow_int(const RealBall& a, long n);

 private:
  RealBall(Prec prec, bool);  // uninitialized endpoints at prec
  void set_exact_zero();

  mpfr_t lo_;
  mpfr_t hi_;
  Prec prec_;
};

RealBall operator+(const RealBall& a, const RealBall& b);
RealBall operator-(const RealBall& a, const RealBall& b);
RealBall operator*(const RealBall& a, const RealBall& b);
RealBall operator/(const RealBall& a, const RealBall& b);
RealBall operator-(const RealBall& a);
RealBall abs(const RealBall& a);
RealBall sqrt(const RealBall& a);
RealBall root(const RealBall& a, unsigned long k);
RealBall log(const RealBall& a);
RealBall exp(const RealBall& a);
RealBall pow_int(const RealBall& a, long n);

// log(n) for an exact integer n > 0 at the given precision.
RealBall log_int(long n, Prec prec);

}  // namespace padcat
