#include "padcat/real_ball.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <vector>

namespace padcat {

Prec digits_to_bits(long digits) {
  if (digits < 2) throw std::invalid_argument("precision must be at least 2 digits");
  // log2(10) = 3.3219...; 16 guard bits.
  return static_cast<Prec>(digits * 3.3220 + 16);
}

BigRat rational_from_decimal(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty decimal literal");

  bool neg = false;
  size_t i = 0;
  if (t[i] == '+' || t[i] == '-') {
    neg = (t[i] == '-');
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false, seen_digit = false;
  for (; i < t.size() && t[i] != 'e' && t[i] != 'E'; ++i) {
    if (t[i] == '.') {
      if (seen_point) throw std::invalid_argument("bad decimal literal: " + s);
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(t[i]))) {
      digits.push_back(t[i]);
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else {
      throw std::invalid_argument("bad decimal literal: " + s);
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad decimal literal: " + s);
  long expo = 0;
  if (i < t.size()) {  // exponent part
    ++i;
    if (i >= t.size()) throw std::invalid_argument("bad decimal literal: " + s);
    expo = std::stol(t.substr(i));
  }
  BigInt num(digits.empty() ? std::string("0") : digits, 10);
  if (neg) num = -num;
  long net = expo - frac_digits;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(net)));
  BigRat r;
  if (net >= 0)
    r = BigRat(num * scale);
  else
    r = BigRat(num, scale);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// construction / destruction

RealBall::RealBall(Prec prec, bool) : prec_(std::max<Prec>(prec, kMinPrec)) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
}

RealBall::RealBall() : RealBall(kMinPrec, true) { set_exact_zero(); }

RealBall::RealBall(long value, Prec prec) : RealBall(prec, true) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

RealBall::RealBall(const RealBall& other) : RealBall(other.prec_, true) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

RealBall::RealBall(RealBall&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, kMinPrec);
  mpfr_init2(hi_, kMinPrec);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

RealBall& RealBall::operator=(const RealBall& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.prec_);
    mpfr_set_prec(hi_, other.prec_);
    prec_ = other.prec_;
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

RealBall& RealBall::operator=(RealBall&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    std::swap(prec_, other.prec_);
  }
  return *this;
}

RealBall::~RealBall() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void RealBall::set_exact_zero() {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealBall RealBall::exact(const BigInt& n, Prec prec) {
  RealBall r(prec, true);
  mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
  return r;
}

RealBall RealBall::of_rational(const BigRat& q, Prec prec) {
  RealBall r(prec, true);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealBall RealBall::of_decimal(const std::string& s, Prec prec) {
  return of_rational(rational_from_decimal(s), prec);
}

RealBall RealBall::of_endpoints(const BigRat& lo, const BigRat& hi, Prec prec) {
  if (lo > hi) throw std::invalid_argument("of_endpoints: lo > hi");
  RealBall r(prec, true);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

// ---------------------------------------------------------------------------
// accessors

bool RealBall::is_exact() const { return mpfr_equal_p(lo_, hi_) != 0; }

static BigRat mpfr_to_rational(const mpfr_t x) {
  if (!mpfr_number_p(x)) throw std::range_error("non-finite interval endpoint");
  if (mpfr_zero_p(x)) return BigRat(0);
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, x);
  BigRat out(q);
  mpq_clear(q);
  return out;
}

BigRat RealBall::lo_rational() const { return mpfr_to_rational(lo_); }
BigRat RealBall::hi_rational() const { return mpfr_to_rational(hi_); }

std::string RealBall::midpoint_string(long digits) const {
  RealBall mid(prec_, true);
  mpfr_add(mid.lo_, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid.lo_, mid.lo_, 1, MPFR_RNDN);
  char* s = nullptr;
  // %.*Rg prints `digits` significant digits, round-to-nearest.
  if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), mid.lo_) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string RealBall::radius_string() const {
  if (is_exact()) return "0";
  mpfr_t r;
  mpfr_init2(r, kMinPrec);
  mpfr_sub(r, hi_, lo_, MPFR_RNDU);
  mpfr_div_2ui(r, r, 1, MPFR_RNDU);
  mpfr_nextabove(r);
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.2Re", r) < 0) {
    mpfr_clear(r);
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(s);
  mpfr_free_str(s);
  mpfr_clear(r);
  return out;
}

std::string RealBall::to_string(long digits) const {
  if (is_exact() && mpfr_integer_p(lo_)) {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.0Rf", lo_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }
  return midpoint_string(digits) + " +/- " + radius_string();
}

double RealBall::midpoint_double() const {
  mpfr_t m;
  mpfr_init2(m, 64);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

// ---------------------------------------------------------------------------
// predicates

bool RealBall::contains(const BigRat& x) const {
  return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, x.get_mpq_t()) >= 0;
}

bool RealBall::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

Cmp RealBall::compare(const RealBall& other) const {
  if (mpfr_less_p(hi_, other.lo_)) return Cmp::Less;
  if (mpfr_greater_p(lo_, other.hi_)) return Cmp::Greater;
  return Cmp::Undecided;
}

bool RealBall::certainly_less(const RealBall& other) const {
  return compare(other) == Cmp::Less;
}
bool RealBall::certainly_greater(const RealBall& other) const {
  return compare(other) == Cmp::Greater;
}
bool RealBall::certainly_le(const RealBall& other) const {
  return mpfr_lessequal_p(hi_, other.lo_) != 0;
}
bool RealBall::certainly_ge(const RealBall& other) const {
  return mpfr_greaterequal_p(lo_, other.hi_) != 0;
}
bool RealBall::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool RealBall::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

bool RealBall::certainly_gt(const BigRat& x) const {
  return mpfr_cmp_q(lo_, x.get_mpq_t()) > 0;
}
bool RealBall::certainly_lt(const BigRat& x) const {
  return mpfr_cmp_q(hi_, x.get_mpq_t()) < 0;
}
bool RealBall::certainly_ge(const BigRat& x) const {
  return mpfr_cmp_q(lo_, x.get_mpq_t()) >= 0;
}
bool RealBall::certainly_le(const BigRat& x) const {
  return mpfr_cmp_q(hi_, x.get_mpq_t()) <= 0;
}

bool RealBall::overlaps(const RealBall& other) const {
  return !(certainly_less(other) || certainly_greater(other));
}

std::optional<BigInt> RealBall::unique_floor() const {
  BigInt flo = floor_of_lower();
  BigInt fhi;
  mpfr_get_z(fhi.get_mpz_t(), hi_, MPFR_RNDD);
  if (flo == fhi) return flo;
  return std::nullopt;
}

BigInt RealBall::floor_of_lower() const {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
  return z;
}

BigInt RealBall::ceil_of_upper() const {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDU);
  return z;
}

// ---------------------------------------------------------------------------
// arithmetic

static Prec join_prec(const RealBall& a, const RealBall& b) {
  return std::max(a.precision(), b.precision());
}

RealBall operator+(const RealBall& a, const RealBall& b) {
  RealBall r(join_prec(a, b), true);
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

RealBall operator-(const RealBall& a, const RealBall& b) {
  RealBall r(join_prec(a, b), true);
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

RealBall operator-(const RealBall& a) {
  RealBall r(a.precision(), true);
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

RealBall operator*(const RealBall& a, const RealBall& b) {
  RealBall r(join_prec(a, b), true);
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as)
    for (auto y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

RealBall operator/(const RealBall& a, const RealBall& b) {
  if (b.contains_zero()) {
    if (b.is_exact()) throw std::domain_error("division by exact zero interval");
    throw PrecisionError("division by an interval containing zero");
  }
  RealBall r(join_prec(a, b), true);
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as)
    for (auto y : bs) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

RealBall abs(const RealBall& a) {
  RealBall r(a.precision(), true);
  if (mpfr_sgn(a.lo_) >= 0) {
    mpfr_set(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_set(r.hi_, a.hi_, MPFR_RNDU);
  } else if (mpfr_sgn(a.hi_) <= 0) {
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    if (mpfr_less_p(r.hi_, a.hi_)) mpfr_set(r.hi_, a.hi_, MPFR_RNDU);
  }
  return r;
}

RealBall sqrt(const RealBall& a) {
  if (mpfr_sgn(a.lo_) < 0) {
    if (a.certainly_negative()) throw std::domain_error("sqrt of a negative interval");
    throw PrecisionError("sqrt: interval not certified non-negative");
  }
  RealBall r(a.precision(), true);
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

RealBall root(const RealBall& a, unsigned long k) {
  if (k == 0) throw std::invalid_argument("root: k must be positive");
  if (mpfr_sgn(a.lo_) < 0) {
    if (a.certainly_negative()) throw std::domain_error("root of a negative interval");
    throw PrecisionError("root: interval not certified non-negative");
  }
  RealBall r(a.precision(), true);
  mpfr_rootn_ui(r.lo_, a.lo_, k, MPFR_RNDD);
  mpfr_rootn_ui(r.hi_, a.hi_, k, MPFR_RNDU);
  return r;
}

RealBall log(const RealBall& a) {
  if (mpfr_sgn(a.lo_) <= 0) {
    if (a.certainly_negative()) throw std::domain_error("log of a negative interval");
    throw PrecisionError("log: interval not certified positive");
  }
  RealBall r(a.precision(), true);
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

RealBall exp(const RealBall& a) {
  RealBall r(a.precision(), true);
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

RealBall pow_int(const RealBall& a, long n) {
  if (n == 0) return RealBall(1, a.precision());
  if (n < 0) return RealBall(1, a.precision()) / pow_int(a, -n);
  RealBall r(a.precision(), true);
  const bool even = (n % 2 == 0);
  if (mpfr_sgn(a.lo_) >= 0) {
    mpfr_pow_si(r.lo_, a.lo_, n, MPFR_RNDD);
    mpfr_pow_si(r.hi_, a.hi_, n, MPFR_RNDU);
  } else if (mpfr_sgn(a.hi_) <= 0) {
    if (even) {
      mpfr_pow_si(r.lo_, a.hi_, n, MPFR_RNDD);
      mpfr_pow_si(r.hi_, a.lo_, n, MPFR_RNDU);
    } else {
      mpfr_pow_si(r.lo_, a.lo_, n, MPFR_RNDD);
      mpfr_pow_si(r.hi_, a.hi_, n, MPFR_RNDU);
    }
  } else if (even) {
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_pow_si(t, a.lo_, n, MPFR_RNDU);
    mpfr_pow_si(r.hi_, a.hi_, n, MPFR_RNDU);
    if (mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
  } else {
    mpfr_pow_si(r.lo_, a.lo_, n, MPFR_RNDD);
    mpfr_pow_si(r.hi_, a.hi_, n, MPFR_RNDU);
  }
  return r;
}

RealBall log_int(long n, Prec prec) {
  if (n <= 0) throw std::domain_error("log_int: argument must be positive");
  return log(RealBall(n, prec));
}

}  // namespace padcat
