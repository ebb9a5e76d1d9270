#include "padcat/heights.hpp"

namespace padcat {

namespace {

void check_digits(int d1, int d2) {
  if (d1 < 1 || d1 > 9) throw std::invalid_argument("d1 must be in 1..9");
  if (d2 < 0 || d2 > 9) throw std::invalid_argument("d2 must be in 0..9");
  if (d1 == d2) throw std::invalid_argument("d1 and d2 must differ");
}

}  // namespace

RealBall log_height_rational(const BigInt& p, const BigInt& q, Prec prec) {
  if (q <= 0) throw std::invalid_argument("log_height_rational: q must be positive");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw std::invalid_argument("log_height_rational: p/q must be in lowest terms");
  BigInt m = abs(p) > q ? abs(p) : q;
  if (m == 1) return RealBall(0, prec);
  return log(RealBall::exact(m, prec));
}

RealBall height_of_a(Prec prec) {
  return log_int(23, prec) / RealBall(3, prec);
}

RealBall height_eta1_step1(int d1, Prec prec) {
  if (d1 < 1 || d1 > 9) throw std::invalid_argument("d1 must be in 1..9");
  // Worst case over digits: h(d1) <= log 9.
  RealBall bound = RealBall(2, prec) * log_int(9, prec) + height_of_a(prec);
  if (!bound.certainly_le(rational_from_decimal("5.44")))
    throw PrecisionError("height_eta1_step1: bound not certified <= 5.44");
  return bound;
}

RealBall height_eta1_step2_tail(Prec prec) {
  return RealBall(4, prec) * log_int(9, prec) + height_of_a(prec) +
         RealBall(2, prec) * log_int(2, prec);
}

RealBall height_eta1_step2(int d1, int d2, long l1, Prec prec) {
  check_digits(d1, d2);
  if (l1 < 1) throw std::invalid_argument("l1 must be >= 1");
  return RealBall(l1, prec) * log_int(10, prec) + height_eta1_step2_tail(prec);
}

}  // namespace padcat
