#include "padcat/cubic.hpp"

namespace padcat {

namespace {

// x^3 - x - 1 over exact rationals.
BigRat psi(const BigRat& x) { return x * x * x - x - 1; }

// 23 x^3 - 5 x - 1 over exact rationals (minimal polynomial of `a`).
BigRat mina(const BigRat& x) { return 23 * x * x * x - 5 * x - 1; }

}  // namespace

RealBall alpha_cardano(Prec prec) {
  RealBall s69 = sqrt(RealBall(69, prec));
  RealBall r1 = root(RealBall(108, prec) + RealBall(12, prec) * s69, 3);
  RealBall r2 = root(RealBall(108, prec) - RealBall(12, prec) * s69, 3);
  return (r1 + r2) / RealBall(6, prec);
}

CubicData compute_cubic(Prec prec) {
  if (prec < kMinPrec)
    throw PrecisionError("compute_cubic: precision floor is 64 bits");

  // Exact sign-change bracket on [1.3, 1.4]; psi is strictly increasing there
  // (psi'(x) = 3x^2 - 1 >= 4.07), so the root is unique in the bracket.
  const BigRat bracket_lo(13, 10), bracket_hi(14, 10);
  if (!(psi(bracket_lo) < 0 && psi(bracket_hi) > 0))
    throw std::logic_error("compute_cubic: bracket does not straddle the root");

  // Newton iteration in plain MPFR for an approximation.
  mpfr_t x, num, den;
  mpfr_init2(x, prec + 32);
  mpfr_init2(num, prec + 32);
  mpfr_init2(den, prec + 32);
  mpfr_set_d(x, 1.3247, MPFR_RNDN);
  int iters = 3;
  while ((Prec(1) << iters) < prec + 32) ++iters;
  for (int i = 0; i < iters + 2; ++i) {
    // x <- x - (x^3 - x - 1) / (3x^2 - 1)
    mpfr_pow_ui(num, x, 3, MPFR_RNDN);
    mpfr_sub(num, num, x, MPFR_RNDN);
    mpfr_sub_ui(num, num, 1, MPFR_RNDN);
    mpfr_sqr(den, x, MPFR_RNDN);
    mpfr_mul_ui(den, den, 3, MPFR_RNDN);
    mpfr_sub_ui(den, den, 1, MPFR_RNDN);
    mpfr_div(num, num, den, MPFR_RNDN);
    mpfr_sub(x, x, num, MPFR_RNDN);
  }
  mpq_t approx_q;
  mpq_init(approx_q);
  mpfr_get_q(approx_q, x);
  BigRat approx(approx_q);
  mpq_clear(approx_q);
  mpfr_clear(x);
  mpfr_clear(num);
  mpfr_clear(den);

  // Certify by exact sign change across [approx - eps, approx + eps].
  BigRat eps(1);
  mpz_mul_2exp(eps.get_den().get_mpz_t(), eps.get_den().get_mpz_t(),
               static_cast<unsigned long>(prec > 8 ? prec - 8 : 1));
  eps.canonicalize();
  RealBall alpha;
  bool certified = false;
  for (int widen = 0; widen < 8; ++widen) {
    BigRat lo = approx - eps, hi = approx + eps;
    if (lo > bracket_lo && hi < bracket_hi && psi(lo) < 0 && psi(hi) > 0) {
      alpha = RealBall::of_endpoints(lo, hi, prec);
      certified = true;
      break;
    }
    eps *= 2;
  }
  if (!certified)
    throw PrecisionError("compute_cubic: could not certify a sign change around the Newton approximation");

  CubicData out;
  out.prec = prec;
  out.alpha = alpha;
  out.beta_abs = RealBall(1, prec) / sqrt(alpha);
  out.a = alpha * (alpha + RealBall(1, prec)) /
          (RealBall(2, prec) * alpha + RealBall(3, prec));
  out.b_abs = sqrt(RealBall::of_rational(BigRat(1, 23), prec) / out.a);

  // Published numeric estimates, certified.
  auto inside = [](const RealBall& v, const BigRat& lo, const BigRat& hi) {
    return v.certainly_gt(lo) && v.certainly_lt(hi);
  };
  if (!inside(out.alpha, BigRat(132, 100), BigRat(133, 100)))
    throw PrecisionError("compute_cubic: alpha not certified inside (1.32, 1.33)");
  if (!inside(out.beta_abs, BigRat(86, 100), BigRat(87, 100)))
    throw PrecisionError("compute_cubic: |beta| not certified inside (0.86, 0.87)");
  if (!inside(out.a, BigRat(54, 100), BigRat(55, 100)))
    throw PrecisionError("compute_cubic: a not certified inside (0.54, 0.55)");
  if (!inside(out.b_abs, BigRat(28, 100), BigRat(29, 100)))
    throw PrecisionError("compute_cubic: |b| not certified inside (0.28, 0.29)");

  // a's minimal polynomial 23x^3 - 5x - 1 changes sign across the a-interval
  // (exact rational check; the polynomial is increasing on [0.5, inf)).
  if (!(mina(out.a.lo_rational()) < 0 && mina(out.a.hi_rational()) > 0))
    throw PrecisionError("compute_cubic: minimal polynomial of a not certified");

  // |beta|^2 * alpha must contain 1.
  if (!((out.beta_abs * out.beta_abs * out.alpha).contains(BigRat(1))))
    throw PrecisionError("compute_cubic: |beta|^2 * alpha does not contain 1");

  return out;
}

}  // namespace padcat
