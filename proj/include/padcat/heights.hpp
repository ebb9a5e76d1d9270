#pragma once

#include "padcat/real_ball.hpp"

namespace padcat {

// Logarithmic Weil height of the rational p/q in lowest terms: log max(|p|, q).
RealBall log_height_rational(const BigInt& p, const BigInt& q, Prec prec);

// h(a) = (1/3) log 23: the minimal polynomial 23x^3 - 5x - 1 of the Binet
// coefficient a has all zeros inside the unit circle, so only the leading
// coefficient contributes.
RealBall height_of_a(Prec prec);

// Uniform upper bound for h(9a/d1), d1 in 1..9, by the product rule:
// h(9) + h(a) + h(d1) <= 2 log 9 + (1/3) log 23 <= 5.44.
RealBall height_eta1_step1(int d1, Prec prec);

// Constant tail of the step-2 height chain: 4 log 9 + (1/3) log 23 + 2 log 2.
RealBall height_eta1_step2_tail(Prec prec);

// Numeric step-2 height bound for h((d1*10^l1 - (d1-d2))/(9a)):
// l1 log 10 + 4 log 9 + (1/3) log 23 + 2 log 2.
RealBall height_eta1_step2(int d1, int d2, long l1, Prec prec);

}  // namespace padcat
