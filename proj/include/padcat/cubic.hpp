#pragma once

#include "padcat/real_ball.hpp"

namespace padcat {

// Certified root system of x^3 - x - 1 and the Binet coefficients used by
// the Padovan closed form. Complex quantities are carried by modulus only.
struct CubicData {
  RealBall alpha;     // real root of x^3 - x - 1, in (1.32, 1.33)
  RealBall beta_abs;  // |beta| = |gamma| = alpha^(-1/2), in (0.86, 0.87)
  RealBall a;         // alpha(alpha+1)/(2alpha+3), in (0.54, 0.55)
  RealBall b_abs;     // |b| = |c| = sqrt(1/(23a)), in (0.28, 0.29)
  Prec prec = 0;
};

// Certified evaluation at the requested precision (bits). alpha is isolated
// by exact-rational sign-change bracketing around a Newton approximation;
// everything else follows by ball arithmetic. Throws PrecisionError if the
// precision is below the floor or certification fails.
CubicData compute_cubic(Prec prec);

// The radical expression (cbrt(108+12*sqrt(69)) + cbrt(108-12*sqrt(69)))/6
// evaluated in ball arithmetic. Cross-check only; the pipeline uses the
// isolated root.
RealBall alpha_cardano(Prec prec);

}  // namespace padcat
